#include "csrbf/types.hpp"

#include <stdexcept>

namespace csrbf {

double phi_eval(const RadialBasis& basis, double r) {
  if (r < 0.0) throw std::invalid_argument("phi_eval: r must be non-negative");
  if (!(basis.support_radius > 0.0))
    throw std::invalid_argument("phi_eval: support radius must be positive");
  const double t = r / basis.support_radius;
  if (t >= 1.0) return 0.0;
  const double s = 1.0 - t;
  const double s2 = s * s;
  return s2 * s2 * (4.0 * t + 1.0);
}

void validate_problem(const InterpolationProblem& problem) {
  if (problem.dim != 2 && problem.dim != 3)
    throw std::invalid_argument("problem: dim must be 2 or 3");
  if (problem.sites.empty()) throw std::invalid_argument("problem: no sites");
  if (problem.values.size() != problem.size())
    throw std::invalid_argument("problem: values/sites size mismatch");
  if (!(problem.basis.support_radius > 0.0))
    throw std::invalid_argument("problem: support radius must be positive");
}

}  // namespace csrbf
