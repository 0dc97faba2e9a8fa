#include "csrbf/coarse.hpp"

#include <stdexcept>
#include <utility>

#include "csrbf/errors.hpp"

namespace csrbf {

CoarseOperator::CoarseOperator(LinearOperator a, Matrix q)
    : a_(std::move(a)), q_(std::move(q)) {
  const Index m = q_.cols();
  if (m == 0) return;
  if (q_.rows() < m) throw std::invalid_argument("CoarseOperator: more columns than rows");

  for (Index j = 0; j < m; ++j) {
    const double norm = q_.col(j).norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw rank_deficiency_error(j, "has zero or non-finite norm");
    q_.col(j) /= norm;
  }

  Matrix aq(q_.rows(), m);
  for (Index j = 0; j < m; ++j) aq.col(j) = a_(q_.col(j));
  gram_ = q_.transpose() * aq;

  lu_.compute(gram_);
  const auto pivots = lu_.matrixLU().diagonal().cwiseAbs();
  const double ratio = pivots.minCoeff() / pivots.maxCoeff();
  if (!(ratio >= kPivotRatioTolerance)) throw rank_deficiency_error(m, ratio);
}

Vector CoarseOperator::solve_coarse(const Vector& v) const {
  if (v.size() != size()) throw std::invalid_argument("solve_coarse: dimension mismatch");
  return lu_.solve(v);
}

Vector CoarseOperator::project(const Vector& v) const {
  if (size() == 0) return v;
  if (v.size() != dimension()) throw std::invalid_argument("project: dimension mismatch");
  const Vector av = a_(v);
  return v - q_ * lu_.solve(q_.transpose() * av);
}

Vector CoarseOperator::initial_guess(const Vector& b) const {
  if (size() == 0) return Vector::Zero(b.size());
  if (b.size() != dimension()) throw std::invalid_argument("initial_guess: dimension mismatch");
  return q_ * lu_.solve(q_.transpose() * b);
}

}  // namespace csrbf
