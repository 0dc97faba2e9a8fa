#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

namespace csrbf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Site / evaluation point in normalized [0,1]^d coordinates.
/// Unused trailing coordinates stay zero, so squared distances can be
/// taken over all three components regardless of the ambient dimension.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  double& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
};

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Point& a, const Point& b) {
  return std::sqrt(squared_distance(a, b));
}

enum class RadialBasisKind { WendlandC2 };

/// Compactly supported radial kernel: phi(r) == 0 for every r >= support_radius
/// and phi(0) == 1. Radius is in normalized coordinate units.
struct RadialBasis {
  RadialBasisKind kind = RadialBasisKind::WendlandC2;
  double support_radius = 0.1;
};

/// Wendland C2 profile (1 - t)^4 (4 t + 1) on t = r / support_radius.
/// Throws std::invalid_argument for r < 0 or a non-positive radius.
double phi_eval(const RadialBasis& basis, double r);

/// Scattered-data interpolation problem: values at pairwise-distinct sites,
/// a kernel, and an implicit degree-one polynomial tail with dim + 1 terms.
struct InterpolationProblem {
  std::vector<Point> sites;
  Vector values;
  RadialBasis basis;
  int dim = 2;  // 2 or 3

  Index size() const { return static_cast<Index>(sites.size()); }
  int poly_terms() const { return dim + 1; }
};

/// Shape checks only (sizes, dimension, radius). Pairwise distinctness is
/// enforced during assembly where the neighbor structure is available.
void validate_problem(const InterpolationProblem& problem);

/// chi = (lambda, c): kernel weights followed by the polynomial coefficients
/// in the monomial order (1, x1, ..., xd).
struct SolutionVector {
  Vector coeffs;
  Index n_sites = 0;

  auto lambda() const { return coeffs.head(n_sites); }
  auto poly() const { return coeffs.tail(coeffs.size() - n_sites); }
};

}  // namespace csrbf
