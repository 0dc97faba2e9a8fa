#pragma once

#include <Eigen/LU>

#include "csrbf/assembly.hpp"
#include "csrbf/types.hpp"

namespace csrbf {

/// Gram pivot ratios below this raise rank_deficiency_error.
inline constexpr double kPivotRatioTolerance = 1e-12;

/// Second-level problem for a coarse space Q: the dense Gram Q^T A Q with a
/// pivoted LU behind it, plus the projector and coarse initial guess built
/// from it. Columns of Q are normalized to unit Euclidean norm before the
/// Gram is formed; rank deficiency is an error, not silently repaired.
class CoarseOperator {
 public:
  /// Empty coarse space: project() is the identity, initial_guess() is zero.
  CoarseOperator() = default;

  /// Forms Q^T A Q with exactly m applications of a and factorizes it.
  CoarseOperator(LinearOperator a, Matrix q);

  Index size() const { return q_.cols(); }       // m
  Index dimension() const { return q_.rows(); }  // n
  const Matrix& basis() const { return q_; }
  const Matrix& gram() const { return gram_; }

  /// (Q^T A Q)^{-1} v for an m-vector v.
  Vector solve_coarse(const Vector& v) const;

  /// P v = v - Q (Q^T A Q)^{-1} Q^T (A v); exactly one application of A.
  Vector project(const Vector& v) const;

  /// chi_0 = Q (Q^T A Q)^{-1} Q^T b; no application of A.
  Vector initial_guess(const Vector& b) const;

 private:
  LinearOperator a_;
  Matrix q_;
  Matrix gram_;
  Eigen::PartialPivLU<Matrix> lu_;
};

}  // namespace csrbf
