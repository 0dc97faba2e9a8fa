#pragma once

#include <functional>

#include "csrbf/sparse.hpp"
#include "csrbf/types.hpp"

namespace csrbf {

/// Sites closer than this (normalized coordinates) make the system
/// singular and are rejected during assembly.
inline constexpr double kDuplicateSiteTolerance = 1e-12;

/// The saddle-point system
///
///   [ Phi  P ] [ lambda ]   [ f ]
///   [ P^T  0 ] [   c    ] = [ 0 ]
///
/// kept in block form; the (N+l) x (N+l) matrix is never materialized.
/// Phi is symmetric with unit diagonal, P holds the monomials
/// (1, x1, ..., xd) evaluated at the sites.
struct SaddleSystem {
  SparseMatrix phi;  // N x N
  Matrix poly;       // N x l
  Vector rhs;        // (f, 0), length N + l
  int dim = 2;

  Index n_sites() const { return phi.rows(); }
  Index n_poly() const { return poly.cols(); }
  Index size() const { return n_sites() + n_poly(); }
};

/// Assemble via grid neighbor search, O(N * mean neighbors). Rows of Phi are
/// computed independently (optionally in parallel); the result does not
/// depend on the thread count. Throws degenerate_sites_error when two sites
/// are closer than kDuplicateSiteTolerance.
SaddleSystem assemble(const InterpolationProblem& problem, unsigned threads = 0);

/// A x in block form: Phi x_l + P x_c on the first N entries, P^T x_l on
/// the trailing l.
Vector apply_saddle(const SaddleSystem& system, const Vector& x);

/// Right-hand side (values, 0) for a different channel sharing the same
/// assembled blocks.
Vector saddle_rhs(const SaddleSystem& system, const Vector& values);

using LinearOperator = std::function<Vector(const Vector&)>;

/// Wraps apply_saddle; the system must outlive the returned operator.
LinearOperator saddle_operator(const SaddleSystem& system);

}  // namespace csrbf
