#pragma once

#include <utility>
#include <vector>

#include "csrbf/assembly.hpp"
#include "csrbf/coarse.hpp"
#include "csrbf/types.hpp"

namespace csrbf {

struct SolverConfig {
  /// Relative residual targets, strictly decreasing, each in (0, 1).
  std::vector<double> tolerances{1e-3, 1e-6};
  int max_iterations = 1000;
  bool record_history = true;
  /// Measure pairwise (Aw)_i conjugacy at exit (O(k^2) dot products).
  bool check_conjugacy = false;
};

struct SolveReport {
  /// tolerance -> first iteration index k with ||r_k||/||b|| <= tolerance,
  /// aligned with SolverConfig::tolerances; -1 when never reached.
  std::vector<std::pair<double, int>> iterations_per_tolerance;
  /// ||r_0|| / ||b|| after the initial guess (exactly 1 when starting at 0).
  double initial_residual_ratio = 1.0;
  /// ||r_k|| / ||b|| for k = 0..iterations (recurrence residual).
  std::vector<double> residual_history;
  bool converged = false;
  int iterations = 0;
  /// ||b - A chi|| / ||b|| recomputed from scratch at exit; surfaces any
  /// drift of the recurrence residual.
  double final_true_residual = 0.0;
  /// max over iterations of max_i |(Q^T r_k)_i| / ||b||; zero without a
  /// coarse space.
  double max_coarse_residual = 0.0;
  /// max |<(Aw)_i, (Aw)_j>| / (||(Aw)_i|| ||(Aw)_j||), i != j; only filled
  /// when SolverConfig::check_conjugacy is set.
  double max_direction_cosine = 0.0;

  int iterations_at(double tolerance) const;
};

struct SolveResult {
  Vector solution;
  SolveReport report;
};

/// Full (non-restarted) GCR with complete re-orthogonalization of the
/// search directions. One fresh operator application per iteration; the
/// cached (Aw)_i are updated from it. Stops when the relative residual
/// reaches the tightest tolerance or max_iterations is hit (non-converged
/// report, not an error). Throws gcr_breakdown_error when <Aw, Aw>
/// vanishes with a nonzero residual.
SolveResult gcr_solve(const LinearOperator& a, const Vector& b, const Vector& x0,
                      const SolverConfig& cfg);

/// GCR with coarse space correction: chi_0 from the coarse initial guess,
/// then per iteration one projection P r_k and one fresh operator
/// application. With an empty Q this is exactly gcr_solve from zero (same
/// arithmetic, same history). Column-rank problems in Q surface as
/// rank_deficiency_error from the Gram factorization.
SolveResult deflated_gcr_solve(const LinearOperator& a, const Vector& b, const Matrix& q,
                               const SolverConfig& cfg);

/// Variant reusing a prebuilt coarse operator (must wrap the same a).
SolveResult deflated_gcr_solve(const LinearOperator& a, const Vector& b,
                               const CoarseOperator& coarse, const SolverConfig& cfg);

}  // namespace csrbf
