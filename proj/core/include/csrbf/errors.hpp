#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csrbf {

/// File or format problem while reading/writing rasters or reports.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two interpolation sites closer than the duplicate tolerance; the
/// saddle system would be singular.
class degenerate_sites_error : public std::runtime_error {
 public:
  degenerate_sites_error(std::size_t i, std::size_t j, double dist)
      : std::runtime_error("degenerate input: sites " + std::to_string(i) +
                           " and " + std::to_string(j) +
                           " are closer than the duplicate tolerance (distance " +
                           std::to_string(dist) + ")"),
        first(i),
        second(j) {}

  std::size_t first = 0;
  std::size_t second = 0;
};

/// <Aw, Aw> vanished while the residual is still nonzero.
class gcr_breakdown_error : public std::runtime_error {
 public:
  explicit gcr_breakdown_error(int iter)
      : std::runtime_error("GCR breakdown: <Aw, Aw> = 0 with nonzero residual at iteration " +
                           std::to_string(iter)),
        iteration(iter) {}

  int iteration = 0;
};

/// Coarse Gram factorization detected numerical rank deficiency.
class rank_deficiency_error : public std::runtime_error {
 public:
  rank_deficiency_error(std::ptrdiff_t columns, double pivot_ratio)
      : std::runtime_error("coarse space rank deficient: " + std::to_string(columns) +
                           " columns, pivot ratio " + std::to_string(pivot_ratio)),
        columns(columns),
        pivot_ratio(pivot_ratio) {}

  rank_deficiency_error(std::ptrdiff_t column, const std::string& what)
      : std::runtime_error("coarse space rank deficient: column " + std::to_string(column) +
                           " " + what),
        columns(column) {}

  std::ptrdiff_t columns = 0;
  double pivot_ratio = 0.0;
};

/// The densified saddle system has no solution to working precision.
class singular_system_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csrbf
