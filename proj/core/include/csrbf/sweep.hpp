#pragma once

#include <string>
#include <vector>

#include "csrbf/coarse_basis.hpp"
#include "csrbf/image.hpp"
#include "csrbf/pipeline.hpp"
#include "csrbf/solver.hpp"

namespace csrbf {

/// Configuration shared by the sweep and reconstruct runs. The defaults
/// reproduce the benchmark grid: 7 families x coarse sizes {0,2,4,8,16}
/// x tolerances {1e-3, 1e-6}.
struct RunConfig {
  std::string input;
  std::string out_dir = ".";
  double radius = 0.05;
  CenterSelection centers;  // default: stride 4
  std::vector<CoarseBasisKind> families{kAllCoarseBases.begin(), kAllCoarseBases.end()};
  std::vector<Index> coarse_sizes{0, 2, 4, 8, 16};
  std::vector<double> tolerances{1e-3, 1e-6};
  int max_iterations = 1000;
  bool orthonormalize_coarse = false;
  /// Adds a wall_ms column to the CSV. Off by default so that reports are
  /// byte-identical across runs.
  bool timings = false;
  unsigned workers = 0;  // 0: hardware concurrency, capped

  // reconstruct only: a single family / coarse size
  CoarseBasisKind basis = CoarseBasisKind::Chebyshev;
  Index coarse_size = 0;
};

/// One sweep cell. iterations is aligned with RunConfig::tolerances,
/// -1 when the tolerance was not reached. A failed cell carries the error
/// string and does not abort the sweep.
struct SweepRow {
  std::string family;
  Index m = 0;
  int channel = 0;
  double initial_residual_ratio = 0.0;
  std::vector<int> iterations;
  double wall_ms = 0.0;
  bool converged = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::string csv;       // rendered report
  std::string csv_path;  // empty when nothing was written
};

/// Rows in deterministic grid order (family, then size, then channel); the
/// m = 0 cell is solved once per channel and replicated under every family.
std::vector<SweepRow> sweep_rows(const RunConfig& cfg, const RasterImage& image);

/// Deterministic CSV: comment header recording the configuration, one named
/// column row, one line per cell.
std::string render_sweep_csv(const RunConfig& cfg, const std::vector<SweepRow>& rows);

/// Loads cfg.input, runs the grid, writes <out_dir>/sweep.csv.
SweepResult run_sweep(const RunConfig& cfg);

struct ReconstructChannel {
  int channel = 0;
  SolveReport report;
};

struct ReconstructResult {
  RasterImage image;
  double psnr_db = 0.0;
  std::vector<ReconstructChannel> channels;
  double wall_ms = 0.0;
  std::string image_path;  // empty when not written
  std::string csv_path;
};

/// Reconstruction with a single family / coarse size (m = 0 means plain
/// GCR). One solve per channel over a shared assembled system.
ReconstructResult reconstruct(const RunConfig& cfg, const RasterImage& image);

/// Loads cfg.input, reconstructs, writes the image and a one-row-per-channel
/// CSV into cfg.out_dir.
ReconstructResult run_reconstruct(const RunConfig& cfg);

}  // namespace csrbf
