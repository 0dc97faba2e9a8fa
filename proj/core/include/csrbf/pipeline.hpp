#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csrbf/image.hpp"
#include "csrbf/types.hpp"

namespace csrbf {

/// How image pixels become interpolation centers.
struct CenterSelection {
  enum class Strategy { All, Stride, Random };

  Strategy strategy = Strategy::Stride;
  int stride = 4;          // Stride: every k-th pixel per axis
  double fraction = 0.1;   // Random: floor(fraction * pixels) distinct pixels
  std::uint64_t seed = 0;

  static CenterSelection all();
  static CenterSelection strided(int stride);
  static CenterSelection random(double fraction, std::uint64_t seed);
};

/// Selected pixel positions as (col, row), row-major order. The random
/// strategy replays exactly for a fixed seed (mt19937_64 with a partial
/// Fisher-Yates shuffle).
std::vector<std::pair<int, int>> select_centers(int width, int height,
                                                const CenterSelection& sel);

/// Problem for one channel: centers map to [0,1]^2 via ((col + 1/2)/width,
/// (row + 1/2)/height), values are the channel intensities. Throws
/// std::invalid_argument when fewer than dim + 1 centers are selected.
InterpolationProblem extract_problem(const RasterImage& image, int channel,
                                     const CenterSelection& sel, const RadialBasis& basis);

/// s(x) = c . (1, x1, x2) + sum_i lambda_i phi(||x - xi||) at every pixel
/// center of a width x height grid, clamped to [0,1]. Grid-indexed, so the
/// cost is O(pixels * mean neighbors); rows may evaluate in parallel with
/// identical results.
std::vector<double> evaluate_interpolant(const InterpolationProblem& problem,
                                         const SolutionVector& chi, int width, int height,
                                         unsigned threads = 0);

}  // namespace csrbf
