#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csrbf {

/// 8-bit raster held as normalized [0,1] intensities, row-major, channels
/// interleaved. channels is 1 (gray) or 3 (RGB).
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> samples;

  static RasterImage zeros(int width, int height, int channels);

  double at(int x, int y, int c) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double& at(int x, int y, int c) {
    return samples[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t sample_count() const { return samples.size(); }
};

/// Clamp to [0,1] then round half away from zero onto 0..255.
std::uint8_t quantize8(double v);

/// Binary PGM (P5) / PPM (P6) with maxval 255, or 8-bit gray/RGB PNG.
/// Format detected from the file contents. 8-bit value v maps to v / 255.
RasterImage load_image(const std::string& path);

/// Format chosen by extension: .pgm (1 channel), .ppm (3 channels), .png.
/// PGM/PPM bytes are written canonically, so identical images give
/// identical files.
void save_image(const RasterImage& image, const std::string& path);

/// 10 log10(1 / MSE) in dB over normalized intensities; +infinity when the
/// images are identical. Throws std::invalid_argument on shape mismatch.
double psnr(const RasterImage& reference, const RasterImage& test);

}  // namespace csrbf
