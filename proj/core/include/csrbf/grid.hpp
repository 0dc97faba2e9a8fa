#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "csrbf/types.hpp"

namespace csrbf {

/// Uniform spatial hash with cell size equal to the kernel support radius.
/// Every site lives in exactly one cell, and every pair closer than the
/// radius is contained in the 3^d cell neighborhood of either endpoint
/// (a pair closer than one cell size differs by at most one cell per axis).
class GridIndex {
 public:
  GridIndex(std::vector<Point> sites, double cell_size);

  double cell_size() const { return cell_; }
  std::size_t site_count() const { return sites_.size(); }
  std::size_t occupied_cells() const { return cells_.size(); }
  const std::vector<Point>& sites() const { return sites_; }

  /// Site indices with distance(x, site) < radius, ascending. Includes the
  /// query site itself when x coincides with one. radius must not exceed
  /// the cell size.
  std::vector<std::int32_t> neighbors_within(const Point& x, double radius) const;

  /// All unordered pairs (i, j), i < j, closer than radius. Test/diagnostic
  /// helper; assembly iterates rows directly.
  std::vector<std::pair<std::int32_t, std::int32_t>> close_pairs(double radius) const;

 private:
  struct CellKey {
    std::int32_t x, y, z;
    bool operator==(const CellKey&) const = default;
  };
  struct CellHash {
    std::size_t operator()(const CellKey& k) const {
      std::uint64_t h = static_cast<std::uint32_t>(k.x);
      h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(k.y);
      h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(k.z);
      return static_cast<std::size_t>(h);
    }
  };

  CellKey key_of(const Point& p) const;

  std::vector<Point> sites_;
  double cell_ = 0.0;
  bool flat_ = true;  // all z coordinates zero: scan 9 cells instead of 27
  std::unordered_map<CellKey, std::vector<std::int32_t>, CellHash> cells_;
};

/// Throws std::invalid_argument for an empty site list or radius <= 0.
GridIndex build_grid(const std::vector<Point>& sites, double radius);

}  // namespace csrbf
