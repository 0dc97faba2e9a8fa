#include "csrbf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csrbf {

GridIndex::GridIndex(std::vector<Point> sites, double cell_size)
    : sites_(std::move(sites)), cell_(cell_size) {
  if (sites_.empty()) throw std::invalid_argument("GridIndex: empty site list");
  if (!(cell_ > 0.0)) throw std::invalid_argument("GridIndex: cell size must be positive");
  cells_.reserve(sites_.size());
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i].z != 0.0) flat_ = false;
    cells_[key_of(sites_[i])].push_back(static_cast<std::int32_t>(i));
  }
}

GridIndex::CellKey GridIndex::key_of(const Point& p) const {
  return CellKey{static_cast<std::int32_t>(std::floor(p.x / cell_)),
                 static_cast<std::int32_t>(std::floor(p.y / cell_)),
                 static_cast<std::int32_t>(std::floor(p.z / cell_))};
}

std::vector<std::int32_t> GridIndex::neighbors_within(const Point& x, double radius) const {
  if (!(radius > 0.0) || radius > cell_)
    throw std::invalid_argument("GridIndex: radius must be in (0, cell size]");
  const CellKey center = key_of(x);
  const double r2 = radius * radius;
  const std::int32_t dz_max = flat_ ? 0 : 1;

  std::vector<std::int32_t> out;
  for (std::int32_t dz = -dz_max; dz <= dz_max; ++dz)
    for (std::int32_t dy = -1; dy <= 1; ++dy)
      for (std::int32_t dx = -1; dx <= 1; ++dx) {
        const auto it = cells_.find(CellKey{center.x + dx, center.y + dy, center.z + dz});
        if (it == cells_.end()) continue;
        for (const std::int32_t j : it->second)
          if (squared_distance(x, sites_[j]) < r2) out.push_back(j);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::int32_t, std::int32_t>> GridIndex::close_pairs(double radius) const {
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const auto neighbors = neighbors_within(sites_[i], radius);
    for (const std::int32_t j : neighbors)
      if (j > static_cast<std::int32_t>(i)) pairs.emplace_back(static_cast<std::int32_t>(i), j);
  }
  return pairs;
}

GridIndex build_grid(const std::vector<Point>& sites, double radius) {
  if (sites.empty()) throw std::invalid_argument("build_grid: empty site list");
  if (!(radius > 0.0)) throw std::invalid_argument("build_grid: radius must be positive");
  return GridIndex(sites, radius);
}

}  // namespace csrbf
