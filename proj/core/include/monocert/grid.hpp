#pragma once

#include <cstddef>
#include <numbers>

#include "monocert/linalg.hpp"

namespace monocert {

/// Axis-aligned certification domain. Construct through make_region() to get
/// validation; the aggregate form is kept for designated initializers in tests.
struct Region {
  double xmin = -std::numbers::pi;
  double xmax = std::numbers::pi;
  double ymin = -std::numbers::pi;
  double ymax = std::numbers::pi;

  Vec2 center() const noexcept { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
  bool contains(Vec2 p) const noexcept {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  friend constexpr bool operator==(const Region&, const Region&) = default;
};

/// Corner-inclusive uniform lattice with nx columns and ny rows.
struct GridSpec {
  std::size_t nx = 129;
  std::size_t ny = 129;

  std::size_t size() const noexcept { return nx * ny; }
  friend constexpr bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Throws std::invalid_argument unless bounds are finite, ordered and wider
/// than 10 machine epsilons in both directions.
void validate(const Region& region);
/// Throws std::invalid_argument unless nx >= 2 and ny >= 2.
void validate(const GridSpec& grid);

Region make_region(double xmin, double xmax, double ymin, double ymax);

/// Lattice coordinate i of n on [lo, hi]; exact at both ends.
double lattice(double lo, double hi, std::size_t i, std::size_t n) noexcept;

/// Grid point for flat index k = j * nx + i (row-major in y).
Vec2 grid_point(const Region& region, const GridSpec& grid, std::size_t k) noexcept;

}  // namespace monocert
