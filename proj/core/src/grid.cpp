#include "monocert/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace monocert {

void validate(const Region& r) {
  if (!std::isfinite(r.xmin) || !std::isfinite(r.xmax) || !std::isfinite(r.ymin) ||
      !std::isfinite(r.ymax)) {
    throw std::invalid_argument("region bounds must be finite");
  }
  if (!(r.xmin < r.xmax) || !(r.ymin < r.ymax)) {
    throw std::invalid_argument("region requires xmin < xmax and ymin < ymax");
  }
  constexpr double min_width = 10.0 * std::numeric_limits<double>::epsilon();
  if (r.xmax - r.xmin < min_width || r.ymax - r.ymin < min_width) {
    throw std::invalid_argument("degenerate region: width below 10 machine epsilons");
  }
}

void validate(const GridSpec& g) {
  if (g.nx < 2 || g.ny < 2) {
    throw std::invalid_argument("grid requires nx >= 2 and ny >= 2, got " + std::to_string(g.nx) +
                                "x" + std::to_string(g.ny));
  }
}

Region make_region(double xmin, double xmax, double ymin, double ymax) {
  Region r{xmin, xmax, ymin, ymax};
  validate(r);
  return r;
}

double lattice(double lo, double hi, std::size_t i, std::size_t n) noexcept {
  if (i + 1 >= n) return hi;
  if (i == 0) return lo;
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

Vec2 grid_point(const Region& r, const GridSpec& g, std::size_t k) noexcept {
  const std::size_t i = k % g.nx;
  const std::size_t j = k / g.nx;
  return {lattice(r.xmin, r.xmax, i, g.nx), lattice(r.ymin, r.ymax, j, g.ny)};
}

}  // namespace monocert
