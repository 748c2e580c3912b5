#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monocert/field.hpp"
#include "monocert/grid.hpp"

namespace monocert {

struct ExtragradientOptions {
  double tol = 1e-8;
  std::size_t max_iter = 100000;
  /// Region and grid for the Lipschitz estimate.
  Region lipschitz_region{};
  GridSpec lipschitz_grid{};
  /// Overrides the 1/(2L) step when set.
  std::optional<double> step;
  /// Keep every k-th iterate in the trace (0 keeps none). The final iterate
  /// is always kept when k > 0.
  std::size_t keep_every = 1;
  unsigned threads = 0;
};

struct SolveTrace {
  std::vector<std::size_t> iteration_index;
  std::vector<Vec2> iterates;
  std::vector<double> residuals;  // |F(z)|_inf at each kept iterate
  Vec2 final_point;
  double final_residual = 0.0;
  std::size_t iterations = 0;
  double step = 0.0;
  double lipschitz = 0.0;
  bool converged = false;
};

/// Max over the grid of the Frobenius norm of the Jacobian.
double lipschitz_estimate(const VectorField2& f, const Region& region, const GridSpec& grid,
                          unsigned threads = 0);

/// z+ = z - s F(z - s F(z)) with s = 1/(2L), until |F(z)|_inf <= tol. Hitting
/// max_iter returns an unconverged trace rather than throwing.
SolveTrace extragradient(const VectorField2& f, Vec2 z0, const ExtragradientOptions& opts = {});

}  // namespace monocert
