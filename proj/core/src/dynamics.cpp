#include "monocert/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "monocert/sweep.hpp"

namespace monocert {

double lipschitz_estimate(const VectorField2& f, const Region& region, const GridSpec& grid,
                          unsigned threads) {
  validate(region);
  validate(grid);
  const auto norms = parallel_map<double>(grid.size(), threads, [&](std::size_t k) {
    return frobenius_norm(f.jacobian(grid_point(region, grid, k)));
  });
  return *std::max_element(norms.begin(), norms.end());
}

SolveTrace extragradient(const VectorField2& f, Vec2 z0, const ExtragradientOptions& opts) {
  SolveTrace trace;
  if (opts.step) {
    if (!(*opts.step > 0.0)) throw std::invalid_argument("extragradient: step must be positive");
    trace.step = *opts.step;
  } else {
    trace.lipschitz = lipschitz_estimate(f, opts.lipschitz_region, opts.lipschitz_grid, opts.threads);
    if (!(trace.lipschitz > 0.0)) {
      throw std::invalid_argument("extragradient: zero Lipschitz estimate (constant field)");
    }
    trace.step = 1.0 / (2.0 * trace.lipschitz);
  }
  const double s = trace.step;

  Vec2 z = z0;
  Vec2 fz = f.value(z);
  double res = norm_inf(fz);
  auto keep = [&](std::size_t k) {
    if (opts.keep_every > 0 && k % opts.keep_every == 0) {
      trace.iteration_index.push_back(k);
      trace.iterates.push_back(z);
      trace.residuals.push_back(res);
    }
  };
  keep(0);
  std::size_t k = 0;
  while (res > opts.tol && k < opts.max_iter) {
    const Vec2 w = z - s * fz;
    z = z - s * f.value(w);
    fz = f.value(z);
    res = norm_inf(fz);
    ++k;
    keep(k);
  }
  if (opts.keep_every > 0 && k % opts.keep_every != 0) {
    trace.iteration_index.push_back(k);
    trace.iterates.push_back(z);
    trace.residuals.push_back(res);
  }
  trace.final_point = z;
  trace.final_residual = res;
  trace.iterations = k;
  trace.converged = res <= opts.tol;
  return trace;
}

}  // namespace monocert
