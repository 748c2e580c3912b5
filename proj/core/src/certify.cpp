#include "monocert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "monocert/errors.hpp"
#include "monocert/sweep.hpp"

namespace monocert {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

const Check* Certificate::find(std::string_view id) const noexcept {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

double default_tolerance(const VectorField2& f) noexcept {
  return f.exact_jacobian() ? kJetTolerance : kQuadratureTolerance;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Evaluation failure at a known point; turned into an indeterminate certificate.
class SweepError : public std::runtime_error {
 public:
  SweepError(Vec2 p, const std::string& what) : std::runtime_error(what), point(p) {}
  Vec2 point;
};

[[noreturn]] void rethrow_domain(const SweepError& e, const VectorField2& f) {
  throw DomainError(std::string(e.what()) + " at (" + std::to_string(e.point.x) + ", " +
                        std::to_string(e.point.y) + ")",
                    f.name());
}

template <typename T, typename Fn>
std::vector<T> grid_sweep(const Region& region, const GridSpec& grid, unsigned threads, Fn fn) {
  return parallel_map<T>(grid.size(), threads, [&](std::size_t k) {
    const Vec2 p = grid_point(region, grid, k);
    try {
      return fn(p);
    } catch (const DomainError& e) {
      throw SweepError(p, e.what());
    }
  });
}

void require_finite(const std::vector<double>& values, const Region& region, const GridSpec& grid,
                    const std::string& metric) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw SweepError(grid_point(region, grid, k), "non-finite " + metric);
    }
  }
}

/// Index of the grid extreme. Exact ties go to the point nearest the region
/// center, then to the lowest index.
std::size_t arg_extreme(const std::vector<double>& values, const Region& region,
                        const GridSpec& grid, bool want_max) {
  const Vec2 c = region.center();
  auto dist2 = [&](std::size_t k) {
    const Vec2 d = grid_point(region, grid, k) - c;
    return dot(d, d);
  };
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double v = values[k];
    const double b = values[best];
    const bool better = want_max ? v > b : v < b;
    if (better || (v == b && dist2(k) < dist2(best))) best = k;
  }
  return best;
}

Check make_check(std::string id, std::string metric, double observed, double threshold,
                 std::string comparison) {
  Check c;
  c.id = std::move(id);
  c.metric = std::move(metric);
  c.observed = observed;
  c.threshold = threshold;
  c.comparison = std::move(comparison);
  if (c.comparison == ">=") {
    c.pass = observed >= threshold;
  } else if (c.comparison == "<=") {
    c.pass = observed <= threshold;
  } else {
    c.pass = observed > threshold;
  }
  return c;
}

Certificate start(std::string property, std::string subject, std::string criterion,
                  const Region& region, const GridSpec& grid) {
  validate(region);
  validate(grid);
  Certificate cert;
  cert.property = std::move(property);
  cert.subject = std::move(subject);
  cert.criterion = std::move(criterion);
  cert.region = region;
  cert.grid = grid;
  return cert;
}

void finish(Certificate& cert) {
  if (!cert.error.empty()) {
    cert.status = Status::Indeterminate;
    return;
  }
  const bool all = std::all_of(cert.checks.begin(), cert.checks.end(),
                               [](const Check& c) { return c.pass; });
  cert.status = all ? Status::Pass : Status::Fail;
}

void mark_indeterminate(Certificate& cert, const SweepError& e) {
  cert.error = e.what();
  cert.error_point = e.point;
  cert.checks.clear();
  cert.grid_metric.clear();
  cert.status = Status::Indeterminate;
}

/// Smallest-value check over a sweep, with witness.
Check min_check(std::string id, std::string metric, const std::vector<double>& values,
                double threshold, const Region& region, const GridSpec& grid) {
  const std::size_t k = arg_extreme(values, region, grid, false);
  Check c = make_check(std::move(id), std::move(metric), values[k], threshold, ">=");
  c.witness = grid_point(region, grid, k);
  return c;
}

Check max_check(std::string id, std::string metric, const std::vector<double>& values,
                double threshold, const Region& region, const GridSpec& grid) {
  const std::size_t k = arg_extreme(values, region, grid, true);
  Check c = make_check(std::move(id), std::move(metric), values[k], threshold, "<=");
  c.witness = grid_point(region, grid, k);
  return c;
}

struct PairSample {
  double ratio = kInf;
  Vec2 z;
  Vec2 zp;
};

Vec2 sample_point(const Region& r, std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
  const double u = counter_uniform(seed, index, lane);
  const double v = counter_uniform(seed, index, lane + 1);
  return {r.xmin + (r.xmax - r.xmin) * u, r.ymin + (r.ymax - r.ymin) * v};
}

}  // namespace

Certificate certify_monotone(const VectorField2& f, const Region& region, const GridSpec& grid,
                             const CertifyOptions& opts) {
  Certificate cert = start("monotone", f.name(), "jacobian-psd+pairwise", region, grid);
  const double tol = opts.tol.value_or(default_tolerance(f));
  cert.tolerances = {{"tol", tol}};
  cert.seed = opts.seed;
  cert.pair_samples = opts.pair_samples;
  cert.grid_metric_name = "min_sym_eig";
  try {
    auto eig = grid_sweep<double>(region, grid, opts.threads,
                                  [&](Vec2 p) { return min_sym_eig(f.jacobian(p)); });
    require_finite(eig, region, grid, "min_sym_eig");
    Check grid_check = min_check("jacobian_psd", "min_sym_eig", eig, -tol, region, grid);
    if (!f.exact_jacobian()) grid_check.details = "jacobian by central differences";
    cert.checks.push_back(std::move(grid_check));
    cert.grid_metric = std::move(eig);

    if (opts.pair_samples > 0) {
      auto pairs = parallel_map<PairSample>(opts.pair_samples, opts.threads, [&](std::size_t k) {
        PairSample s;
        s.z = sample_point(region, opts.seed, k, 0);
        s.zp = sample_point(region, opts.seed, k, 2);
        const Vec2 d = s.z - s.zp;
        const double d2 = dot(d, d);
        if (d2 == 0.0) return s;
        try {
          s.ratio = dot(f.value(s.z) - f.value(s.zp), d) / d2;
        } catch (const DomainError& e) {
          throw SweepError(s.z, e.what());
        }
        if (std::isnan(s.ratio)) throw SweepError(s.z, "non-finite pair inner product");
        return s;
      });
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        if (pairs[k].ratio < pairs[best].ratio) best = k;
      }
      Check pc = make_check("pairwise", "min_normalized_pair_inner_product", pairs[best].ratio,
                            -tol, ">=");
      pc.witness = pairs[best].z;
      pc.witness_secondary = pairs[best].zp;
      pc.details = "min over sampled pairs of <F(z)-F(z'),z-z'>/|z-z'|^2";
      cert.checks.push_back(std::move(pc));
    }
  } catch (const SweepError& e) {
    mark_indeterminate(cert, e);
  }
  finish(cert);
  return cert;
}

Certificate certify_convex(const ScalarField2& f, const Region& region, const GridSpec& grid,
                           const CertifyOptions& opts) {
  Certificate cert = start("convex", f.name(), "hessian-psd", region, grid);
  const double tol = opts.tol.value_or(kJetTolerance);
  cert.tolerances = {{"tol", tol}};
  cert.seed = opts.seed;
  cert.pair_samples = opts.pair_samples;
  cert.grid_metric_name = "min_hessian_eig";
  try {
    auto eig = grid_sweep<double>(region, grid, opts.threads, [&](Vec2 p) {
      const Jet2 j = f.jet(p);
      return min_sym_eig({j.hxx, j.hxy, j.hxy, j.hyy});
    });
    require_finite(eig, region, grid, "hessian eigenvalue");
    cert.checks.push_back(min_check("hessian_psd", "min_hessian_eig", eig, -tol, region, grid));
    cert.grid_metric = std::move(eig);
  } catch (const SweepError& e) {
    mark_indeterminate(cert, e);
  }
  finish(cert);

  if (cert.status != Status::Indeterminate) {
    CertifyOptions mono_opts = opts;
    mono_opts.tol = tol;
    const Certificate mono = certify_monotone(gradient_field(f), region, grid, mono_opts);
    const bool agree = mono.status == cert.status;
    Check x = make_check("gradient_monotone_agreement", "agreement", agree ? 1.0 : 0.0, 1.0, ">=");
    x.details = "certify_monotone(grad f): " + std::string(to_string(mono.status));
    cert.crosschecks.push_back(std::move(x));
  }
  return cert;
}

Certificate certify_convex_concave(const ScalarField2& f, const Region& region,
                                   const GridSpec& grid, const CertifyOptions& opts) {
  Certificate cert = start("convex-concave", f.name(), "separable", region, grid);
  const double tol = opts.tol.value_or(kJetTolerance);
  cert.tolerances = {{"tol", tol}};
  cert.seed = opts.seed;
  cert.grid_metric_name = "hxx";
  try {
    struct Second {
      double hxx;
      double hyy;
    };
    auto second = grid_sweep<Second>(region, grid, opts.threads, [&](Vec2 p) {
      const Jet2 j = f.jet(p);
      return Second{j.hxx, j.hyy};
    });
    std::vector<double> hxx(second.size());
    std::vector<double> hyy(second.size());
    for (std::size_t k = 0; k < second.size(); ++k) {
      hxx[k] = second[k].hxx;
      hyy[k] = second[k].hyy;
    }
    require_finite(hxx, region, grid, "f_xx");
    require_finite(hyy, region, grid, "f_yy");
    Check cx = min_check("convex_in_x", "min_fxx", hxx, -tol, region, grid);
    cx.details = "separable criterion (sufficient only)";
    Check cy = max_check("concave_in_y", "max_fyy", hyy, tol, region, grid);
    cy.details = "separable criterion (sufficient only)";
    cert.checks.push_back(std::move(cx));
    cert.checks.push_back(std::move(cy));
    cert.grid_metric = std::move(hxx);
  } catch (const SweepError& e) {
    mark_indeterminate(cert, e);
  }
  finish(cert);
  return cert;
}

Certificate certify_gradient(const VectorField2& f, const Region& region, const GridSpec& grid,
                             const CertifyOptions& opts) {
  Certificate cert = start("gradient", f.name(), "curl-free", region, grid);
  const double tol = opts.tol.value_or(default_tolerance(f));
  cert.tolerances = {{"tol", tol}};
  cert.seed = opts.seed;
  cert.grid_metric_name = "asymmetry";
  try {
    auto asym = grid_sweep<double>(region, grid, opts.threads,
                                   [&](Vec2 p) { return asymmetry(f.jacobian(p)); });
    require_finite(asym, region, grid, "asymmetry");
    std::vector<double> mag(asym.size());
    std::transform(asym.begin(), asym.end(), mag.begin(), [](double a) { return std::abs(a); });
    const std::size_t k = arg_extreme(mag, region, grid, true);
    Check c = make_check("curl_free", "max_abs_asymmetry", mag[k], tol, "<=");
    c.witness = grid_point(region, grid, k);
    c.details = "J12 - J21 at witness = " + std::to_string(asym[k]);
    cert.checks.push_back(std::move(c));
    cert.grid_metric = std::move(asym);
  } catch (const SweepError& e) {
    mark_indeterminate(cert, e);
  }
  finish(cert);
  return cert;
}

SkewAffineFit fit_skew_affine(const VectorField2& f, const Region& region, const GridSpec& grid,
                              unsigned threads) {
  validate(region);
  validate(grid);
  std::vector<Vec2> values;
  try {
    values = grid_sweep<Vec2>(region, grid, threads, [&](Vec2 p) { return f.value(p); });
  } catch (const SweepError& e) {
    rethrow_domain(e, f);
  }
  const std::size_t n = values.size();
  const double inv_n = 1.0 / static_cast<double>(n);

  Vec2 mean_p, mean_f;
  for (std::size_t k = 0; k < n; ++k) {
    mean_p = mean_p + grid_point(region, grid, k);
    mean_f = mean_f + values[k];
  }
  mean_p = inv_n * mean_p;
  mean_f = inv_n * mean_f;

  // Normal equations after eliminating the offsets:
  //   a * sum(|p - mean_p|^2) = sum((y - ybar) F1) - sum((x - xbar) F2)
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 d = grid_point(region, grid, k) - mean_p;
    num += d.y * (values[k].x - mean_f.x) - d.x * (values[k].y - mean_f.y);
    den += dot(d, d);
  }
  SkewAffineFit fit;
  fit.a = num / den;
  fit.b1 = mean_f.x - fit.a * mean_p.y;
  fit.b2 = mean_f.y + fit.a * mean_p.x;

  double sum_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 p = grid_point(region, grid, k);
    const Vec2 r = values[k] - Vec2{fit.a * p.y + fit.b1, -fit.a * p.x + fit.b2};
    const double r2 = dot(r, r);
    sum_sq += r2;
    const double rn = std::sqrt(r2);
    if (rn > fit.max_residual) {
      fit.max_residual = rn;
      fit.max_residual_point = p;
    }
  }
  fit.rms_residual = std::sqrt(sum_sq * inv_n);
  return fit;
}

RefutationWitness refute_skew_affine(const VectorField2& f, const Region& region,
                                     const GridSpec& grid, const RefuteOptions& opts) {
  validate(region);
  validate(grid);
  if (opts.a_interval) {
    const auto [lo, hi] = *opts.a_interval;
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw std::invalid_argument("refute_skew_affine: empty search interval");
    }
  }
  struct Entries {
    double asym;
    double j12;
  };
  std::vector<double> asym;
  double amax = 0.0;
  try {
    const auto entries = grid_sweep<Entries>(region, grid, opts.threads, [&](Vec2 p) {
      const Mat2 j = f.jacobian(p);
      return Entries{asymmetry(j), j.a12};
    });
    asym.resize(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
      asym[k] = entries[k].asym;
      amax = std::max(amax, std::abs(entries[k].j12));
    }
    require_finite(asym, region, grid, "asymmetry");
  } catch (const SweepError& e) {
    rethrow_domain(e, f);
  }

  RefutationWitness w;
  std::tie(w.a_lo, w.a_hi) = opts.a_interval.value_or(std::pair{-(amax + 1.0), amax + 1.0});
  w.threshold = opts.threshold.value_or(default_tolerance(f));

  const std::size_t klo = arg_extreme(asym, region, grid, false);
  const std::size_t khi = arg_extreme(asym, region, grid, true);
  w.p_lo = grid_point(region, grid, klo);
  w.p_hi = grid_point(region, grid, khi);
  w.asymmetry_lo = asym[klo];
  w.asymmetry_hi = asym[khi];

  auto sup_residual = [&](double a) {
    double r = 0.0;
    for (double s : asym) r = std::max(r, std::abs(s - 2.0 * a));
    return r;
  };

  const std::size_t m = std::max<std::size_t>(opts.coarse_samples, 2);
  const double width = w.a_hi - w.a_lo;
  auto coarse = [&](std::size_t i) { return lattice(w.a_lo, w.a_hi, i, m); };
  std::size_t best_i = 0;
  double best_r = sup_residual(coarse(0));
  for (std::size_t i = 1; i < m && width > 0.0; ++i) {
    const double r = sup_residual(coarse(i));
    if (r < best_r) {
      best_r = r;
      best_i = i;
    }
  }
  double best_a = coarse(best_i);

  if (width > 0.0) {
    // The objective is convex in a, so the minimizer lies between the
    // neighbours of the best coarse sample.
    double lo = coarse(best_i == 0 ? 0 : best_i - 1);
    double hi = coarse(std::min(best_i + 1, m - 1));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = sup_residual(c);
    double fd = sup_residual(d);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      if (fc <= fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = sup_residual(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = sup_residual(d);
      }
    }
    for (double cand : {c, d, 0.5 * (lo + hi)}) {
      const double r = sup_residual(cand);
      if (r < best_r) {
        best_r = r;
        best_a = cand;
      }
    }
  }
  w.best_a = best_a;
  w.min_sup_residual = best_r;
  w.refuted = w.min_sup_residual > w.threshold;
  return w;
}

namespace {

struct SimpsonStats {
  double max_step = 0.0;
  bool adjusted = false;
};

/// Composite Simpson for g on [s, e] with an even number of panels whose
/// width is at most `step`.
template <typename G>
double simpson(G&& g, double s, double e, double step, SimpsonStats& stats) {
  const double len = e - s;
  if (len == 0.0) return 0.0;
  auto n = static_cast<std::size_t>(std::ceil(std::abs(len) / step));
  if (n < 2) n = 2;
  if (n % 2 == 1) ++n;
  const double h = len / static_cast<double>(n);
  stats.max_step = std::max(stats.max_step, std::abs(h));
  if (std::abs(std::abs(h) - step) > 1e-12 * step) stats.adjusted = true;
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = s + static_cast<double>(i) * h;
    (i % 2 == 1 ? odd : even) += g(t);
  }
  return h / 3.0 * (g(s) + 4.0 * odd + 2.0 * even + g(e));
}

/// Cumulative integrals from `origin` to each lattice node, sweeping outward
/// in both directions so each stretch is integrated once.
template <typename G>
std::vector<double> cumulative(G&& g, double origin, const std::vector<double>& nodes, double step,
                               SimpsonStats& stats) {
  std::vector<double> out(nodes.size(), 0.0);
  const auto first_up =
      std::lower_bound(nodes.begin(), nodes.end(), origin) - nodes.begin();
  double acc = 0.0;
  double at = origin;
  for (auto k = static_cast<std::size_t>(first_up); k < nodes.size(); ++k) {
    acc += simpson(g, at, nodes[k], step, stats);
    at = nodes[k];
    out[k] = acc;
  }
  acc = 0.0;
  at = origin;
  for (auto k = static_cast<std::ptrdiff_t>(first_up) - 1; k >= 0; --k) {
    acc += simpson(g, at, nodes[static_cast<std::size_t>(k)], step, stats);
    at = nodes[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

}  // namespace

PotentialTable reconstruct_potential(const VectorField2& f, const Region& region,
                                     const GridSpec& grid, Vec2 anchor, double quad_step,
                                     const CertifyOptions& opts) {
  if (!(quad_step > 0.0) || !std::isfinite(quad_step)) {
    throw std::invalid_argument("reconstruct_potential: quadrature step must be positive");
  }
  if (!std::isfinite(anchor.x) || !std::isfinite(anchor.y)) {
    throw std::invalid_argument("reconstruct_potential: anchor must be finite");
  }
  const Certificate pre = certify_gradient(f, region, grid, opts);
  if (pre.status == Status::Indeterminate) throw DomainError(pre.error, f.name());
  if (!pre.passed()) {
    const Check& c = pre.checks.front();
    throw PreconditionError("reconstruct_potential: field is not curl-free; max |J12 - J21| = " +
                            std::to_string(c.observed) + " at (" + std::to_string(c.witness->x) +
                            ", " + std::to_string(c.witness->y) + ")");
  }

  PotentialTable t;
  t.region = region;
  t.grid = grid;
  t.anchor = anchor;
  t.quad_step = quad_step;

  std::vector<double> xs(grid.nx), ys(grid.ny);
  for (std::size_t i = 0; i < grid.nx; ++i) xs[i] = lattice(region.xmin, region.xmax, i, grid.nx);
  for (std::size_t j = 0; j < grid.ny; ++j) ys[j] = lattice(region.ymin, region.ymax, j, grid.ny);

  SimpsonStats hstats;
  const auto horizontal = cumulative([&](double t) { return f.value({t, anchor.y}).x; }, anchor.x,
                                     xs, quad_step, hstats);

  struct Column {
    std::vector<double> v;
    SimpsonStats stats;
  };
  const auto columns = parallel_map<Column>(grid.nx, opts.threads, [&](std::size_t i) {
    Column c;
    c.v = cumulative([&](double s) { return f.value({xs[i], s}).y; }, anchor.y, ys, quad_step,
                     c.stats);
    return c;
  });

  t.values.resize(grid.size());
  t.effective_step = hstats.max_step;
  t.step_adjusted = hstats.adjusted;
  for (std::size_t i = 0; i < grid.nx; ++i) {
    t.effective_step = std::max(t.effective_step, columns[i].stats.max_step);
    t.step_adjusted = t.step_adjusted || columns[i].stats.adjusted;
    for (std::size_t j = 0; j < grid.ny; ++j) {
      t.values[j * grid.nx + i] = horizontal[i] + columns[i].v[j];
    }
  }

  if (grid.nx < 5 || grid.ny < 5) {
    t.gradient_mismatch = std::numeric_limits<double>::quiet_NaN();
    return t;
  }
  const double hx = (region.xmax - region.xmin) / static_cast<double>(grid.nx - 1);
  const double hy = (region.ymax - region.ymin) / static_cast<double>(grid.ny - 1);
  auto d4 = [](double m2, double m1, double p1, double p2, double h) {
    return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
  };
  const auto mismatch = parallel_map<double>(grid.ny, opts.threads, [&](std::size_t j) {
    double worst = 0.0;
    if (j < 2 || j + 2 >= grid.ny) return worst;
    for (std::size_t i = 2; i + 2 < grid.nx; ++i) {
      const double dx = d4(t.at(i - 2, j), t.at(i - 1, j), t.at(i + 1, j), t.at(i + 2, j), hx);
      const double dy = d4(t.at(i, j - 2), t.at(i, j - 1), t.at(i, j + 1), t.at(i, j + 2), hy);
      const Vec2 fv = f.value({xs[i], ys[j]});
      worst = std::max(worst, norm_inf(Vec2{dx, dy} - fv));
    }
    return worst;
  });
  t.gradient_mismatch = *std::max_element(mismatch.begin(), mismatch.end());
  return t;
}

AffinityClassification classify_affinity(const PotentialTable& table, const VectorField2& f,
                                         double tol, unsigned threads) {
  std::vector<Vec2> values;
  try {
    values = grid_sweep<Vec2>(table.region, table.grid, threads, [&](Vec2 p) { return f.value(p); });
  } catch (const SweepError& e) {
    rethrow_domain(e, f);
  }
  std::vector<double> fx(values.size()), fy(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    fx[k] = values[k].x;
    fy[k] = values[k].y;
  }
  const Region& r = table.region;
  const GridSpec& g = table.grid;
  const std::size_t xmax = arg_extreme(fx, r, g, true), xmin = arg_extreme(fx, r, g, false);
  const std::size_t ymax = arg_extreme(fy, r, g, true), ymin = arg_extreme(fy, r, g, false);

  AffinityClassification c;
  c.tol = tol;
  c.spread_x = fx[xmax] - fx[xmin];
  c.spread_y = fy[ymax] - fy[ymin];
  c.component = c.spread_y > c.spread_x ? 1 : 0;
  c.witness_max = grid_point(r, g, c.component == 0 ? xmax : ymax);
  c.witness_min = grid_point(r, g, c.component == 0 ? xmin : ymin);
  c.affine = std::max(c.spread_x, c.spread_y) <= tol;
  return c;
}

}  // namespace monocert
