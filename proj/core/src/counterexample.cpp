#include "monocert/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "monocert/errors.hpp"
#include "monocert/sweep.hpp"

namespace monocert {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Certified: return "counterexample certified";
    case Verdict::NotCertified: return "not certified";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

FamilyPair make_pair(const Expr& u) {
  const Expr half_x2 = Expr::pow(Expr::x(), 2) / Expr::constant(2);
  const Expr half_y2 = Expr::pow(Expr::y(), 2) / Expr::constant(2);
  ScalarField2 fu = ScalarField2::from_expr(u);
  ScalarField2 fp = ScalarField2::from_expr(half_x2 + u - half_y2, "f+[u]");
  ScalarField2 fm = ScalarField2::from_expr(half_x2 - u - half_y2, "f-[u]");
  VectorField2 Fp = saddle_field(fp);
  VectorField2 Fm = saddle_field(fm);
  return FamilyPair{to_string(u), std::move(fu), std::move(fp), std::move(fm), std::move(Fp),
                    std::move(Fm)};
}

FamilyPair make_pair(std::string_view u_text) {
  FamilyPair pair = make_pair(parse(u_text));
  pair.u_text = std::string(u_text);
  return pair;
}

Certificate check_remark_bounds(const ScalarField2& u, const Region& region, const GridSpec& grid,
                                const CertifyOptions& opts) {
  validate(region);
  validate(grid);
  Certificate cert;
  cert.property = "remark-bounds";
  cert.subject = u.name();
  cert.criterion = "|u_xx| <= 1, |u_yy| <= 1, u_xy nonconstant";
  cert.region = region;
  cert.grid = grid;
  cert.seed = opts.seed;
  const double tol = opts.tol.value_or(kJetTolerance);
  cert.tolerances = {{"tol", tol}};
  cert.grid_metric_name = "uxy";

  struct Second {
    double hxx = 0.0, hxy = 0.0, hyy = 0.0;
    bool failed = false;
    std::string error;
  };
  const auto second = parallel_map<Second>(grid.size(), opts.threads, [&](std::size_t k) {
    Second s;
    try {
      const Jet2 j = u.jet(grid_point(region, grid, k));
      s.hxx = j.hxx;
      s.hxy = j.hxy;
      s.hyy = j.hyy;
    } catch (const DomainError& e) {
      s.failed = true;
      s.error = e.what();
    }
    return s;
  });
  for (std::size_t k = 0; k < second.size(); ++k) {
    if (second[k].failed) {
      cert.error = second[k].error;
      cert.error_point = grid_point(region, grid, k);
      cert.status = Status::Indeterminate;
      return cert;
    }
  }

  // Extremes in index order; exact ties keep the point nearest the center.
  const Vec2 c = region.center();
  auto dist2 = [&](std::size_t k) {
    const Vec2 d = grid_point(region, grid, k) - c;
    return dot(d, d);
  };
  auto pick = [&](auto metric, bool want_max) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < second.size(); ++k) {
      const double v = metric(second[k]);
      const double b = metric(second[best]);
      if ((want_max ? v > b : v < b) || (v == b && dist2(k) < dist2(best))) best = k;
    }
    return best;
  };
  auto abs_xx = [](const Second& s) { return std::abs(s.hxx); };
  auto abs_yy = [](const Second& s) { return std::abs(s.hyy); };
  auto mixed = [](const Second& s) { return s.hxy; };

  const std::size_t kxx = pick(abs_xx, true);
  const std::size_t kyy = pick(abs_yy, true);
  const std::size_t khi = pick(mixed, true);
  const std::size_t klo = pick(mixed, false);

  Check cxx{"uxx_bound", "max_abs_uxx", abs_xx(second[kxx]), 1.0 + tol, "<=", false,
            grid_point(region, grid, kxx), std::nullopt, ""};
  cxx.pass = cxx.observed <= cxx.threshold;
  Check cyy{"uyy_bound", "max_abs_uyy", abs_yy(second[kyy]), 1.0 + tol, "<=", false,
            grid_point(region, grid, kyy), std::nullopt, ""};
  cyy.pass = cyy.observed <= cyy.threshold;
  const double spread = second[khi].hxy - second[klo].hxy;
  Check cxy{"mixed_partial_nonconstant", "uxy_spread", spread, tol, ">", spread > tol,
            grid_point(region, grid, khi), grid_point(region, grid, klo),
            "witnesses attain max and min of u_xy"};
  if (!cxy.pass) cxy.details = "degenerate family member: u_xy is constant on the grid";
  cert.checks = {cxx, cyy, cxy};

  cert.grid_metric.resize(second.size());
  for (std::size_t k = 0; k < second.size(); ++k) cert.grid_metric[k] = second[k].hxy;
  const bool all = cxx.pass && cyy.pass && cxy.pass;
  cert.status = all ? Status::Pass : Status::Fail;
  return cert;
}

namespace {

class Pipeline {
 public:
  explicit Pipeline(CounterexampleCertificate& out) : out_(out) {}

  void record(const std::string& stage, const Certificate& cert) {
    if (cert.status == Status::Indeterminate) {
      indeterminate(stage, cert.error);
      return;
    }
    for (const Check& c : cert.checks) {
      if (!c.pass) fail(stage + "/" + c.id);
    }
  }

  void require(const std::string& stage, bool ok) {
    if (!ok) fail(stage);
  }

  void indeterminate(const std::string& stage, const std::string& message) {
    if (out_.error.empty()) out_.error = stage + ": " + message;
    fail(stage + "/indeterminate");
  }

 private:
  void fail(const std::string& id) {
    if (out_.first_failure.empty()) out_.first_failure = id;
    out_.failures.push_back(id);
  }

  CounterexampleCertificate& out_;
};

}  // namespace

CounterexampleCertificate refute_additivity(std::string_view u_text, const Region& region,
                                            const GridSpec& grid,
                                            const CounterexampleConfig& config) {
  validate(region);
  validate(grid);
  const FamilyPair pair = make_pair(u_text);

  CounterexampleCertificate out;
  out.u_text = pair.u_text;
  out.region = region;
  out.grid = grid;
  Pipeline pipe(out);
  const CertifyOptions& opts = config.certify;

  out.remark_bounds = check_remark_bounds(pair.u, region, grid, opts);
  pipe.record("remark_bounds", out.remark_bounds);

  out.convex_concave_plus = certify_convex_concave(pair.f_plus, region, grid, opts);
  pipe.record("convex_concave_plus", out.convex_concave_plus);
  out.convex_concave_minus = certify_convex_concave(pair.f_minus, region, grid, opts);
  pipe.record("convex_concave_minus", out.convex_concave_minus);

  out.monotone_plus = certify_monotone(pair.F_plus, region, grid, opts);
  pipe.record("monotone_plus", out.monotone_plus);
  out.monotone_minus = certify_monotone(pair.F_minus, region, grid, opts);
  pipe.record("monotone_minus", out.monotone_minus);

  const VectorField2 sum = add(pair.F_plus, pair.F_minus);
  out.gradient_sum = certify_gradient(sum, region, grid, opts);
  pipe.record("gradient_sum", out.gradient_sum);

  if (out.gradient_sum.passed()) {
    try {
      out.potential =
          reconstruct_potential(sum, region, grid, config.anchor, config.quad_step, opts);
      const double base = dot(config.anchor, config.anchor);
      double worst = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const Vec2 p = grid_point(region, grid, k);
        worst = std::max(worst, std::abs(out.potential->values[k] - (dot(p, p) - base)));
      }
      out.potential_error = worst;
      out.potential_matches = worst <= config.potential_tol;
      pipe.require("potential/matches_norm_squared", out.potential_matches);

      out.affinity = classify_affinity(*out.potential, sum, config.potential_tol, opts.threads);
      pipe.require("affinity/non_affine", !out.affinity->affine);
    } catch (const DomainError& e) {
      pipe.indeterminate("potential", e.what());
    }
  }

  RefuteOptions ropts;
  ropts.threshold = config.refutation_threshold;
  ropts.threads = opts.threads;
  try {
    out.refute_plus = refute_skew_affine(pair.F_plus, region, grid, ropts);
    pipe.require("refute_plus/refuted", out.refute_plus->refuted);
  } catch (const DomainError& e) {
    pipe.indeterminate("refute_plus", e.what());
  }
  try {
    out.refute_minus = refute_skew_affine(pair.F_minus, region, grid, ropts);
    pipe.require("refute_minus/refuted", out.refute_minus->refuted);
  } catch (const DomainError& e) {
    pipe.indeterminate("refute_minus", e.what());
  }

  if (!out.error.empty()) {
    out.verdict = Verdict::Indeterminate;
  } else {
    out.verdict = out.failures.empty() ? Verdict::Certified : Verdict::NotCertified;
  }
  return out;
}

}  // namespace monocert
