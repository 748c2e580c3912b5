#include "monocert/report.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace monocert {

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

Json to_json(Vec2 p) { return Json{{"x", p.x}, {"y", p.y}}; }

Json to_json(const Region& r) {
  return Json{{"xmin", r.xmin}, {"xmax", r.xmax}, {"ymin", r.ymin}, {"ymax", r.ymax}};
}

Json to_json(const GridSpec& g) { return Json{{"nx", g.nx}, {"ny", g.ny}}; }

namespace {

Json optional_point(const std::optional<Vec2>& p) { return p ? to_json(*p) : Json(nullptr); }

}  // namespace

Json to_json(const Check& c) {
  Json j;
  j["id"] = c.id;
  j["metric"] = c.metric;
  j["observed"] = c.observed;
  j["comparison"] = c.comparison;
  j["threshold"] = c.threshold;
  j["pass"] = c.pass;
  j["witness"] = optional_point(c.witness);
  j["witness_secondary"] = optional_point(c.witness_secondary);
  j["details"] = c.details;
  return j;
}

Json to_json(const Certificate& cert) {
  Json j;
  j["property"] = cert.property;
  j["subject"] = cert.subject;
  j["criterion"] = cert.criterion;
  j["region"] = to_json(cert.region);
  j["grid"] = to_json(cert.grid);
  j["seed"] = cert.seed;
  j["pair_samples"] = cert.pair_samples;
  Json tol = Json::object();
  for (const auto& [name, value] : cert.tolerances) tol[name] = value;
  j["tolerances"] = tol;
  j["status"] = std::string(to_string(cert.status));
  j["pass"] = cert.passed();
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  Json cross = Json::array();
  for (const auto& c : cert.crosschecks) cross.push_back(to_json(c));
  j["crosschecks"] = cross;
  j["error"] = cert.error.empty() ? Json(nullptr)
                                  : Json{{"message", cert.error},
                                         {"point", optional_point(cert.error_point)}};
  j["scope"] = "numerical evidence at the recorded grid points and sampled pairs; not a proof";
  return j;
}

Json to_json(const SkewAffineFit& fit) {
  return Json{{"a", fit.a},
              {"b1", fit.b1},
              {"b2", fit.b2},
              {"rms_residual", fit.rms_residual},
              {"max_residual", fit.max_residual},
              {"max_residual_point", to_json(fit.max_residual_point)}};
}

Json to_json(const RefutationWitness& w) {
  return Json{{"best_a", w.best_a},
              {"min_sup_residual", w.min_sup_residual},
              {"threshold", w.threshold},
              {"refuted", w.refuted},
              {"a_interval", Json::array({w.a_lo, w.a_hi})},
              {"p_lo", to_json(w.p_lo)},
              {"asymmetry_lo", w.asymmetry_lo},
              {"p_hi", to_json(w.p_hi)},
              {"asymmetry_hi", w.asymmetry_hi}};
}

Json to_json(const PotentialTable& t) {
  Json j;
  j["region"] = to_json(t.region);
  j["grid"] = to_json(t.grid);
  j["anchor"] = to_json(t.anchor);
  j["quad_step"] = t.quad_step;
  j["effective_step"] = t.effective_step;
  j["step_adjusted"] = t.step_adjusted;
  j["gradient_mismatch"] = t.gradient_mismatch;
  Json xs = Json::array(), ys = Json::array(), rows = Json::array();
  for (std::size_t i = 0; i < t.grid.nx; ++i) {
    xs.push_back(lattice(t.region.xmin, t.region.xmax, i, t.grid.nx));
  }
  for (std::size_t r = 0; r < t.grid.ny; ++r) {
    ys.push_back(lattice(t.region.ymin, t.region.ymax, r, t.grid.ny));
    Json row = Json::array();
    for (std::size_t i = 0; i < t.grid.nx; ++i) row.push_back(t.at(i, r));
    rows.push_back(std::move(row));
  }
  j["x"] = std::move(xs);
  j["y"] = std::move(ys);
  j["values"] = std::move(rows);
  return j;
}

Json to_json(const AffinityClassification& a) {
  return Json{{"classification", a.affine ? "affine" : "non-affine"},
              {"spread_x", a.spread_x},
              {"spread_y", a.spread_y},
              {"tol", a.tol},
              {"component", a.component == 0 ? "x" : "y"},
              {"witness_max", to_json(a.witness_max)},
              {"witness_min", to_json(a.witness_min)}};
}

Json to_json(const CounterexampleCertificate& c) {
  Json j;
  j["u"] = c.u_text;
  j["region"] = to_json(c.region);
  j["grid"] = to_json(c.grid);
  j["verdict"] = std::string(to_string(c.verdict));
  j["first_failure"] = c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure);
  j["failures"] = c.failures;
  j["error"] = c.error.empty() ? Json(nullptr) : Json(c.error);

  Json stages;
  stages["remark_bounds"] = to_json(c.remark_bounds);
  stages["convex_concave_plus"] = to_json(c.convex_concave_plus);
  stages["convex_concave_minus"] = to_json(c.convex_concave_minus);
  stages["monotone_plus"] = to_json(c.monotone_plus);
  stages["monotone_minus"] = to_json(c.monotone_minus);
  stages["gradient_sum"] = to_json(c.gradient_sum);
  if (c.potential) {
    Json pot;
    pot["anchor"] = to_json(c.potential->anchor);
    pot["quad_step"] = c.potential->quad_step;
    pot["effective_step"] = c.potential->effective_step;
    pot["gradient_mismatch"] = c.potential->gradient_mismatch;
    pot["max_error_vs_norm_squared"] = c.potential_error;
    pot["matches_norm_squared"] = c.potential_matches;
    stages["potential_sum"] = std::move(pot);
  } else {
    stages["potential_sum"] = nullptr;
  }
  stages["affinity_sum"] = c.affinity ? to_json(*c.affinity) : Json(nullptr);
  stages["refute_plus"] = c.refute_plus ? to_json(*c.refute_plus) : Json(nullptr);
  stages["refute_minus"] = c.refute_minus ? to_json(*c.refute_minus) : Json(nullptr);
  j["stages"] = std::move(stages);

  j["verified"] = Json::array({
      "u_xx and u_yy bounded by 1 and u_xy nonconstant on the grid",
      "f+ and f- pass the separable convex-concave criterion on the grid",
      "F+ and F- are monotone on the grid and on sampled pairs",
      "F+ + F- is curl-free on the grid with potential x^2 + y^2",
      "F+ + F- is not constant, so its potential is not affine",
      "neither F+ nor F- is skew-affine: the integrability gap of F - skew(a) stays above "
      "threshold for every a",
  });
  j["not_verified"] = Json::array({
      "the acyclic parts S+ and S- are not formed explicitly",
      "maximality of the operators",
      "any property outside the certification region",
  });
  return j;
}

Json to_json(const SolveTrace& t) {
  return Json{{"converged", t.converged},
              {"iterations", t.iterations},
              {"final_point", to_json(t.final_point)},
              {"final_residual", t.final_residual},
              {"step", t.step},
              {"lipschitz_estimate", t.lipschitz}};
}

Json make_report(std::string_view kind, const Json& payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = std::string(kind);
  for (const auto& [key, value] : payload.items()) j[key] = value;
  return j;
}

namespace {

void dump_to(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += Json(key).dump();
        out += ": ";
        dump_to(value, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        dump_to(value, indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_to(j, 0, out);
  out += '\n';
  return out;
}

void write_grid_csv(std::ostream& os, const Region& region, const GridSpec& grid,
                    const std::vector<double>& values) {
  os << "x,y,metric\n";
  for (std::size_t k = 0; k < values.size() && k < grid.size(); ++k) {
    const Vec2 p = grid_point(region, grid, k);
    os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(values[k]) << '\n';
  }
}

void write_trace_csv(std::ostream& os, const SolveTrace& trace) {
  os << "k,x,y,residual\n";
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    os << trace.iteration_index[n] << ',' << format_double(trace.iterates[n].x) << ','
       << format_double(trace.iterates[n].y) << ',' << format_double(trace.residuals[n]) << '\n';
  }
}

}  // namespace monocert
