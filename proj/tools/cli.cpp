#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "monocert/builtins.hpp"
#include "monocert/certify.hpp"
#include "monocert/counterexample.hpp"
#include "monocert/dynamics.hpp"
#include "monocert/errors.hpp"
#include "monocert/report.hpp"

namespace monocert::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view tok) {
  if (tok == "pi" || tok == "+pi") return std::numbers::pi;
  if (tok == "-pi") return -std::numbers::pi;
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("invalid number '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos
                                                                   : at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

}  // namespace

Region parse_region(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw UsageError("region must be xmin:xmax:ymin:ymax, got '" + text + "'");
  Region r{parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]),
           parse_number(parts[3])};
  try {
    validate(r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return r;
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, 'x');
  if (parts.size() != 2) throw UsageError("grid must be NXxNY, got '" + text + "'");
  GridSpec g;
  for (int k = 0; k < 2; ++k) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(parts[k].data(), parts[k].data() + parts[k].size(), v);
    if (parts[k].empty() || ec != std::errc() || ptr != parts[k].data() + parts[k].size()) {
      throw UsageError("grid must be NXxNY, got '" + text + "'");
    }
    (k == 0 ? g.nx : g.ny) = v;
  }
  try {
    validate(g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

Vec2 parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("point must be x,y, got '" + text + "'");
  return {parse_number(parts[0]), parse_number(parts[1])};
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError("interval must be lo:hi, got '" + text + "'");
  return {parse_number(parts[0]), parse_number(parts[1])};
}

namespace {

struct RunConfig {
  std::string op;
  std::string u;
  std::string member = "plus";
  std::string f;
  std::string kind;
  std::string region = "-pi:pi:-pi:pi";
  std::string grid = "129x129";
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t pairs = 10000;
  unsigned threads = 0;
  std::string json_path;
  std::string csv_path;

  // subcommand specifics
  std::string property;
  std::string at;
  std::string a_range;
  std::optional<double> threshold;
  std::string anchor = "0,0";
  double quad_step = 1e-3;
  std::string csv_dir;
  std::string z0 = "1,1";
  double solve_tol = 1e-8;
  std::size_t max_iter = 100000;
  std::optional<double> step;
  std::size_t keep_every = 1;
};

void add_source_options(CLI::App* app, RunConfig& c) {
  app->add_option("--op", c.op, "Built-in operator: fplus | fminus | sum | identity")
      ->check(CLI::IsMember({"fplus", "fminus", "sum", "identity"}));
  app->add_option("--u", c.u, "Coupling u(x,y) of the family x^2/2 +- u - y^2/2");
  app->add_option("--member", c.member, "Family member selected by --u: plus | minus | sum")
      ->check(CLI::IsMember({"plus", "minus", "sum"}));
  app->add_option("--f", c.f, "Scalar field expression f(x,y)");
  app->add_option("--kind", c.kind, "Operator built from --f: gradient | saddle")
      ->check(CLI::IsMember({"gradient", "saddle"}));
}

void add_grid_options(CLI::App* app, RunConfig& c) {
  app->add_option("--region", c.region, "xmin:xmax:ymin:ymax (numbers or pi/-pi)");
  app->add_option("--grid", c.grid, "Lattice size NXxNY");
  app->add_option("--threads", c.threads, "Worker cap (0 = available parallelism)");
}

void add_output_options(CLI::App* app, RunConfig& c) {
  app->add_option("--json", c.json_path, "Write the JSON report here");
  app->add_option("--csv", c.csv_path, "Write the CSV dump here");
}

std::size_t count_sources(const RunConfig& c) {
  return static_cast<std::size_t>(!c.op.empty()) + static_cast<std::size_t>(!c.u.empty()) +
         static_cast<std::size_t>(!c.f.empty());
}

VectorField2 select_field(const RunConfig& c) {
  if (count_sources(c) != 1) throw UsageError("select exactly one of --op, --u, --f");
  if (!c.op.empty()) return *builtins::field_by_name(c.op);
  if (!c.u.empty()) {
    FamilyPair pair = make_pair(c.u);
    if (c.member == "minus") return pair.F_minus;
    if (c.member == "sum") return add(pair.F_plus, pair.F_minus);
    return pair.F_plus;
  }
  if (c.kind.empty()) throw UsageError("--f requires --kind gradient|saddle");
  const ScalarField2 f = ScalarField2::parse(c.f);
  return c.kind == "gradient" ? gradient_field(f) : saddle_field(f);
}

ScalarField2 select_scalar(const RunConfig& c) {
  if (count_sources(c) != 1) throw UsageError("select exactly one of --op, --u, --f");
  if (!c.op.empty()) {
    auto f = builtins::scalar_by_name(c.op);
    if (!f) throw UsageError("--op " + c.op + " has no scalar field; use fplus or fminus");
    return *f;
  }
  if (!c.u.empty()) {
    if (c.member == "sum") throw UsageError("--member sum has no scalar field");
    FamilyPair pair = make_pair(c.u);
    return c.member == "minus" ? pair.f_minus : pair.f_plus;
  }
  return ScalarField2::parse(c.f);
}

CertifyOptions certify_options(const RunConfig& c) {
  CertifyOptions o;
  o.tol = c.tol;
  o.seed = c.seed;
  o.pair_samples = c.pairs;
  o.threads = c.threads;
  return o;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

void write_json(const RunConfig& c, std::string_view kind, const Json& payload) {
  if (!c.json_path.empty()) write_file(c.json_path, dump_json(make_report(kind, payload)));
}

void write_grid(const std::string& path, const Region& r, const GridSpec& g,
                const std::vector<double>& values) {
  std::ostringstream os;
  write_grid_csv(os, r, g, values);
  write_file(path, os.str());
}

std::string fmt_point(const std::optional<Vec2>& p) {
  if (!p) return "-";
  return "(" + format_double(p->x) + ", " + format_double(p->y) + ")";
}

int report_certificate(const RunConfig& c, const Certificate& cert, std::ostream& out) {
  write_json(c, "certificate", to_json(cert));
  if (!c.csv_path.empty() && !cert.grid_metric.empty()) {
    write_grid(c.csv_path, cert.region, cert.grid, cert.grid_metric);
  }
  out << "certify " << cert.property << " [" << cert.subject << "]: ";
  if (cert.status == Status::Indeterminate) {
    out << "INDETERMINATE " << cert.error << " at " << fmt_point(cert.error_point) << '\n';
    return kIndeterminate;
  }
  out << (cert.passed() ? "PASS" : "FAIL");
  for (const Check& chk : cert.checks) {
    out << "; " << chk.id << (chk.pass ? " ok " : " FAILED ") << chk.metric << '='
        << format_double(chk.observed) << ' ' << chk.comparison << ' '
        << format_double(chk.threshold) << " at " << fmt_point(chk.witness);
  }
  out << '\n';
  return cert.passed() ? kSuccess : kCheckFailed;
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const Vec2 p = parse_point(c.at);
  const VectorField2 f = select_field(c);
  const FieldValue v = f.eval(p);
  Json payload;
  payload["subject"] = f.name();
  payload["field_kind"] = std::string(to_string(f.kind()));
  payload["point"] = to_json(p);
  payload["value"] = to_json(v.value);
  payload["jacobian"] = Json::array({Json::array({v.jacobian.a11, v.jacobian.a12}),
                                     Json::array({v.jacobian.a21, v.jacobian.a22})});
  payload["jacobian_exact"] = f.exact_jacobian();
  write_json(c, "eval", payload);
  out << "value " << format_double(v.value.x) << ' ' << format_double(v.value.y) << '\n'
      << "jacobian " << format_double(v.jacobian.a11) << ' ' << format_double(v.jacobian.a12)
      << ' ' << format_double(v.jacobian.a21) << ' ' << format_double(v.jacobian.a22)
      << (f.exact_jacobian() ? "" : " (central differences)") << '\n';
  return kSuccess;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const Region region = parse_region(c.region);
  const GridSpec grid = parse_grid(c.grid);
  const CertifyOptions opts = certify_options(c);
  if (c.property == "monotone") {
    return report_certificate(c, certify_monotone(select_field(c), region, grid, opts), out);
  }
  if (c.property == "gradient") {
    return report_certificate(c, certify_gradient(select_field(c), region, grid, opts), out);
  }
  if (c.property == "convex") {
    return report_certificate(c, certify_convex(select_scalar(c), region, grid, opts), out);
  }
  return report_certificate(c, certify_convex_concave(select_scalar(c), region, grid, opts), out);
}

int cmd_fit_skew(const RunConfig& c, std::ostream& out) {
  const Region region = parse_region(c.region);
  const GridSpec grid = parse_grid(c.grid);
  const VectorField2 f = select_field(c);
  const SkewAffineFit fit = fit_skew_affine(f, region, grid, c.threads);
  Json payload;
  payload["subject"] = f.name();
  payload["region"] = to_json(region);
  payload["grid"] = to_json(grid);
  payload["fit"] = to_json(fit);
  write_json(c, "skew_affine_fit", payload);
  out << "fit-skew [" << f.name() << "]: a=" << format_double(fit.a)
      << " b=(" << format_double(fit.b1) << ", " << format_double(fit.b2)
      << ") rms_residual=" << format_double(fit.rms_residual)
      << " max_residual=" << format_double(fit.max_residual) << '\n';
  return kSuccess;
}

int cmd_refute_skew(const RunConfig& c, std::ostream& out) {
  const Region region = parse_region(c.region);
  const GridSpec grid = parse_grid(c.grid);
  const VectorField2 f = select_field(c);
  RefuteOptions ro;
  if (!c.a_range.empty()) {
    ro.a_interval = parse_interval(c.a_range);
    if (ro.a_interval->first > ro.a_interval->second) throw UsageError("empty --a-range");
  }
  ro.threshold = c.threshold;
  ro.threads = c.threads;
  const RefutationWitness w = refute_skew_affine(f, region, grid, ro);
  Json payload;
  payload["subject"] = f.name();
  payload["region"] = to_json(region);
  payload["grid"] = to_json(grid);
  payload["refutation"] = to_json(w);
  write_json(c, "skew_affine_refutation", payload);
  out << "refute-skew [" << f.name() << "]: " << (w.refuted ? "REFUTED" : "NOT REFUTED")
      << " min_sup_residual=" << format_double(w.min_sup_residual)
      << " best_a=" << format_double(w.best_a) << " threshold=" << format_double(w.threshold)
      << " asymmetry in [" << format_double(w.asymmetry_lo) << " at " << fmt_point(w.p_lo)
      << ", " << format_double(w.asymmetry_hi) << " at " << fmt_point(w.p_hi) << "]\n";
  return w.refuted ? kSuccess : kCheckFailed;
}

int cmd_reconstruct(const RunConfig& c, std::ostream& out) {
  const Region region = parse_region(c.region);
  const GridSpec grid = parse_grid(c.grid);
  const VectorField2 f = select_field(c);
  const Vec2 anchor = parse_point(c.anchor);
  const CertifyOptions opts = certify_options(c);
  PotentialTable table;
  try {
    table = reconstruct_potential(f, region, grid, anchor, c.quad_step, opts);
  } catch (const PreconditionError& e) {
    out << "reconstruct [" << f.name() << "]: FAIL " << e.what() << '\n';
    return kCheckFailed;
  }
  const double aff_tol = opts.tol.value_or(kQuadratureTolerance);
  const AffinityClassification aff = classify_affinity(table, f, aff_tol, c.threads);
  Json payload;
  payload["subject"] = f.name();
  payload["potential"] = to_json(table);
  payload["affinity"] = to_json(aff);
  write_json(c, "potential", payload);
  if (!c.csv_path.empty()) write_grid(c.csv_path, region, grid, table.values);
  out << "reconstruct [" << f.name() << "]: OK gradient_mismatch="
      << format_double(table.gradient_mismatch) << " effective_step="
      << format_double(table.effective_step) << "; " << (aff.affine ? "affine" : "non-affine")
      << " spread=(" << format_double(aff.spread_x) << ", " << format_double(aff.spread_y)
      << ")\n";
  return kSuccess;
}

int cmd_counterexample(const RunConfig& c, std::ostream& out) {
  if (!c.op.empty() || !c.f.empty()) throw UsageError("counterexample takes --u only");
  const Region region = parse_region(c.region);
  const GridSpec grid = parse_grid(c.grid);
  CounterexampleConfig cfg;
  cfg.certify = certify_options(c);
  cfg.anchor = parse_point(c.anchor);
  cfg.quad_step = c.quad_step;
  cfg.refutation_threshold = c.threshold;
  const std::string u = c.u.empty() ? std::string(builtins::kSinProduct) : c.u;
  const CounterexampleCertificate cert = refute_additivity(u, region, grid, cfg);
  write_json(c, "counterexample_certificate", to_json(cert));
  if (!c.csv_dir.empty()) {
    std::filesystem::create_directories(c.csv_dir);
    const std::filesystem::path dir(c.csv_dir);
    auto dump = [&](const std::string& name, const Certificate& stage) {
      if (!stage.grid_metric.empty()) {
        write_grid((dir / (name + ".csv")).string(), region, grid, stage.grid_metric);
      }
    };
    dump("remark_bounds_uxy", cert.remark_bounds);
    dump("convex_concave_plus_fxx", cert.convex_concave_plus);
    dump("convex_concave_minus_fxx", cert.convex_concave_minus);
    dump("monotone_plus_min_sym_eig", cert.monotone_plus);
    dump("monotone_minus_min_sym_eig", cert.monotone_minus);
    dump("gradient_sum_asymmetry", cert.gradient_sum);
    if (cert.potential) {
      write_grid((dir / "potential_sum.csv").string(), region, grid, cert.potential->values);
    }
  }
  out << "counterexample [u = " << cert.u_text << "]: " << to_string(cert.verdict);
  if (!cert.first_failure.empty()) out << " (first failure: " << cert.first_failure << ")";
  if (cert.refute_plus && cert.refute_minus) {
    out << "; refutation residuals " << format_double(cert.refute_plus->min_sup_residual) << ", "
        << format_double(cert.refute_minus->min_sup_residual);
  }
  if (cert.potential) out << "; potential error " << format_double(cert.potential_error);
  out << '\n';
  switch (cert.verdict) {
    case Verdict::Certified: return kSuccess;
    case Verdict::NotCertified: return kCheckFailed;
    case Verdict::Indeterminate: return kIndeterminate;
  }
  return kIndeterminate;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const VectorField2 f = select_field(c);
  ExtragradientOptions o;
  o.tol = c.solve_tol;
  o.max_iter = c.max_iter;
  o.lipschitz_region = parse_region(c.region);
  o.lipschitz_grid = parse_grid(c.grid);
  o.step = c.step;
  o.keep_every = c.keep_every;
  o.threads = c.threads;
  const SolveTrace t = extragradient(f, parse_point(c.z0), o);
  Json payload;
  payload["subject"] = f.name();
  payload["z0"] = to_json(parse_point(c.z0));
  payload["tol"] = o.tol;
  payload["max_iter"] = o.max_iter;
  payload["trace"] = to_json(t);
  write_json(c, "extragradient", payload);
  if (!c.csv_path.empty()) {
    std::ostringstream os;
    write_trace_csv(os, t);
    write_file(c.csv_path, os.str());
  }
  out << "solve [" << f.name() << "]: " << (t.converged ? "CONVERGED" : "NOT CONVERGED")
      << " iterations=" << t.iterations << " z=" << fmt_point(t.final_point)
      << " residual=" << format_double(t.final_residual) << " step=" << format_double(t.step)
      << '\n';
  return t.converged ? kSuccess : kCheckFailed;
}

/// Rewrites "--opt -value" as "--opt=-value" for options whose values may
/// start with '-' (negative numbers, -pi, unary minus in expressions).
std::vector<std::string> join_dash_values(const std::vector<std::string>& argv) {
  static const std::set<std::string, std::less<>> value_options = {
      "--region", "--at", "--z0", "--anchor", "--a-range", "--u", "--f",
      "--tol", "--threshold", "--step", "--seed"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < argv.size(); ++k) {
    if (value_options.count(argv[k]) && k + 1 < argv.size() && argv[k + 1].size() > 1 &&
        argv[k + 1][0] == '-' && argv[k + 1][1] != '-') {
      out.push_back(argv[k] + "=" + argv[k + 1]);
      ++k;
    } else {
      out.push_back(argv[k]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify monotone-operator properties of planar fields", "monocert"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");
  RunConfig c;

  auto* eval = app.add_subcommand("eval", "Print a field's value and Jacobian at a point");
  add_source_options(eval, c);
  eval->add_option("--at", c.at, "Point x,y")->required();
  eval->add_option("--json", c.json_path, "Write the JSON report here");

  auto* certify = app.add_subcommand("certify", "Certify a property on a grid");
  certify->add_option("property", c.property, "monotone | convex | convex-concave | gradient")
      ->required()
      ->check(CLI::IsMember({"monotone", "convex", "convex-concave", "gradient"}));
  add_source_options(certify, c);
  add_grid_options(certify, c);
  add_output_options(certify, c);
  certify->add_option("--tol", c.tol, "Tolerance (default 1e-9, 1e-6 for FD Jacobians)");
  certify->add_option("--seed", c.seed, "Seed for the pairwise samples");
  certify->add_option("--pairs", c.pairs, "Number of random pairs for the monotone check");

  auto* fit = app.add_subcommand("fit-skew", "Least-squares skew-affine fit");
  add_source_options(fit, c);
  add_grid_options(fit, c);
  fit->add_option("--json", c.json_path, "Write the JSON report here");

  auto* refute = app.add_subcommand("refute-skew", "Refute skew-affinity via the integrability gap");
  add_source_options(refute, c);
  add_grid_options(refute, c);
  refute->add_option("--json", c.json_path, "Write the JSON report here");
  refute->add_option("--a-range", c.a_range, "Search interval lo:hi for the skew parameter");
  refute->add_option("--threshold", c.threshold, "Refutation threshold");

  auto* recon = app.add_subcommand("reconstruct", "Reconstruct the potential of a curl-free field");
  add_source_options(recon, c);
  add_grid_options(recon, c);
  add_output_options(recon, c);
  recon->add_option("--anchor", c.anchor, "Anchor point x,y where the potential is 0");
  recon->add_option("--quad-step", c.quad_step, "Simpson step")->check(CLI::PositiveNumber);
  recon->add_option("--tol", c.tol, "Curl-free tolerance");

  auto* cex = app.add_subcommand("counterexample", "Run the full additivity refutation pipeline");
  cex->add_option("--u", c.u, "Coupling u(x,y) (default sin(x)*sin(y))");
  add_grid_options(cex, c);
  cex->add_option("--json", c.json_path, "Write the JSON certificate here");
  cex->add_option("--csv-dir", c.csv_dir, "Write per-stage CSV dumps into this directory");
  cex->add_option("--tol", c.tol, "Tolerance for jet-exact checks");
  cex->add_option("--seed", c.seed, "Seed for the pairwise samples");
  cex->add_option("--pairs", c.pairs, "Number of random pairs per monotone check");
  cex->add_option("--anchor", c.anchor, "Potential anchor x,y");
  cex->add_option("--quad-step", c.quad_step, "Simpson step")->check(CLI::PositiveNumber);
  cex->add_option("--threshold", c.threshold, "Skew refutation threshold");

  auto* solve = app.add_subcommand("solve", "Extragradient zero search");
  add_source_options(solve, c);
  add_grid_options(solve, c);
  add_output_options(solve, c);
  solve->add_option("--z0", c.z0, "Start point x,y");
  solve->add_option("--tol", c.solve_tol, "Residual tolerance |F(z)|_inf");
  solve->add_option("--max-iter", c.max_iter, "Iteration cap");
  solve->add_option("--step", c.step, "Fixed step (default 1/(2L))");
  solve->add_option("--keep-every", c.keep_every, "Keep every k-th iterate in the CSV");

  const std::vector<std::string> argv = join_dash_values(raw_argv);
  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(c, out);
    if (certify->parsed()) return cmd_certify(c, out);
    if (fit->parsed()) return cmd_fit_skew(c, out);
    if (refute->parsed()) return cmd_refute_skew(c, out);
    if (recon->parsed()) return cmd_reconstruct(c, out);
    if (cex->parsed()) return cmd_counterexample(c, out);
    if (solve->parsed()) return cmd_solve(c, out);
  } catch (const ParseError& e) {
    err << "error: expression " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace monocert::cli
