#include "qharm/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qharm/bounds.hpp"
#include "qharm/classes.hpp"
#include "qharm/io.hpp"
#include "qharm/render.hpp"
#include "qharm/sampling.hpp"
#include "qharm/verify.hpp"

namespace qharm::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string q, m, alpha, b1, r;
  std::string input;
  std::string weights;
  bool restricted = false;
  std::string grid;
  double max_radius = 0.999;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  int count = 100;
  std::string format;
  std::string output;
  bool variant = false;
  bool random = false;
  std::string reduce;
  bool discrepancy = false;
  int order = 0;
};

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(std::string("--") + flag + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("--") + flag + ": empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  for (double v : parse_list(text, flag)) {
    if (v != static_cast<int>(v)) throw UsageError(std::string("--") + flag + ": expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

double single(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("--") + flag + " is required");
  const auto v = parse_list(text, flag);
  if (v.size() != 1) throw UsageError(std::string("--") + flag + ": expected a single value");
  return v[0];
}

ClassParams single_params(const RunConfig& c) {
  const double m = single(c.m, "m");
  if (m != static_cast<int>(m)) throw UsageError("--m: expected an integer");
  return ClassParams(QParam(single(c.q, "q")), static_cast<int>(m), single(c.alpha, "alpha"));
}

std::vector<ClassParams> param_sweep(const RunConfig& c, const std::string& q_def,
                                     const std::string& m_def, const std::string& a_def) {
  std::vector<ClassParams> out;
  for (double q : parse_list(c.q.empty() ? q_def : c.q, "q")) {
    for (int m : parse_int_list(c.m.empty() ? m_def : c.m, "m")) {
      for (double a : parse_list(c.alpha.empty() ? a_def : c.alpha, "alpha")) {
        out.emplace_back(QParam(q), m, a);
      }
    }
  }
  return out;
}

int truncation_order(const RunConfig& c) {
  return c.order > 0 ? c.order : default_truncation_order();
}

GridSpec grid_from(const RunConfig& c, int def_rings, int def_angles) {
  int rings = def_rings;
  int angles = def_angles;
  if (!c.grid.empty()) {
    std::string g = c.grid;
    const std::string times = "\xC3\x97";  // U+00D7
    if (auto pos = g.find(times); pos != std::string::npos) g.replace(pos, times.size(), "x");
    const auto x = g.find_first_of("xX");
    try {
      if (x == std::string::npos) throw std::invalid_argument("");
      std::size_t u1 = 0, u2 = 0;
      rings = std::stoi(g.substr(0, x), &u1);
      angles = std::stoi(g.substr(x + 1), &u2);
      if (u1 != x || u2 != g.size() - x - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("--grid: expected RINGSxANGLES, got '" + c.grid + "'");
    }
    if (rings < 1 || angles < 1) throw UsageError("--grid: counts must be positive");
  }
  return GridSpec::boundary_weighted(rings, angles, std::min(0.05, c.max_radius), c.max_radius);
}

HarmonicSeries load_series(const RunConfig& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  return io::series_from_json(io::read_json_file(c.input));
}

void reject(bool cond, const std::string& what) {
  if (cond) throw UsageError(what);
}

std::string format_or(const RunConfig& c, const std::string& def) {
  return c.format.empty() ? def : c.format;
}

BoundsVariant variant_of(const RunConfig& c) {
  return c.variant ? BoundsVariant::kVariant : BoundsVariant::kPrinted;
}

struct Outcome {
  std::string text;
  int code = kPass;
};

// --- commands --------------------------------------------------------------

Outcome cmd_check(const RunConfig& c) {
  reject(c.random, "check: --random is not accepted");
  reject(format_or(c, "json") != "json", "check: only --format json is supported");
  const ClassParams p = single_params(c);
  const HarmonicSeries f = load_series(c);
  Json j;
  j["params"] = io::params_to_json(p);
  MembershipReport rep;
  if (c.restricted) {
    rep = is_member_restricted(f, p);
    j["mode"] = "restricted";
  } else {
    rep = coefficient_functional(f, p);
    j["mode"] = "sufficiency";
  }
  j["membership"] = io::membership_to_json(rep);
  Outcome o;
  switch (rep.verdict) {
    case Verdict::kMemberSufficient:
    case Verdict::kMemberIff:
      o.code = kPass;
      break;
    case Verdict::kNonMember: {
      o.code = kFail;
      const auto radii = necessity_radii();
      const auto r0 = necessity_witness(f, p, radii);
      j["necessity_witness"] = r0 ? Json{{"r0", *r0}} : Json(nullptr);
      break;
    }
    case Verdict::kNotCertified:
      o.code = kUncertified;
      break;
  }
  o.text = io::dump(j) + "\n";
  return o;
}

Outcome cmd_extremal(const RunConfig& c) {
  reject(c.weights.empty(), "extremal: --weights is required");
  const ClassParams p = single_params(c);
  const ExtremalWeights w = io::extremal_weights_from_json(io::read_json_file(c.weights));
  const HarmonicSeries f = extremal_function(p, w, truncation_order(c));
  return {io::dump(io::series_to_json(f)) + "\n", kPass};
}

Outcome cmd_extreme_points(const RunConfig& c) {
  const ClassParams p = single_params(c);
  const int order = truncation_order(c);
  if (!c.weights.empty()) {
    const ConvexWeights w = io::convex_weights_from_json(io::read_json_file(c.weights));
    return {io::dump(io::series_to_json(convex_combination(p, w, order))) + "\n", kPass};
  }
  const int count = std::min(c.count, order);
  reject(count < 1, "extreme-points: --count must be positive");
  Json hs = Json::array();
  Json gs = Json::array();
  for (int n = 1; n <= count; ++n) {
    hs.push_back(Json{{"n", n}, {"series", io::series_to_json(extreme_point_h(p, n, order))}});
    const HarmonicSeries g = extreme_point_g(p, n, order);
    gs.push_back(Json{{"n", n},
                      {"hull_boundary", g.on_hull_boundary()},
                      {"series", io::series_to_json(g)}});
  }
  Json j{{"params", io::params_to_json(p)}, {"h", hs}, {"g", gs}};
  return {io::dump(j) + "\n", kPass};
}

Outcome cmd_distort(const RunConfig& c) {
  const auto params = param_sweep(c, "", "", "");
  const auto b1s = parse_list(c.b1.empty() ? "0" : c.b1, "b1");
  const auto rs = parse_list(c.r.empty() ? "0.25,0.5,0.9" : c.r, "r");
  const BoundsVariant v = variant_of(c);
  const std::string fmt = format_or(c, "csv");
  reject(fmt != "csv" && fmt != "json", "distort: --format must be csv or json");
  std::string csv = io::bounds_csv_header();
  Json rows = Json::array();
  for (const auto& p : params) {
    for (double b1 : b1s) {
      const double cover = covering_radius(p, b1, v);
      for (double r : rs) {
        const DistortionBound d = distortion_bounds(p, b1, r, v);
        csv += io::bounds_csv_row(p, b1, &r, &d, cover);
        rows.push_back(Json{{"q", p.q().value()}, {"m", p.m()}, {"alpha", p.alpha()},
                            {"b1", b1}, {"r", r}, {"lower", d.lower}, {"upper", d.upper},
                            {"lower_vacuous", d.lower_vacuous},
                            {"covering_radius", cover}});
      }
    }
  }
  if (fmt == "csv") return {csv, kPass};
  return {io::dump(Json{{"variant", std::string(variant_name(v))}, {"rows", rows}}) + "\n", kPass};
}

Outcome cmd_cover(const RunConfig& c) {
  const BoundsVariant v = variant_of(c);
  if (!c.input.empty()) {
    const ClassParams p = single_params(c);
    const HarmonicSeries f = load_series(c);
    const double ring = c.r.empty() ? kDefaultRingRadius : single(c.r, "r");
    const VerificationReport rep = verify_covering(f, p, ring, c.tol, 1024, TailModel::kExact, v);
    return {io::dump(io::report_to_json(rep)) + "\n", rep.pass ? kPass : kFail};
  }
  const auto params = param_sweep(c, "", "", "");
  const auto b1s = parse_list(c.b1.empty() ? "0" : c.b1, "b1");
  const std::string fmt = format_or(c, "csv");
  reject(fmt != "csv" && fmt != "json", "cover: --format must be csv or json");
  std::string csv = io::bounds_csv_header();
  Json rows = Json::array();
  for (const auto& p : params) {
    for (double b1 : b1s) {
      const double cover = covering_radius(p, b1, v);
      csv += io::bounds_csv_row(p, b1, nullptr, nullptr, cover);
      rows.push_back(Json{{"q", p.q().value()}, {"m", p.m()}, {"alpha", p.alpha()},
                          {"b1", b1}, {"covering_radius", cover}});
    }
  }
  if (fmt == "csv") return {csv, kPass};
  return {io::dump(Json{{"variant", std::string(variant_name(v))}, {"rows", rows}}) + "\n", kPass};
}

Outcome run_reduce(const RunConfig& c) {
  const std::string kind = c.reduce.empty() ? "q1" : c.reduce;
  const std::string fmt = format_or(c, "json");
  reject(fmt != "json" && fmt != "csv", "reduce: --format must be json or csv");
  if (kind == "m0") {
    reject(fmt != "json", "reduce m0: only --format json is supported");
    const HarmonicSeries f = load_series(c);
    const VerificationReport rep = verify_reduction_m0(f, QParam(single(c.q, "q")), grid_from(c, 32, 128));
    return {io::dump(io::report_to_json(rep)) + "\n", rep.pass ? kPass : kFail};
  }
  reject(kind != "q1", "--reduce: expected m0 or q1");
  const AnalyticSeries s = c.input.empty()
                               ? AnalyticSeries::from_coeffs({1.0, 1.0})
                               : load_series(c).h();
  const double m = single(c.m, "m");
  reject(m != static_cast<int>(m) || m < 0, "--m: expected a nonnegative integer");
  const auto qs = parse_list(c.q.empty() ? "0.9,0.99,0.999" : c.q, "q");
  const ReductionQ1Result res = verify_reduction_q1(s, static_cast<int>(m), qs);
  const int code = res.report.pass ? kPass : kFail;
  if (fmt == "csv") {
    std::string csv = "q,n,error\n";
    for (std::size_t k = 0; k < res.q_values.size(); ++k) {
      for (std::size_t n = 1; n < res.errors[k].size(); ++n) {
        csv += io::format_number(res.q_values[k]) + "," + std::to_string(n) + "," +
               io::format_number(res.errors[k][n]) + "\n";
      }
    }
    return {csv, code};
  }
  Json table = Json::array();
  for (std::size_t k = 0; k < res.q_values.size(); ++k) {
    Json errs = Json::array();
    for (std::size_t n = 1; n < res.errors[k].size(); ++n) errs.push_back(res.errors[k][n]);
    table.push_back(Json{{"q", res.q_values[k]}, {"max_error", res.max_errors[k]}, {"errors", errs}});
  }
  Json j{{"m", static_cast<int>(m)}, {"table", table}, {"report", io::report_to_json(res.report)}};
  return {io::dump(j) + "\n", code};
}

Json suite_json(const SuiteResult& s) {
  Json arr = Json::array();
  for (const auto& r : s.reports) arr.push_back(io::report_to_json(r));
  return arr;
}

Outcome cmd_verify(const RunConfig& c) {
  if (!c.reduce.empty()) {
    reject(c.random || c.discrepancy, "verify: --reduce excludes --random and --discrepancy");
    return run_reduce(c);
  }
  reject(format_or(c, c.discrepancy ? "csv" : "json") == "svg", "verify: --format svg is not supported");
  if (c.discrepancy) {
    reject(c.random || !c.input.empty(), "verify: --discrepancy excludes --random and --input");
    const auto params = param_sweep(c, "0.5,0.9", "0,1,2,4", "0,0.25,0.5");
    const auto b1s = parse_list(c.b1.empty() ? "0,0.1,0.2,0.3" : c.b1, "b1");
    const auto rs = parse_list(c.r.empty() ? "0.25,0.5,0.9" : c.r, "r");
    const auto rows = b1_discrepancy_table(params, b1s, rs, 12, 720, c.tol);
    if (format_or(c, "csv") == "csv") return {io::discrepancy_csv(rows), kPass};
    Json arr = Json::array();
    for (const auto& w : rows) {
      arr.push_back(Json{{"q", w.q}, {"m", w.m}, {"alpha", w.alpha}, {"b1", w.b1}, {"r", w.r},
                         {"printed_lower", w.printed_lower}, {"printed_upper", w.printed_upper},
                         {"variant_lower", w.variant_lower}, {"variant_upper", w.variant_upper},
                         {"oracle_min", w.oracle_min}, {"oracle_max", w.oracle_max},
                         {"distortion_violated", w.distortion_violated},
                         {"printed_cover", w.printed_cover}, {"variant_cover", w.variant_cover},
                         {"oracle_cover", w.oracle_cover}, {"cover_violated", w.cover_violated}});
    }
    return {io::dump(Json{{"rows", arr}}) + "\n", kPass};
  }
  reject(format_or(c, "json") != "json", "verify: only --format json is supported");

  SuiteOptions opt;
  opt.grid = grid_from(c, 32, 128);
  opt.injectivity_grid = GridSpec::boundary_weighted(12, 24, std::min(0.05, c.max_radius), c.max_radius);
  opt.tol = c.tol;
  opt.variant = variant_of(c);
  opt.restricted = c.restricted;

  if (!c.random) {
    reject(c.input.empty(), "verify: give --input or --random");
    const ClassParams p = single_params(c);
    const HarmonicSeries f = load_series(c);
    const SuiteResult s = run_suite(f, p, opt);
    Json j;
    j["mode"] = "input";
    j["params"] = io::params_to_json(p);
    j["membership"] = io::membership_to_json(c.restricted ? is_member_restricted(f, p)
                                                          : coefficient_functional(f, p));
    j["reports"] = suite_json(s);
    j["pass"] = s.all_pass();
    return {io::dump(j) + "\n", s.all_pass() ? kPass : kFail};
  }

  reject(!c.input.empty(), "verify: --random excludes --input");
  reject(c.count < 1, "verify: --count must be positive");
  sampling::Rng rng(c.seed);
  const bool has_q = !c.q.empty(), has_m = !c.m.empty(), has_a = !c.alpha.empty();
  const double fixed_q = has_q ? single(c.q, "q") : 0.0;
  const double fixed_m = has_m ? single(c.m, "m") : 0.0;
  const double fixed_a = has_a ? single(c.alpha, "alpha") : 0.0;
  constexpr int kSupport = 16;

  Json members = Json::array();
  Json by_check = Json::object();
  int failures = 0;
  for (int k = 0; k < c.count; ++k) {
    const ClassParams drawn = sampling::random_params(rng);
    const ClassParams p(QParam(has_q ? fixed_q : drawn.q().value()),
                        has_m ? static_cast<int>(fixed_m) : drawn.m(),
                        has_a ? fixed_a : drawn.alpha());
    const HarmonicSeries f =
        c.restricted
            ? convex_combination(p, sampling::random_convex_weights(rng, kSupport, true), kSupport)
            : sampling::random_member(rng, p, kSupport, 0.0, 1.0);
    const SuiteResult s = run_suite(f, p, opt);
    Json checks = Json::object();
    Json failed = Json::array();
    for (const auto& r : s.reports) {
      checks[r.check] = r.extremum;
      auto& tally = by_check[r.check];
      if (tally.is_null()) tally = Json{{"pass", 0}, {"fail", 0}};
      tally[r.pass ? "pass" : "fail"] = tally[r.pass ? "pass" : "fail"].get<int>() + 1;
      if (!r.pass) failed.push_back(io::report_to_json(r));
    }
    if (!s.all_pass()) ++failures;
    members.push_back(Json{{"index", k},
                           {"params", io::params_to_json(p)},
                           {"margin", coefficient_functional(f, p).margin},
                           {"pass", s.all_pass()},
                           {"extrema", checks},
                           {"failures", failed}});
  }
  Json j;
  j["mode"] = "random";
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["restricted"] = c.restricted;
  j["summary"] = Json{{"members", c.count}, {"failing_members", failures}, {"by_check", by_check}};
  j["members"] = members;
  j["pass"] = failures == 0;
  return {io::dump(j) + "\n", failures == 0 ? kPass : kFail};
}

Outcome cmd_render(const RunConfig& c) {
  reject(format_or(c, "svg") != "svg", "render: only --format svg is supported");
  const ClassParams p = single_params(c);
  const HarmonicSeries f = load_series(c);
  const auto radii = parse_list(c.r.empty() ? "0.5,0.9" : c.r, "r");
  const RenderScene scene = build_scene(f, p, grid_from(c, 12, 96), radii);
  return {render_svg(scene), kPass};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"q-calculus harmonic mapping toolkit", "qharm"};
  app.require_subcommand(1, 1);

  app.add_option("--q", c.q, "q value(s), comma separated");
  app.add_option("--m", c.m, "operator order(s)");
  app.add_option("--alpha", c.alpha, "class order(s)");
  app.add_option("--b1", c.b1, "b1 value(s) for bound tables");
  app.add_option("--r", c.r, "radius value(s)");
  app.add_option("--input", c.input, "series JSON");
  app.add_option("--weights", c.weights, "weights JSON (x/y or X/Y)");
  app.add_flag("--restricted", c.restricted, "treat input as a restricted-class candidate");
  app.add_option("--grid", c.grid, "grid as RINGSxANGLES");
  app.add_option("--max-radius", c.max_radius, "largest grid radius");
  app.add_option("--tol", c.tol, "tolerance");
  app.add_option("--seed", c.seed, "seed for randomized sweeps");
  app.add_option("--count", c.count, "number of random members / extreme points");
  app.add_option("--format", c.format, "json | csv | svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--output", c.output, "write output here instead of stdout");
  app.add_flag("--variant", c.variant, "use the alternate b1 factor in the bounds");
  app.add_flag("--random", c.random, "sweep random members");
  app.add_option("--reduce", c.reduce, "reduction check: m0 | q1")->check(CLI::IsMember({"m0", "q1"}));
  app.add_flag("--discrepancy", c.discrepancy, "emit the b1 comparison table");
  app.add_option("--order", c.order, "truncation order for constructed series");

  for (const char* name : {"check", "extremal", "extreme-points", "distort", "cover", "verify",
                           "reduce", "render"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("check")->description("coefficient membership test");
  app.get_subcommand("extremal")->description("equality-case series from x/y weights");
  app.get_subcommand("extreme-points")->description("extreme points, or a convex combination from X/Y weights");
  app.get_subcommand("distort")->description("distortion bound table");
  app.get_subcommand("cover")->description("covering radius table, or ring check with --input");
  app.get_subcommand("verify")->description("run the numerical verification suite");
  app.get_subcommand("reduce")->description("m = 0 and q -> 1 reduction checks");
  app.get_subcommand("render")->description("SVG image of f(D)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "qharm: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  Outcome o;
  try {
    if (c.command == "check") o = cmd_check(c);
    else if (c.command == "extremal") o = cmd_extremal(c);
    else if (c.command == "extreme-points") o = cmd_extreme_points(c);
    else if (c.command == "distort") o = cmd_distort(c);
    else if (c.command == "cover") o = cmd_cover(c);
    else if (c.command == "verify") o = cmd_verify(c);
    else if (c.command == "reduce") o = run_reduce(c);
    else o = cmd_render(c);
  } catch (const UsageError& e) {
    err << "qharm " << c.command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "qharm " << c.command << ": " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "qharm " << c.command << ": malformed JSON: " << e.what() << "\n";
    return kUsage;
  }

  if (!c.output.empty()) {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      err << "qharm: cannot write " << c.output << "\n";
      return kUsage;
    }
    f << o.text;
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace qharm::cli
