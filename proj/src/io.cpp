#include "qharm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qharm::io {

namespace {

Complex parse_complex(const Json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw FormatError(where + ": expected a number or a [re, im] pair");
}

std::vector<Complex> parse_coeff_array(const Json& j, const char* key) {
  const Json& arr = j.at(key);
  if (!arr.is_array() || arr.empty()) {
    throw FormatError(std::string("series: \"") + key + "\" must be a non-empty array");
  }
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(parse_complex(arr[i], std::string(key) + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

int entry_index(const Json& e, const std::string& where) {
  if (!e.is_object() || !e.contains("n") || !e["n"].is_number_integer()) {
    throw FormatError(where + ": each entry needs an integer \"n\"");
  }
  const int n = e["n"].get<int>();
  if (n < 1) throw FormatError(where + ": index n must be >= 1");
  return n;
}

template <class T, class Read>
std::vector<T> parse_sparse(const Json& j, const char* key, Read read) {
  std::vector<T> out;
  if (!j.contains(key)) return out;
  const Json& arr = j[key];
  if (!arr.is_array()) throw FormatError(std::string("weights: \"") + key + "\" must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    const int n = entry_index(arr[i], where);
    if (out.size() <= static_cast<std::size_t>(n)) out.resize(static_cast<std::size_t>(n) + 1);
    out[static_cast<std::size_t>(n)] += read(arr[i], where);
  }
  return out;
}

Complex read_complex_entry(const Json& e, const std::string& where) {
  if (e.contains("w")) {
    if (!e["w"].is_number()) throw FormatError(where + ": \"w\" must be a number");
    return {e["w"].get<double>(), 0.0};
  }
  if (e.contains("re") && e["re"].is_number()) {
    const double im = e.contains("im") ? e["im"].get<double>() : 0.0;
    return {e["re"].get<double>(), im};
  }
  throw FormatError(where + ": expected \"re\"/\"im\" or \"w\"");
}

double read_real_entry(const Json& e, const std::string& where) {
  if (!e.contains("w") || !e["w"].is_number()) {
    throw FormatError(where + ": expected a numeric \"w\"");
  }
  return e["w"].get<double>();
}

void dump_value(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_value(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (coefficient pairs) stay on one line.
      const bool flat = j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const Json& v) {
                          return v.is_primitive();
                        });
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat ? ", " : ",";
        if (!flat) newline(depth + 1);
        dump_value(j[i], indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Json series_to_json(const HarmonicSeries& f) {
  Json a = Json::array();
  Json b = Json::array();
  for (int n = 1; n <= f.order(); ++n) {
    a.push_back({f.h().coeff(n).real(), f.h().coeff(n).imag()});
    b.push_back({f.g().coeff(n).real(), f.g().coeff(n).imag()});
  }
  Json j;
  j["a"] = std::move(a);
  j["b"] = std::move(b);
  j["co_sign"] = f.co_sign();
  if (f.on_hull_boundary()) j["hull_boundary"] = true;
  return j;
}

HarmonicSeries series_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("series: expected a JSON object");
  if (!j.contains("a")) throw FormatError("series: missing \"a\"");
  std::vector<Complex> a = parse_coeff_array(j, "a");
  std::vector<Complex> b = j.contains("b") ? parse_coeff_array(j, "b")
                                           : std::vector<Complex>(a.size());
  int sign = 1;
  if (j.contains("co_sign")) {
    if (!j["co_sign"].is_number_integer()) throw FormatError("series: co_sign must be +1 or -1");
    sign = j["co_sign"].get<int>();
  }
  const bool closure = j.value("hull_boundary", false);
  auto h = AnalyticSeries::from_coeffs(std::move(a));
  auto g = AnalyticSeries::from_coeffs(std::move(b));
  return closure ? HarmonicSeries::hull_closure(std::move(h), std::move(g), sign)
                 : HarmonicSeries(std::move(h), std::move(g), sign);
}

ExtremalWeights extremal_weights_from_json(const Json& j) {
  if (!j.is_object() || (!j.contains("x") && !j.contains("y"))) {
    throw FormatError("weights: expected an object with \"x\" and/or \"y\"");
  }
  auto x = parse_sparse<Complex>(j, "x", read_complex_entry);
  auto y = parse_sparse<Complex>(j, "y", read_complex_entry);
  return ExtremalWeights(std::move(x), std::move(y));
}

ConvexWeights convex_weights_from_json(const Json& j) {
  if (!j.is_object() || (!j.contains("X") && !j.contains("Y"))) {
    throw FormatError("weights: expected an object with \"X\" and/or \"Y\"");
  }
  auto X = parse_sparse<double>(j, "X", read_real_entry);
  auto Y = parse_sparse<double>(j, "Y", read_real_entry);
  return ConvexWeights(std::move(X), std::move(Y));
}

Json params_to_json(const ClassParams& p) {
  return Json{{"q", p.q().value()}, {"m", p.m()}, {"alpha", p.alpha()}};
}

Json membership_to_json(const MembershipReport& r) {
  return Json{{"functional_value", r.functional_value},
              {"budget", r.budget},
              {"margin", r.margin},
              {"verdict", std::string(verdict_name(r.verdict))}};
}

Json grid_to_json(const GridSpec& g) {
  Json j;
  j["rings"] = g.radii.size();
  j["angles_per_ring"] = g.angles_per_ring;
  j["max_radius"] = g.max_radius;
  if (g.radii.size() <= 64) j["radii"] = g.radii;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["extremum"] = r.extremum;
  if (const auto* z = std::get_if<Complex>(&r.witness)) {
    j["witness"] = Json{{"re", z->real()}, {"im", z->imag()}};
  } else if (const auto* r0 = std::get_if<double>(&r.witness)) {
    j["witness"] = Json{{"r0", *r0}};
  } else if (const auto* c = std::get_if<CoefficientWitness>(&r.witness)) {
    j["witness"] = Json{{"n", c->n}, {"q", c->q}};
  } else {
    j["witness"] = nullptr;
  }
  if (r.partner) j["partner"] = Json{{"re", r.partner->real()}, {"im", r.partner->imag()}};
  j["grid"] = grid_to_json(r.grid);
  j["tol"] = r.tol;
  if (!r.failure_kind.empty()) j["failure_kind"] = r.failure_kind;
  if (r.secondary) j["secondary"] = *r.secondary;
  j["evidence_grade"] = r.evidence_grade;
  return j;
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep a float marker so the value re-parses as a double.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_value(j, indent, 0, out);
  return out;
}

std::string bounds_csv_header() { return "q,m,alpha,b1,r,lower,upper,covering_radius\n"; }

std::string bounds_csv_row(const ClassParams& p, double b1, const double* r,
                           const DistortionBound* d, double cover) {
  std::ostringstream os;
  os << format_number(p.q().value()) << ',' << p.m() << ',' << format_number(p.alpha()) << ','
     << format_number(b1) << ',';
  if (r) os << format_number(*r);
  os << ',';
  if (d) os << format_number(d->lower) << ',' << format_number(d->upper);
  else os << ',';
  os << ',' << format_number(cover) << '\n';
  return os.str();
}

std::string discrepancy_csv(std::span<const DiscrepancyRow> rows) {
  std::ostringstream os;
  os << "q,m,alpha,b1,r,printed_lower,printed_upper,variant_lower,variant_upper,"
        "oracle_min,oracle_max,distortion_violated,printed_cover,variant_cover,"
        "oracle_cover,cover_violated\n";
  for (const auto& w : rows) {
    os << format_number(w.q) << ',' << w.m << ',' << format_number(w.alpha) << ','
       << format_number(w.b1) << ',' << format_number(w.r) << ','
       << format_number(w.printed_lower) << ',' << format_number(w.printed_upper) << ','
       << format_number(w.variant_lower) << ',' << format_number(w.variant_upper) << ','
       << format_number(w.oracle_min) << ',' << format_number(w.oracle_max) << ','
       << (w.distortion_violated ? "true" : "false") << ',' << format_number(w.printed_cover)
       << ',' << format_number(w.variant_cover) << ',' << format_number(w.oracle_cover) << ','
       << (w.cover_violated ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace qharm::io
