#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <unistd.h>

#include <doctest.h>

#include "qharm/cli.hpp"
#include "qharm/io.hpp"

using namespace qharm;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("qharm_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

const TempDir& tmp() {
  static TempDir d;
  return d;
}

// Polygon vertices of the SVG, one vector per ring, in the y-up frame.
std::vector<std::vector<Complex>> polygons(const std::string& svg) {
  std::vector<std::vector<Complex>> rings;
  const std::regex poly("<polygon points=\"([^\"]*)\"");
  const std::regex pt("(-?[0-9.]+),(-?[0-9.]+)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
    std::vector<Complex> ring;
    const std::string pts = (*it)[1];
    for (auto p = std::sregex_iterator(pts.begin(), pts.end(), pt); p != std::sregex_iterator(); ++p)
      ring.emplace_back(std::stod((*p)[1]), -std::stod((*p)[2]));
    rings.push_back(ring);
  }
  return rings;
}

double covering_circle(const std::string& svg) {
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("<circle id=\"covering\" cx=\"0\" cy=\"0\" r=\"([0-9.]+)\"")));
  return std::stod(m[1]);
}

}  // namespace

TEST_CASE("check exit codes") {
  const auto id = tmp().write("id.json", R"({"a": [[1, 0]]})");
  const auto r = run({"check", "--q", "0.5", "--m", "1", "--alpha", "0.25", "--input", id});
  CHECK(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  CHECK(j["membership"]["margin"] == 0.75);
  CHECK(j["membership"]["verdict"] == "member-sufficient");

  const auto big = tmp().write("big.json", R"({"a": [1, 0.5]})");
  const auto nc = run({"check", "--q", "0.5", "--m", "1", "--alpha", "0", "--input", big});
  CHECK(nc.code == cli::kUncertified);
  CHECK(Json::parse(nc.out)["membership"]["verdict"] == "not-certified");

  const auto over = tmp().write("over.json", R"({"a": [1, -0.44888888888888889]})");
  const auto nm = run({"check", "--q", "0.5", "--m", "1", "--alpha", "0", "--input", over, "--restricted"});
  CHECK(nm.code == cli::kFail);
  const Json jn = Json::parse(nm.out);
  CHECK(jn["membership"]["verdict"] == "non-member");
  const double r0 = jn["necessity_witness"]["r0"].get<double>();
  CHECK(r0 > 0.99);
  CHECK(r0 < 1.0);
}

TEST_CASE("usage errors exit 64 with a message") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"check", "--q", "0.5", "--m", "1", "--alpha", "0"}).err.find("--input") != std::string::npos);
  const auto bad = tmp().write("bad.json", R"({"a": [0.5]})");
  const auto r = run({"check", "--q", "0.5", "--m", "1", "--alpha", "0", "--input", bad});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("a_1 = 1") != std::string::npos);
  const auto junk = tmp().write("junk.json", "{not json");
  CHECK(run({"check", "--q", "0.5", "--m", "1", "--alpha", "0", "--input", junk}).code == cli::kUsage);
  CHECK(run({"check", "--q", "1.5", "--m", "1", "--alpha", "0", "--input", bad}).code == cli::kUsage);
  CHECK(run({"distort", "--q", "0.5", "--m", "0", "--alpha", "0", "--b1", "0", "--r", "1.2"}).code ==
        cli::kUsage);
  CHECK(run({"render", "--grid", "12by4", "--q", "0.5", "--m", "0", "--alpha", "0"}).code == cli::kUsage);
  CHECK(run({"distort", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("extremal output re-parses to the same series") {
  const auto w = tmp().write("w.json", R"({"x": [{"n": 2, "re": 0.3, "im": 0.4}], "y": [{"n": 1, "w": 0.5}]})");
  const auto r = run({"extremal", "--q", "0.7", "--m", "2", "--alpha", "0.1", "--weights", w, "--order", "6"});
  REQUIRE(r.code == cli::kPass);
  const ClassParams p(QParam(0.7), 2, 0.1);
  const auto want = extremal_function(p, io::extremal_weights_from_json(Json::parse(
                                             R"({"x": [{"n": 2, "re": 0.3, "im": 0.4}], "y": [{"n": 1, "w": 0.5}]})")),
                                      6);
  CHECK(io::series_from_json(Json::parse(r.out)) == want);

  const auto saved = tmp().write("ext.json", r.out);
  const auto c = run({"check", "--q", "0.7", "--m", "2", "--alpha", "0.1", "--input", saved});
  CHECK(c.code == cli::kPass);
  CHECK(std::fabs(Json::parse(c.out)["membership"]["margin"].get<double>()) < 1e-12);
}

TEST_CASE("extreme points and convex combinations") {
  const auto r = run({"extreme-points", "--q", "0.5", "--m", "0", "--alpha", "0.5", "--count", "3", "--order", "4"});
  REQUIRE(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  CHECK(j["h"].size() == 3);
  CHECK(j["g"].size() == 3);
  const auto X = tmp().write("X.json", R"({"X": [{"n": 1, "w": 0.5}, {"n": 2, "w": 0.25}], "Y": [{"n": 1, "w": 0.25}]})");
  const auto c = run({"extreme-points", "--q", "0.5", "--m", "0", "--alpha", "0.5", "--weights", X, "--order", "4"});
  REQUIRE(c.code == cli::kPass);
  const auto f = io::series_from_json(Json::parse(c.out));
  CHECK(std::abs(f.h().coeff(2) + 0.25 * 0.5) < 1e-15);
}

TEST_CASE("distort and cover tables") {
  const auto d = run({"distort", "--q", "0.5", "--m", "0", "--alpha", "0", "--b1", "0", "--r", "0.5", "--format", "csv"});
  CHECK(d.code == cli::kPass);
  CHECK(d.out.rfind("q,m,alpha,b1,r,lower,upper,covering_radius\n", 0) == 0);
  std::istringstream rows(d.out);
  std::string header, row;
  std::getline(rows, header);
  std::getline(rows, row);
  std::vector<double> cells;
  std::stringstream cs(row);
  for (std::string cell; std::getline(cs, cell, ',');) cells.push_back(std::stod(cell));
  REQUIRE(cells.size() == 8);
  CHECK(std::fabs(cells[5] - 1.0 / 3.0) < 1e-15);
  CHECK(std::fabs(cells[6] - 2.0 / 3.0) < 1e-15);

  const auto dj = run({"distort", "--q", "0.5,0.9", "--m", "0,1", "--alpha", "0", "--b1", "0", "--r", "0.25,0.5", "--format", "json"});
  CHECK(dj.code == cli::kPass);
  CHECK(Json::parse(dj.out)["rows"].size() == 8);

  const auto id = tmp().write("id2.json", R"({"a": [1]})");
  const auto cv = run({"cover", "--q", "0.5", "--m", "0", "--alpha", "0", "--input", id});
  CHECK(cv.code == cli::kPass);
  CHECK(Json::parse(cv.out)["check"] == "covering");
}

TEST_CASE("verify suite over random members and restricted inputs") {
  const auto over = tmp().write("over2.json", R"({"a": [1, -0.44888888888888889]})");
  const auto r = run({"verify", "--q", "0.5", "--m", "1", "--alpha", "0", "--input", over, "--restricted"});
  CHECK(r.code == cli::kFail);
  const Json j = Json::parse(r.out);
  CHECK(j["reports"][0]["check"] == "real_axis_condition");
  CHECK(j["reports"][0]["witness"].contains("r0"));

  const auto q1 = run({"verify", "--reduce", "q1", "--q", "0.9,0.99,0.999", "--m", "1"});
  CHECK(q1.code == cli::kPass);
  const Json t = Json::parse(q1.out)["table"];
  CHECK(t[0]["errors"][1].get<double>() == doctest::Approx(0.1));
  CHECK(t[2]["errors"][1].get<double>() == doctest::Approx(0.001));

  const auto disc = run({"verify", "--discrepancy", "--q", "0.5", "--m", "0", "--alpha", "0", "--b1", "0,0.2",
                         "--r", "0.5", "--format", "csv"});
  CHECK(disc.code == cli::kPass);
  CHECK(std::count(disc.out.begin(), disc.out.end(), '\n') == 3);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
  const std::vector<std::string> args{"verify", "--random", "--seed", "7", "--count", "20"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  CHECK((a.code == cli::kPass || a.code == cli::kFail));
  const auto c = run({"verify", "--random", "--seed", "8", "--count", "20"});
  CHECK(c.out != a.out);

  const auto file = (tmp().path / "seed7.json").string();
  auto with_output = args;
  with_output.insert(with_output.end(), {"--output", file});
  CHECK(run(with_output).out.empty());
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("render draws the covering circle under the boundary image") {
  const auto h2 = tmp().write("h2.json", R"({"a": [1, -0.66666666666666663]})");
  const auto r = run({"render", "--q", "0.5", "--m", "0", "--alpha", "0", "--input", h2});
  REQUIRE(r.code == cli::kPass);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  const double cover = covering_circle(r.out);
  CHECK(std::fabs(cover - 1.0 / 3.0) < 1e-6);
  const auto rings = polygons(r.out);
  REQUIRE(rings.size() == 12);
  // The image of the outermost circle stays outside the covering disc and
  // meets it on the positive real axis.
  const auto& outer = rings.back();
  double closest = INFINITY;
  Complex at{};
  for (const auto& w : outer) {
    if (std::abs(w) < closest) {
      closest = std::abs(w);
      at = w;
    }
  }
  CHECK(closest >= cover - 1e-6);
  CHECK(closest - cover < 1e-3);
  CHECK(at.real() > 0.0);
  CHECK(std::fabs(at.imag()) < 1e-6);

  const auto idf = tmp().write("id3.json", R"({"a": [1]})");
  const auto id = run({"render", "--q", "0.5", "--m", "0", "--alpha", "0", "--input", idf, "--format", "svg"});
  REQUIRE(id.code == cli::kPass);
  const auto id_rings = polygons(id.out);
  for (const auto& w : id_rings.back()) CHECK(std::abs(w) > covering_circle(id.out));
  CHECK(std::count(id.out.begin(), id.out.end(), '\n') > 10);
  CHECK(id.out.find("class=\"lower\"") != std::string::npos);
  CHECK(id.out.find("class=\"upper\"") != std::string::npos);
}

TEST_CASE("render of margin-positive members keeps the boundary image off the covering disc") {
  const auto X = tmp().write("Xr.json", R"({"X": [{"n": 1, "w": 0.2}, {"n": 3, "w": 0.5}], "Y": [{"n": 2, "w": 0.3}]})");
  for (const char* m : {"0", "1", "2"}) {
    const auto c = run({"extreme-points", "--q", "0.6", "--m", m, "--alpha", "0.2", "--weights", X, "--order", "8"});
    REQUIRE(c.code == cli::kPass);
    const auto f = tmp().write(std::string("comb") + m + ".json", c.out);
    const auto r = run({"render", "--q", "0.6", "--m", m, "--alpha", "0.2", "--input", f});
    REQUIRE(r.code == cli::kPass);
    const double cover = covering_circle(r.out);
    const auto rings = polygons(r.out);
    for (const auto& w : rings.back()) CHECK(std::abs(w) >= cover);
  }
}
