#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "pqbezier/cli.hpp"
#include "pqbezier/curve.hpp"
#include "pqbezier/scene.hpp"

using namespace pqbezier;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("pqbezier_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

const char* kQuad = R"({"kind":"curve","p":0.9,"q":0.6,"points":[[0.25,0],[1,2],[2,0]]})";
const char* kNet = R"({"kind":"surface","p":0.9,"q":0.5,"p2":1.2,"q2":0.4,
  "points":[[[0,0,0],[0,1,0],[0,2,1]],[[1,0,1],[1,1,2],[1,2,0]]]})";

} // namespace

TEST_CASE("basis table") {
  const auto r = run({"basis", "--n", "3", "--p", "0.8", "--q", "0.7", "--grid", "101"});
  REQUIRE(r.code == kExitOk);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == std::vector<std::string>{"t", "b0", "b1", "b2", "b3", "sum"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][5]) - 1.0) <= 1e-12);

  const auto zero = csv(run({"basis", "--n", "0", "--p", "2", "--q", "3", "--grid", "5"}).out);
  CHECK(zero[0] == std::vector<std::string>{"t", "b0", "sum"});
  for (std::size_t i = 1; i < zero.size(); ++i) CHECK(zero[i][1] == "1");

  CHECK(run({"basis", "--n", "3", "--p", "-1", "--q", "1"}).code == kExitUsage);
  CHECK(run({"basis", "--n", "3", "--grid", "1"}).code == kExitUsage);
  CHECK(run({"basis", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("curve subcommands") {
  TempDir dir;
  const auto doc = dir.write("quad.json", kQuad);

  const auto e0 = run({"curve", "eval", doc, "--t", "0"});
  CHECK(e0.code == kExitOk);
  CHECK(e0.out == "0.25,0\n");
  CHECK(run({"curve", "eval", doc, "--t", "2"}).code == kExitUsage);
  CHECK(run({"curve", "eval", doc}).code == kExitUsage);

  const auto s = csv(run({"curve", "sample", doc, "--samples", "11"}).out);
  CHECK(s.size() == 12);
  CHECK(s[0] == std::vector<std::string>{"t", "x", "y"});

  const auto tri = run({"curve", "casteljau", doc, "--t", "0.5"});
  std::istringstream lines(tri.out);
  std::vector<std::string> rows;
  for (std::string l; std::getline(lines, l);) rows.push_back(l);
  REQUIRE(rows.size() == 3);
  CHECK(std::count(rows[0].begin(), rows[0].end(), '(') == 3);
  CHECK(std::count(rows[1].begin(), rows[1].end(), '(') == 2);
  CHECK(std::count(rows[2].begin(), rows[2].end(), '(') == 1);
  CHECK(rows[1].rfind("  (", 0) == 0);

  const auto out = dir.file("up.json");
  REQUIRE(run({"curve", "elevate", doc, "--times", "2", "--out", out}).code == kExitOk);
  const auto up = load_scene(out).curve();
  const auto orig = load_scene(doc).curve();
  CHECK(up.degree() == 4);
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    CHECK((eval_rational(up, t) - eval_rational(orig, t)).norm() <= 1e-9);
  }
  CHECK(run({"curve", "elevate", doc, "--times", "0"}).code == kExitUsage);

  const auto bad = dir.write("bad.json", R"({"kind":"curve","p":0.9,"points":[[0,0]]})");
  const auto rb = run({"curve", "eval", bad, "--t", "0.5"});
  CHECK(rb.code == kExitDataError);
  CHECK(rb.err.find("\"q\"") != std::string::npos);
  CHECK(run({"curve", "eval", dir.file("nothing.json"), "--t", "0.5"}).code == kExitDataError);
  CHECK(run({"curve", "eval", dir.write("net.json", kNet), "--t", "0.5"}).code == kExitDataError);

  CHECK(run({"curve", "sample", doc, "--samples", "50"}).out ==
        run({"curve", "sample", doc, "--samples", "50"}).out);
}

TEST_CASE("surface subcommands") {
  TempDir dir;
  const auto doc = dir.write("net.json", kNet);
  CHECK(run({"surface", "eval", doc, "--u", "0", "--v", "0"}).out == "0,0,0\n");
  CHECK(run({"surface", "eval", doc, "--u", "0"}).code == kExitUsage);

  const auto iso = dir.file("iso.json");
  REQUIRE(run({"surface", "iso", doc, "--v", "0", "--out", iso}).code == kExitOk);
  const auto c = load_scene(iso).curve();
  CHECK(c.degree() == 1);
  CHECK(c[1] == Point(1, 0, 1));
  CHECK(run({"surface", "iso", doc, "--u", "0.2", "--v", "0.3"}).code == kExitUsage);
  CHECK(run({"surface", "iso", doc}).code == kExitUsage);

  const auto up = dir.file("up.json");
  REQUIRE(run({"surface", "elevate", doc, "--out", up}).code == kExitOk);
  CHECK(load_scene(up).surface().degree_u() == 2);

  const auto flat = dir.write("flat.json", R"({"kind":"surface","p":0.3,"q":2,"p2":1.5,"q2":0.5,
    "points":[[[1,2,3],[1,2,3]],[[1,2,3],[1,2,3]]]})");
  const auto rows = csv(run({"surface", "sample", flat, "--grid", "21"}).out);
  REQUIRE(rows.size() == 442);
  CHECK(rows[0] == std::vector<std::string>{"u", "v", "x", "y", "z"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i][2]) - 1) < 1e-14);
    CHECK(std::abs(std::stod(rows[i][4]) - 3) < 1e-14);
  }
  CHECK(run({"surface", "eval", dir.write("quad.json", kQuad), "--u", "0", "--v", "0"}).code == kExitDataError);
}

TEST_CASE("operator table") {
  const auto lin = csv(run({"operator", "--f", "t", "--schedule", "reference", "--n", "8,16,32,64"}).out);
  REQUIRE(lin.size() == 5);
  CHECK(lin[0] == std::vector<std::string>{"n", "p_n", "q_n", "sup_error"});
  for (std::size_t i = 1; i < lin.size(); ++i) CHECK(std::stod(lin[i][3]) <= 1e-12);

  const auto sq = csv(run({"operator", "--f", "t2", "--n", "8,16,32,64"}).out);
  CHECK(std::stod(sq[4][3]) < std::stod(sq[1][3]));

  const auto fixed = csv(run({"operator", "--f", "t2", "--schedule", "fixed", "--p", "0.9", "--q", "0.5"}).out);
  for (std::size_t i = 1; i < fixed.size(); ++i) {
    CHECK(std::stod(fixed[i][3]) > 1e-3);
    CHECK(fixed[i][1] == "0.9");
  }

  CHECK(run({"operator", "--f", "cosh"}).code == kExitUsage);
  CHECK(run({"operator", "--f", "t", "--n", "16,8"}).code == kExitUsage);
  CHECK(run({"operator", "--f", "t", "--schedule", "fixed"}).code == kExitUsage);
}

TEST_CASE("render") {
  TempDir dir;
  const auto doc = dir.write("quad.json", kQuad);
  const auto a = dir.file("a.svg"), b = dir.file("b.svg");
  REQUIRE(run({"render", doc, "--out", a}).code == kExitOk);
  REQUIRE(run({"render", doc, "--out", b}).code == kExitOk);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("<svg") != std::string::npos);
  REQUIRE(run({"render", doc, "--out", a, "--samples", "32", "--show-hull"}).code == kExitOk);
  CHECK(slurp(a).find("id=\"hull\"") != std::string::npos);

  const auto spatial = dir.write("s.json", R"({"kind":"curve","p":1,"q":1,"points":[[0,0,1],[1,1,1]]})");
  CHECK(run({"render", spatial, "--out", a}).code == kExitDataError);
  CHECK(run({"render", doc}).code == kExitUsage);
}
