#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "pqbezier/render.hpp"
#include "pqbezier/scene.hpp"

using namespace pqbezier;

namespace {

std::string message_of(std::string_view text) {
  try {
    parse_scene(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("number formatting") {
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(1.0) == "1");
  CHECK(format_shortest(-2.5e-20) == "-2.5e-20");
  CHECK(std::stod(format_shortest(0.15103244837758112)) == 0.15103244837758112);
  CHECK(format_fixed6(1.0 / 3.0) == "0.333333");
  CHECK(format_fixed6(-1e-9) == "0.000000");
  CHECK(format_fixed6(12.5) == "12.500000");
}

TEST_CASE("parse curve and surface documents") {
  const auto doc = parse_scene(R"({"kind":"curve","p":0.8,"q":0.7,"points":[[0,0],[1,2],[2,0]]})");
  REQUIRE(doc.kind() == SceneKind::Curve);
  CHECK(doc.curve().degree() == 2);
  CHECK(doc.curve().dim() == 2);
  CHECK(doc.curve().params() == PQParams(0.8, 0.7));
  CHECK_FALSE(doc.style.samples.has_value());

  const auto spatial = parse_scene(R"({"kind":"curve","p":1,"q":1,"points":[[0,0,1],[1,2,3]],
                                       "style":{"stroke_width":2.5,"samples":64}})");
  CHECK(spatial.curve().dim() == 3);
  CHECK(spatial.style.samples == 64);
  CHECK(spatial.style.stroke_width == 2.5);

  const auto net = parse_scene(R"({"kind":"surface","p":0.9,"q":0.5,"p2":1.2,"q2":0.4,
                                   "points":[[[0,0,0],[0,1,0]],[[1,0,1],[1,1,2]]]})");
  REQUIRE(net.kind() == SceneKind::Surface);
  CHECK(net.surface().params_v() == PQParams(1.2, 0.4));
}

TEST_CASE("malformed documents name the field") {
  CHECK(message_of("{") != "");
  CHECK(message_of(R"({"kind":"blob","p":1,"q":1,"points":[[0,0]]})").find("kind") != std::string::npos);
  CHECK(message_of(R"({"kind":"curve","q":1,"points":[[0,0]]})").find("\"p\"") != std::string::npos);
  CHECK(message_of(R"({"kind":"curve","p":-1,"q":1,"points":[[0,0]]})").find("p") != std::string::npos);
  CHECK(message_of(R"({"kind":"curve","p":1,"q":1,"points":[]})").find("points") != std::string::npos);
  CHECK(message_of(R"({"kind":"curve","p":1,"q":1,"points":[[0,0],[1,2,3]]})").find("points") != std::string::npos);
  CHECK(message_of(R"({"kind":"curve","p":1,"q":"x","points":[[0,0]]})").find("q") != std::string::npos);
  CHECK(message_of(R"({"kind":"surface","p":1,"q":1,"points":[[[0,0,0]]]})").find("p2") != std::string::npos);
  CHECK(message_of(R"({"kind":"surface","p":1,"q":1,"p2":1,"q2":1,"points":[[[0,0,0]],[[0,0,0],[1,1,1]]]})")
            .find("points") != std::string::npos);
}

TEST_CASE("round trip is exact") {
  for (const auto& c : corpus::curves(200)) {
    const SceneDocument doc{c, {}};
    CHECK(parse_scene(serialize_scene(doc)) == doc);
  }
  for (const auto& s : corpus::surfaces(100)) {
    const SceneDocument doc{s, {1.25, 33}};
    CHECK(parse_scene(serialize_scene(doc)) == doc);
  }
  const auto dir = std::filesystem::temp_directory_path() / "pqbezier_scene_test";
  std::filesystem::create_directories(dir);
  const SceneDocument doc{corpus::curves(1).front(), {}};
  save_scene(dir / "c.json", doc);
  CHECK(load_scene(dir / "c.json") == doc);
  CHECK_THROWS_AS(load_scene(dir / "missing.json"), DocumentError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg rendering") {
  const ControlPolygon cubic({{0, 0, 0}, {1, 3, 0}, {3, 3, 0}, {4, 0, 0}}, {0.8, 0.7}, 2);
  const auto a = render_svg(cubic, {});
  CHECK(a == render_svg(cubic, {}));
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("id=\"control-polygon\"") != std::string::npos);
  CHECK(a.find("stroke-dasharray") != std::string::npos);
  CHECK(a.find("id=\"curve\"") != std::string::npos);
  CHECK(a.find("id=\"hull\"") == std::string::npos);
  CHECK(render_svg(cubic, {256, true, 1.5, 512}).find("id=\"hull\"") != std::string::npos);

  const auto hull = convex_hull_2d({{0, 0, 0}, {1, 0, 0}, {0.5, 0.2, 0}, {1, 1, 0}, {0, 1, 0}});
  CHECK(hull.size() == 4);
}
