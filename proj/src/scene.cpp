#include "pqbezier/scene.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pqbezier/errors.hpp"

namespace pqbezier {

using nlohmann::json;

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

std::string format_fixed6(double value) {
  if (std::abs(value) < 5e-7) value = 0.0;
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 6);
  return {buf.data(), res.ptr};
}

namespace {

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw DocumentError(std::string("missing field \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_number()) throw DocumentError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

PQParams params_field(const json& obj, const char* pkey, const char* qkey) {
  const double p = number_field(obj, pkey);
  const double q = number_field(obj, qkey);
  try {
    return {p, q};
  } catch (const DomainError& e) {
    throw DocumentError(std::string("fields \"") + pkey + "\"/\"" + qkey + "\": " + e.what());
  }
}

Point point_field(const json& v, const std::string& where, int& dim) {
  if (!v.is_array() || v.size() < 2 || v.size() > 3)
    throw DocumentError("field \"" + where + "\" must be [x, y] or [x, y, z]");
  const int this_dim = static_cast<int>(v.size());
  if (dim == 0) dim = this_dim;
  if (this_dim != dim) throw DocumentError("field \"" + where + "\" has inconsistent dimension");
  Point pt = Point::Zero();
  for (int c = 0; c < this_dim; ++c) {
    if (!v[c].is_number()) throw DocumentError("field \"" + where + "\" holds a non-number");
    pt[c] = v[c].get<double>();
    if (!std::isfinite(pt[c])) throw DocumentError("field \"" + where + "\" is not finite");
  }
  return pt;
}

StyleHints style_field(const json& obj) {
  StyleHints style;
  if (!obj.contains("style")) return style;
  const auto& s = obj.at("style");
  if (!s.is_object()) throw DocumentError("field \"style\" must be an object");
  if (s.contains("stroke_width")) {
    if (!s.at("stroke_width").is_number())
      throw DocumentError("field \"style.stroke_width\" must be a number");
    style.stroke_width = s.at("stroke_width").get<double>();
  }
  if (s.contains("samples")) {
    if (!s.at("samples").is_number_integer() || s.at("samples").get<int>() < 2)
      throw DocumentError("field \"style.samples\" must be an integer >= 2");
    style.samples = s.at("samples").get<int>();
  }
  return style;
}

std::string point_text(const Point& pt, int dim) {
  std::string out = "[";
  for (int c = 0; c < dim; ++c) {
    if (c) out += ", ";
    out += format_shortest(pt[c]);
  }
  return out + "]";
}

} // namespace

SceneDocument parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw DocumentError("field \"kind\" must be \"curve\" or \"surface\"");
  const auto kind = doc.at("kind").get<std::string>();
  if (!doc.contains("points") || !doc.at("points").is_array() || doc.at("points").empty())
    throw DocumentError("field \"points\" must be a nonempty array");
  const auto& points = doc.at("points");
  const StyleHints style = style_field(doc);

  if (kind == "curve") {
    const PQParams params = params_field(doc, "p", "q");
    int dim = 0;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < points.size(); ++i)
      pts.push_back(point_field(points[i], "points[" + std::to_string(i) + "]", dim));
    return {ControlPolygon(std::move(pts), params, dim), style};
  }
  if (kind == "surface") {
    const PQParams pu = params_field(doc, "p", "q");
    const PQParams pv = params_field(doc, "p2", "q2");
    int dim = 0;
    std::vector<std::vector<Point>> grid;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& row = points[i];
      const std::string where = "points[" + std::to_string(i) + "]";
      if (!row.is_array() || row.empty())
        throw DocumentError("field \"" + where + "\" must be a nonempty row of points");
      if (!grid.empty() && row.size() != grid.front().size())
        throw DocumentError("field \"" + where + "\" has a different length than points[0]");
      std::vector<Point> pts;
      for (std::size_t j = 0; j < row.size(); ++j)
        pts.push_back(point_field(row[j], where + "[" + std::to_string(j) + "]", dim));
      grid.push_back(std::move(pts));
    }
    return {ControlNet(std::move(grid), pu, pv), style};
  }
  throw DocumentError("field \"kind\" must be \"curve\" or \"surface\", got \"" + kind + "\"");
}

std::string serialize_scene(const SceneDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  if (doc.kind() == SceneKind::Curve) {
    const auto& poly = doc.curve();
    out << "  \"kind\": \"curve\",\n";
    out << "  \"p\": " << format_shortest(poly.params().p()) << ",\n";
    out << "  \"q\": " << format_shortest(poly.params().q()) << ",\n";
    out << "  \"points\": [";
    for (std::size_t i = 0; i < poly.points().size(); ++i)
      out << (i ? ",\n    " : "\n    ") << point_text(poly[i], poly.dim());
    out << "\n  ]";
  } else {
    const auto& net = doc.surface();
    out << "  \"kind\": \"surface\",\n";
    out << "  \"p\": " << format_shortest(net.params_u().p()) << ",\n";
    out << "  \"q\": " << format_shortest(net.params_u().q()) << ",\n";
    out << "  \"p2\": " << format_shortest(net.params_v().p()) << ",\n";
    out << "  \"q2\": " << format_shortest(net.params_v().q()) << ",\n";
    out << "  \"points\": [";
    for (int i = 0; i <= net.degree_u(); ++i) {
      out << (i ? ",\n    [" : "\n    [");
      for (int j = 0; j <= net.degree_v(); ++j) out << (j ? ", " : "") << point_text(net.at(i, j), 3);
      out << "]";
    }
    out << "\n  ]";
  }
  if (doc.style.stroke_width || doc.style.samples) {
    out << ",\n  \"style\": {";
    bool first = true;
    if (doc.style.stroke_width) {
      out << "\"stroke_width\": " << format_shortest(*doc.style.stroke_width);
      first = false;
    }
    if (doc.style.samples) out << (first ? "" : ", ") << "\"samples\": " << *doc.style.samples;
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

SceneDocument load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read document " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

void save_scene(const std::filesystem::path& path, const SceneDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write document " + path.string());
  out << serialize_scene(doc);
}

} // namespace pqbezier
