#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "pqbezier/curve.hpp"
#include "pqbezier/surface.hpp"

namespace pqbezier {

/// Malformed scene document; the message names the offending field.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class SceneKind { Curve, Surface };

struct StyleHints {
  std::optional<double> stroke_width;
  std::optional<int> samples;

  friend bool operator==(const StyleHints&, const StyleHints&) = default;
};

/// JSON document: {"kind", "p", "q"[, "p2", "q2"], "points"[, "style"]}.
/// Curves carry a list of [x, y] or [x, y, z]; surfaces a list of rows.
struct SceneDocument {
  std::variant<ControlPolygon, ControlNet> payload;
  StyleHints style;

  SceneKind kind() const noexcept {
    return std::holds_alternative<ControlPolygon>(payload) ? SceneKind::Curve : SceneKind::Surface;
  }
  const ControlPolygon& curve() const { return std::get<ControlPolygon>(payload); }
  const ControlNet& surface() const { return std::get<ControlNet>(payload); }

  friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

SceneDocument parse_scene(std::string_view text);
std::string serialize_scene(const SceneDocument& doc);

SceneDocument load_scene(const std::filesystem::path& path);
void save_scene(const std::filesystem::path& path, const SceneDocument& doc);

/// Shortest decimal that round-trips, independent of the C locale.
std::string format_shortest(double value);
/// Fixed six decimals, independent of the C locale; -0 prints as 0.
std::string format_fixed6(double value);

} // namespace pqbezier
