#pragma once

#include <string>
#include <vector>

#include "pqbezier/curve.hpp"

namespace pqbezier {

struct RenderOptions {
  int samples = 256;
  bool show_hull = false;
  double stroke_width = 1.5;
  double canvas = 512.0;  // longest side in SVG user units
};

/// Standalone SVG 1.1: dashed control polygon, circle markers at the control
/// points, the sampled curve as a solid polyline, and optionally the convex
/// hull of the control points. Coordinates use one uniform scale with y
/// flipped, printed with six fixed decimals, so output bytes depend only on
/// the inputs.
std::string render_svg(const ControlPolygon& poly, const RenderOptions& options);

/// Counter-clockwise convex hull of the planar points (monotone chain);
/// collinear points are dropped.
std::vector<Point> convex_hull_2d(std::vector<Point> points);

} // namespace pqbezier
