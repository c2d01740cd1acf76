#include "pqbezier/render.hpp"

#include <algorithm>
#include <sstream>

#include "pqbezier/errors.hpp"
#include "pqbezier/scene.hpp"

namespace pqbezier {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

struct Viewport {
  double min_x, max_y, scale, margin;

  std::string x(const Point& pt) const { return format_fixed6(margin + (pt.x() - min_x) * scale); }
  std::string y(const Point& pt) const { return format_fixed6(margin + (max_y - pt.y()) * scale); }
  std::string xy(const Point& pt) const { return x(pt) + "," + y(pt); }
};

} // namespace

std::vector<Point> convex_hull_2d(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& pt : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0.0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::string render_svg(const ControlPolygon& poly, const RenderOptions& options) {
  if (poly.dim() != 2) throw DomainError("rendering supports planar curves only");
  if (options.samples < 2) throw DomainError("rendering needs at least two samples");

  const auto curve = sample_curve(poly, options.samples);
  double min_x = poly[0].x(), max_x = min_x, min_y = poly[0].y(), max_y = min_y;
  for (const auto& pt : poly.points()) {
    min_x = std::min(min_x, pt.x());
    max_x = std::max(max_x, pt.x());
    min_y = std::min(min_y, pt.y());
    max_y = std::max(max_y, pt.y());
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double margin = 16.0;
  const Viewport view{min_x, max_y, options.canvas / span, margin};
  const double width = (max_x - min_x) * view.scale + 2 * margin;
  const double height = (max_y - min_y) * view.scale + 2 * margin;
  const std::string stroke = format_fixed6(options.stroke_width);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << format_fixed6(width) << "\" height=\"" << format_fixed6(height) << "\" viewBox=\"0 0 "
      << format_fixed6(width) << " " << format_fixed6(height) << "\">\n"
      << "  <desc>p=" << format_shortest(poly.params().p())
      << " q=" << format_shortest(poly.params().q()) << " degree=" << poly.degree() << "</desc>\n";

  if (options.show_hull) {
    svg << "  <polygon id=\"hull\" fill=\"#dde8f4\" stroke=\"none\" points=\"";
    const auto hull = convex_hull_2d(poly.points());
    for (std::size_t i = 0; i < hull.size(); ++i) svg << (i ? " " : "") << view.xy(hull[i]);
    svg << "\"/>\n";
  }

  svg << "  <polyline id=\"control-polygon\" fill=\"none\" stroke=\"#888888\" stroke-width=\""
      << stroke << "\" stroke-dasharray=\"6,4\" points=\"";
  for (std::size_t i = 0; i < poly.points().size(); ++i) svg << (i ? " " : "") << view.xy(poly[i]);
  svg << "\"/>\n";

  svg << "  <polyline id=\"curve\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << stroke
      << "\" points=\"";
  for (std::size_t i = 0; i < curve.size(); ++i) svg << (i ? " " : "") << view.xy(curve[i]);
  svg << "\"/>\n";

  svg << "  <g id=\"control-points\" fill=\"#1f4e79\">\n";
  for (const auto& pt : poly.points())
    svg << "    <circle cx=\"" << view.x(pt) << "\" cy=\"" << view.y(pt) << "\" r=\"4.000000\"/>\n";
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

} // namespace pqbezier
