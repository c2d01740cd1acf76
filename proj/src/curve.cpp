#include "pqbezier/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "pqbezier/basis.hpp"
#include "pqbezier/errors.hpp"

namespace pqbezier {

namespace {

void require_unit(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw DomainError("t must lie in [0,1], got " + std::to_string(t));
}

} // namespace

ControlPolygon::ControlPolygon(std::vector<Point> points, PQParams params, int dim)
    : points_(std::move(points)), params_(params), dim_(dim) {
  if (points_.empty()) throw DomainError("control polygon needs at least one point");
  if (dim_ != 2 && dim_ != 3) throw DomainError("control polygon dimension must be 2 or 3");
  for (auto& pt : points_) {
    if (!pt.allFinite()) throw DomainError("control point coordinates must be finite");
    if (dim_ == 2) pt.z() = 0.0;
  }
}

Point eval_rational(const ControlPolygon& poly, double t) {
  require_unit(t);
  const auto row = basis_row(poly.degree(), poly.params(), t);
  Point acc = Point::Zero();
  for (std::size_t k = 0; k < row.values.size(); ++k) acc += row.values[k] * poly[k];
  return acc;
}

CasteljauTrace decasteljau(const ControlPolygon& poly, double t) {
  require_unit(t);
  const int n = poly.degree();
  CasteljauTrace trace{{poly.points()}, t, poly.params()};
  trace.levels.reserve(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= n; ++r) {
    const auto [w0, w1] = level_weights(n - r, poly.params(), t);
    const auto& prev = trace.levels.back();
    std::vector<Point> next(static_cast<std::size_t>(n - r) + 1);
    for (int i = 0; i <= n - r; ++i) next[i] = w0 * prev[i] + w1 * prev[i + 1];
    trace.levels.push_back(std::move(next));
  }
  return trace;
}

CasteljauTrace decasteljau_scaled(const ControlPolygon& poly, double t) {
  require_unit(t);
  const int n = poly.degree();
  const double p = poly.params().p();
  const double q = poly.params().q();
  CasteljauTrace trace{{poly.points()}, t, poly.params()};
  for (int r = 1; r <= n; ++r) {
    const double den = std::pow(p, n - r) * (1.0 - t) + std::pow(q, n - r) * t;
    const auto& prev = trace.levels.back();
    std::vector<Point> next(static_cast<std::size_t>(n - r) + 1);
    for (int i = 0; i <= n - r; ++i) {
      const double scale = std::pow(p, n - i - r) * std::pow(q, i) / den;
      next[i] = scale * (t * prev[i + 1] + (1.0 - t) * prev[i]);
    }
    trace.levels.push_back(std::move(next));
  }
  return trace;
}

VariantCheck verify_scaled_variant(const ControlPolygon& poly, double t, double tol) {
  const Point reference = eval_rational(poly, t);
  const Point apex = decasteljau_scaled(poly, t).apex();
  const double deviation = (apex - reference).norm() / std::max(1.0, reference.norm());
  return {deviation <= tol, deviation};
}

Point decasteljau_matrix(const ControlPolygon& poly, double t) {
  require_unit(t);
  const int n = poly.degree();
  Eigen::MatrixXd level(n + 1, 3);
  for (int i = 0; i <= n; ++i) level.row(i) = poly[i].transpose();
  for (int r = 1; r <= n; ++r) {
    const auto [w0, w1] = level_weights(n - r, poly.params(), t);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n - r + 1, n - r + 2);
    for (int i = 0; i <= n - r; ++i) {
      m(i, i) = w0;
      m(i, i + 1) = w1;
    }
    level = m * level;
  }
  return level.row(0).transpose();
}

ControlPolygon elevate(const ControlPolygon& poly) {
  const int n = poly.degree();
  const ElevationMatrix lift(n, poly.params());
  std::vector<Point> out(static_cast<std::size_t>(n) + 2);
  out.front() = poly.points().front();
  out.back() = poly.points().back();
  for (int k = 1; k <= n; ++k) {
    const double keep = lift.keep_weight(k);
    out[k] = (1.0 - keep) * poly[k - 1] + keep * poly[k];
  }
  return {std::move(out), poly.params(), poly.dim()};
}

ControlPolygon elevate_repeated(const ControlPolygon& poly, int times) {
  if (times < 1) throw DomainError("elevation count must be at least 1");
  ControlPolygon out = elevate(poly);
  for (int i = 1; i < times; ++i) out = elevate(out);
  return out;
}

EndpointDerivatives endpoint_derivatives(const ControlPolygon& poly) {
  const int n = poly.degree();
  if (n < 1) throw DegenerateError("endpoint derivatives need degree >= 1");
  const double bracket = pq_integer(n, poly.params());
  const double start = bracket / std::pow(poly.params().p(), n - 1);
  const double end = bracket / std::pow(poly.params().q(), n - 1);
  return {start * (poly[1] - poly[0]), end * (poly[n] - poly[n - 1])};
}

ControlPolygon reverse(const ControlPolygon& poly) {
  std::vector<Point> pts(poly.points().rbegin(), poly.points().rend());
  return {std::move(pts), poly.params().reciprocal(), poly.dim()};
}

Line2D::Line2D(Eigen::Vector2d normal, double offset) : normal_(normal), offset_(offset) {
  const double len = normal_.norm();
  if (!(len > 0.0) || !std::isfinite(len)) throw DegenerateError("line normal must be nonzero");
  normal_ /= len;
  offset_ /= len;
}

Line2D Line2D::through(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d dir = b - a;
  const Eigen::Vector2d normal(-dir.y(), dir.x());
  return {normal, normal.dot(a)};
}

int strict_sign_changes(const std::vector<double>& values) {
  int changes = 0;
  int last = 0;
  for (double v : values) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

CrossingCounts crossing_diagnostics(const ControlPolygon& poly, const Line2D& line, int samples) {
  if (poly.dim() != 2) throw DomainError("crossing diagnostics need a planar polygon");
  if (samples < 2) throw DomainError("need at least two samples");

  std::vector<double> control;
  control.reserve(poly.points().size());
  for (const auto& pt : poly.points()) control.push_back(line.signed_distance(pt));
  if (std::all_of(control.begin(), control.end(), [](double d) { return d == 0.0; }))
    throw DegenerateError("all control points lie on the line");

  std::vector<double> curve;
  curve.reserve(static_cast<std::size_t>(samples));
  for (const auto& pt : sample_curve(poly, samples)) curve.push_back(line.signed_distance(pt));
  return {strict_sign_changes(curve), strict_sign_changes(control)};
}

std::vector<Point> sample_curve(const ControlPolygon& poly, int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  std::vector<Point> out(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    out[i] = eval_rational(poly, i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1));
  return out;
}

double distance_to_polyline(const Point& x, const std::vector<Point>& vertices) {
  if (vertices.size() == 1) return (x - vertices.front()).norm();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const Point d = vertices[i + 1] - vertices[i];
    const double len2 = d.squaredNorm();
    const double s = len2 > 0.0 ? std::clamp((x - vertices[i]).dot(d) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, (x - (vertices[i] + s * d)).norm());
  }
  return best;
}

double curve_to_polygon_distance(const ControlPolygon& poly, int samples) {
  double worst = 0.0;
  for (const auto& pt : sample_curve(poly, samples))
    worst = std::max(worst, distance_to_polyline(pt, poly.points()));
  return worst;
}

double polygon_to_curve_distance(const ControlPolygon& poly, int samples) {
  const auto curve = sample_curve(poly, samples);
  double worst = 0.0;
  for (const auto& v : poly.points()) worst = std::max(worst, distance_to_polyline(v, curve));
  return worst;
}

} // namespace pqbezier
