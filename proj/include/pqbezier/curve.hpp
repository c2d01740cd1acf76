#pragma once

#include <vector>

#include <Eigen/Core>

#include "pqbezier/pq_arith.hpp"

namespace pqbezier {

/// Points are stored in 3D; planar data keeps z = 0 and dim() == 2.
using Point = Eigen::Vector3d;

class ControlPolygon {
public:
  ControlPolygon(std::vector<Point> points, PQParams params, int dim = 3);

  int degree() const noexcept { return static_cast<int>(points_.size()) - 1; }
  int dim() const noexcept { return dim_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  const PQParams& params() const noexcept { return params_; }

  friend bool operator==(const ControlPolygon& a, const ControlPolygon& b) {
    return a.dim_ == b.dim_ && a.params_ == b.params_ && a.points_ == b.points_;
  }

private:
  std::vector<Point> points_;
  PQParams params_;
  int dim_;
};

/// sum_k P_k b^{k,n}_{p,q}(t).
Point eval_rational(const ControlPolygon& poly, double t);

/// Every intermediate level of the de Casteljau triangle.
struct CasteljauTrace {
  std::vector<std::vector<Point>> levels;  // level r has n-r+1 points
  double t;
  PQParams params;

  const Point& apex() const { return levels.back().front(); }
};

/// Level r mixes neighbours with w1 = q^{n-r} t / (p^{n-r}(1-t) + q^{n-r} t)
/// and w0 = 1 - w1; every intermediate point is a convex combination.
CasteljauTrace decasteljau(const ControlPolygon& poly, double t);

/// The second selectable scheme: point i of level r is
///   p^{n-i-r} q^i (t P_{i+1} + (1-t) P_i) / (p^{n-r}(1-t) + q^{n-r} t).
/// The weights do not sum to one, so intermediate points leave the hull, but
/// the apex still equals the curve point.
CasteljauTrace decasteljau_scaled(const ControlPolygon& poly, double t);

/// Apex agreement of decasteljau_scaled with eval_rational.
struct VariantCheck {
  bool agrees;
  double deviation;  // |apex - eval| / max(1, |eval|)
};

VariantCheck verify_scaled_variant(const ControlPolygon& poly, double t, double tol = 1e-10);

/// P^n = M_n ... M_1 P^0 with explicit bidiagonal level matrices.
Point decasteljau_matrix(const ControlPolygon& poly, double t);

ControlPolygon elevate(const ControlPolygon& poly);
ControlPolygon elevate_repeated(const ControlPolygon& poly, int times);

struct EndpointDerivatives {
  Point start;  // [n]/p^{n-1} (P_1 - P_0)
  Point end;    // [n]/q^{n-1} (P_n - P_{n-1})
};

EndpointDerivatives endpoint_derivatives(const ControlPolygon& poly);

/// Reversed control points with parameters (1/p, 1/q); traces the same set
/// with t -> 1-t.
ControlPolygon reverse(const ControlPolygon& poly);

/// An oriented line n . x = offset in the plane, |n| = 1.
class Line2D {
public:
  Line2D(Eigen::Vector2d normal, double offset);
  static Line2D through(const Eigen::Vector2d& a, const Eigen::Vector2d& b);

  const Eigen::Vector2d& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }
  double signed_distance(const Point& x) const noexcept {
    return normal_.x() * x.x() + normal_.y() * x.y() - offset_;
  }

private:
  Eigen::Vector2d normal_;
  double offset_;
};

/// Strict sign changes, exact zeros skipped.
int strict_sign_changes(const std::vector<double>& values);

struct CrossingCounts {
  int curve_crossings;
  int polygon_sign_changes;
};

/// Sign changes of the curve's signed distance over a uniform grid of
/// `samples` parameters against those of the control polygon.
CrossingCounts crossing_diagnostics(const ControlPolygon& poly, const Line2D& line, int samples);

/// Uniformly spaced curve points t_i = i/(samples-1).
std::vector<Point> sample_curve(const ControlPolygon& poly, int samples);

/// Distance from x to the polyline through `vertices`.
double distance_to_polyline(const Point& x, const std::vector<Point>& vertices);

/// max over sampled curve points of their distance to the control polygon.
double curve_to_polygon_distance(const ControlPolygon& poly, int samples);

/// max over control vertices of their distance to the sampled curve polyline.
double polygon_to_curve_distance(const ControlPolygon& poly, int samples);

} // namespace pqbezier
