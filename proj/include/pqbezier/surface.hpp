#pragma once

#include <vector>

#include "pqbezier/curve.hpp"

namespace pqbezier {

/// (m+1) x (n+1) grid of control points with separate parameters for the
/// u (row index i) and v (column index j) directions.
class ControlNet {
public:
  ControlNet(std::vector<std::vector<Point>> grid, PQParams params_u, PQParams params_v);

  int degree_u() const noexcept { return static_cast<int>(grid_.size()) - 1; }
  int degree_v() const noexcept { return static_cast<int>(grid_.front().size()) - 1; }
  const Point& at(int i, int j) const { return grid_[i][j]; }
  const std::vector<std::vector<Point>>& grid() const noexcept { return grid_; }
  const PQParams& params_u() const noexcept { return params_u_; }
  const PQParams& params_v() const noexcept { return params_v_; }

  /// Row i as a curve in v (params_v).
  ControlPolygon row(int i) const;
  /// Column j as a curve in u (params_u).
  ControlPolygon column(int j) const;

  friend bool operator==(const ControlNet&, const ControlNet&) = default;

private:
  std::vector<std::vector<Point>> grid_;
  PQParams params_u_;
  PQParams params_v_;
};

/// sum_i sum_j P_ij b^{i,m}(u) b^{j,n}(v), contracted row-wise then column-wise.
Point eval_surface(const ControlNet& net, double u, double v);

enum class IsoDirection { UFixed, VFixed };

/// The isoparametric curve at u = value (UFixed, a curve in v) or v = value
/// (VFixed, a curve in u).
ControlPolygon iso_curve(const ControlNet& net, IsoDirection direction, double value);

/// Degree (m+1) x (n+1) net describing the same surface.
ControlNet elevate_surface(const ControlNet& net);

/// min(m,n) rounds of the 2x2 bilinear reduction, then the curve algorithm
/// along whichever direction still has more than one point.
Point decasteljau_surface(const ControlNet& net, double u, double v);

/// Same schedule with the index-scaled weights p^{m-i-r} q^i (resp. in v).
Point decasteljau_surface_scaled(const ControlNet& net, double u, double v);

enum class ContractionOrder { VFirst, UFirst };

/// Full curve de Casteljau along one direction for every row (column), then
/// along the other.
Point decasteljau_surface_by_curves(const ControlNet& net, double u, double v,
                                    ContractionOrder order);

/// Uniform (samples x samples) grid, row-major in u.
std::vector<Point> sample_surface(const ControlNet& net, int samples);

} // namespace pqbezier
