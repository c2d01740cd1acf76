#include "pqbezier/surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pqbezier/basis.hpp"
#include "pqbezier/errors.hpp"

namespace pqbezier {

namespace {

void require_square(double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw DomainError("(u,v) must lie in [0,1]^2");
}

using Grid = std::vector<std::vector<Point>>;

ControlPolygon line_of(std::vector<Point> pts, const PQParams& params) {
  return {std::move(pts), params, 3};
}

// Reduces the grid by `rounds` bilinear steps. Row weights come from the u
// parameters at level m-r, column weights from the v parameters at level n-r.
template <typename WeightFn>
Grid bilinear_rounds(Grid grid, int m, int n, int rounds, WeightFn weights) {
  for (int r = 1; r <= rounds; ++r) {
    Grid next(static_cast<std::size_t>(m - r) + 1,
              std::vector<Point>(static_cast<std::size_t>(n - r) + 1));
    for (int i = 0; i <= m - r; ++i) {
      for (int j = 0; j <= n - r; ++j) {
        const auto [a0, a1, b0, b1] = weights(r, i, j);
        next[i][j] = a0 * (b0 * grid[i][j] + b1 * grid[i][j + 1]) +
                     a1 * (b0 * grid[i + 1][j] + b1 * grid[i + 1][j + 1]);
      }
    }
    grid = std::move(next);
  }
  return grid;
}

struct Mix {
  double a0, a1, b0, b1;
};

} // namespace

ControlNet::ControlNet(Grid grid, PQParams params_u, PQParams params_v)
    : grid_(std::move(grid)), params_u_(params_u), params_v_(params_v) {
  if (grid_.empty() || grid_.front().empty())
    throw DomainError("control net needs at least one point");
  const auto cols = grid_.front().size();
  for (const auto& r : grid_) {
    if (r.size() != cols) throw DomainError("control net rows must have equal length");
    for (const auto& pt : r)
      if (!pt.allFinite()) throw DomainError("control net coordinates must be finite");
  }
}

ControlPolygon ControlNet::row(int i) const { return line_of(grid_.at(i), params_v_); }

ControlPolygon ControlNet::column(int j) const {
  std::vector<Point> pts;
  pts.reserve(grid_.size());
  for (const auto& r : grid_) pts.push_back(r.at(j));
  return line_of(std::move(pts), params_u_);
}

Point eval_surface(const ControlNet& net, double u, double v) {
  require_square(u, v);
  const auto bu = basis_row(net.degree_u(), net.params_u(), u);
  const auto bv = basis_row(net.degree_v(), net.params_v(), v);
  Point acc = Point::Zero();
  for (int i = 0; i <= net.degree_u(); ++i) {
    Point row_acc = Point::Zero();
    for (int j = 0; j <= net.degree_v(); ++j) row_acc += bv.values[j] * net.at(i, j);
    acc += bu.values[i] * row_acc;
  }
  return acc;
}

ControlPolygon iso_curve(const ControlNet& net, IsoDirection direction, double value) {
  if (!(value >= 0.0 && value <= 1.0)) throw DomainError("iso parameter must lie in [0,1]");
  const int m = net.degree_u();
  const int n = net.degree_v();
  std::vector<Point> pts;
  if (direction == IsoDirection::VFixed) {
    const auto bv = basis_row(n, net.params_v(), value);
    for (int i = 0; i <= m; ++i) {
      Point acc = Point::Zero();
      for (int j = 0; j <= n; ++j) acc += bv.values[j] * net.at(i, j);
      pts.push_back(acc);
    }
    return line_of(std::move(pts), net.params_u());
  }
  const auto bu = basis_row(m, net.params_u(), value);
  for (int j = 0; j <= n; ++j) {
    Point acc = Point::Zero();
    for (int i = 0; i <= m; ++i) acc += bu.values[i] * net.at(i, j);
    pts.push_back(acc);
  }
  return line_of(std::move(pts), net.params_v());
}

ControlNet elevate_surface(const ControlNet& net) {
  const int m = net.degree_u();
  const int n = net.degree_v();
  const ElevationMatrix lift_u(m, net.params_u());
  const ElevationMatrix lift_v(n, net.params_v());

  auto at = [&](int i, int j) -> Point {
    if (i < 0 || i > m || j < 0 || j > n) return Point::Zero();
    return net.at(i, j);
  };

  Grid out(static_cast<std::size_t>(m) + 2, std::vector<Point>(static_cast<std::size_t>(n) + 2));
  for (int i = 0; i <= m + 1; ++i) {
    const double alpha = 1.0 - lift_u.keep_weight(i);
    for (int j = 0; j <= n + 1; ++j) {
      const double beta = 1.0 - lift_v.keep_weight(j);
      out[i][j] = alpha * beta * at(i - 1, j - 1) + alpha * (1.0 - beta) * at(i - 1, j) +
                  (1.0 - alpha) * beta * at(i, j - 1) +
                  (1.0 - alpha) * (1.0 - beta) * at(i, j);
    }
  }
  return {std::move(out), net.params_u(), net.params_v()};
}

namespace {

// Finishes a reduced grid that is a single row or column with the curve
// algorithm. Continuing at level r = k+1.. of the original degree is the same
// as running de Casteljau on the surviving degree-(d-k) polygon.
template <typename CurveFn>
Point finish_with_curve(const Grid& grid, const ControlNet& net, double u, double v,
                        CurveFn curve) {
  if (grid.size() == 1 && grid.front().size() == 1) return grid.front().front();
  if (grid.size() == 1) return curve(line_of(grid.front(), net.params_v()), v);
  std::vector<Point> column;
  for (const auto& r : grid) column.push_back(r.front());
  return curve(line_of(std::move(column), net.params_u()), u);
}

} // namespace

Point decasteljau_surface(const ControlNet& net, double u, double v) {
  require_square(u, v);
  const int m = net.degree_u();
  const int n = net.degree_v();
  const int rounds = std::min(m, n);
  auto weights = [&](int r, int, int) {
    const auto wu = level_weights(m - r, net.params_u(), u);
    const auto wv = level_weights(n - r, net.params_v(), v);
    return Mix{wu.w0, wu.w1, wv.w0, wv.w1};
  };
  const Grid reduced = bilinear_rounds(net.grid(), m, n, rounds, weights);
  return finish_with_curve(reduced, net, u, v, [](const ControlPolygon& poly, double s) {
    return decasteljau(poly, s).apex();
  });
}

Point decasteljau_surface_scaled(const ControlNet& net, double u, double v) {
  require_square(u, v);
  const int m = net.degree_u();
  const int n = net.degree_v();
  const int rounds = std::min(m, n);
  const double p1 = net.params_u().p(), q1 = net.params_u().q();
  const double p2 = net.params_v().p(), q2 = net.params_v().q();
  auto weights = [&](int r, int i, int j) {
    const double du = std::pow(p1, m - r) * (1.0 - u) + std::pow(q1, m - r) * u;
    const double dv = std::pow(p2, n - r) * (1.0 - v) + std::pow(q2, n - r) * v;
    const double su = std::pow(p1, m - i - r) * std::pow(q1, i) / du;
    const double sv = std::pow(p2, n - j - r) * std::pow(q2, j) / dv;
    return Mix{su * (1.0 - u), su * u, sv * (1.0 - v), sv * v};
  };
  const Grid reduced = bilinear_rounds(net.grid(), m, n, rounds, weights);
  return finish_with_curve(reduced, net, u, v, [](const ControlPolygon& poly, double s) {
    return decasteljau_scaled(poly, s).apex();
  });
}

Point decasteljau_surface_by_curves(const ControlNet& net, double u, double v,
                                    ContractionOrder order) {
  require_square(u, v);
  std::vector<Point> mid;
  if (order == ContractionOrder::VFirst) {
    for (int i = 0; i <= net.degree_u(); ++i) mid.push_back(decasteljau(net.row(i), v).apex());
    return decasteljau(line_of(std::move(mid), net.params_u()), u).apex();
  }
  for (int j = 0; j <= net.degree_v(); ++j) mid.push_back(decasteljau(net.column(j), u).apex());
  return decasteljau(line_of(std::move(mid), net.params_v()), v).apex();
}

std::vector<Point> sample_surface(const ControlNet& net, int samples) {
  if (samples < 2) throw DomainError("need at least two samples per direction");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(samples) * samples);
  const auto param = [samples](int i) {
    return i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1);
  };
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j) out.push_back(eval_surface(net, param(i), param(j)));
  return out;
}

} // namespace pqbezier
