#pragma once

// Fixed-seed random corpora shared by the property tests and acceptance.

#include <random>
#include <vector>

#include "pqbezier/curve.hpp"
#include "pqbezier/surface.hpp"

namespace corpus {

/// Parameter pair cycling through the regimes: q<p<=1, p=1, both >1, general.
inline pqbezier::PQParams regime_params(std::mt19937& rng, int slot) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (slot % 4) {
  case 0: {
    const double p = 0.3 + 0.7 * u(rng);
    return {p, p * (0.2 + 0.75 * u(rng))};
  }
  case 1: return {1.0, 0.2 + 2.3 * u(rng)};
  case 2: return {1.05 + 1.45 * u(rng), 1.05 + 1.45 * u(rng)};
  default: return {0.2 + 2.3 * u(rng), 0.2 + 2.3 * u(rng)};
  }
}

inline pqbezier::Point random_point(std::mt19937& rng, int dim = 2) {
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  const double x = c(rng), y = c(rng);
  return {x, y, dim == 3 ? c(rng) : 0.0};
}

/// Polygons with degree 1..8, coordinates in [-10,10]^2.
inline std::vector<pqbezier::ControlPolygon> curves(std::size_t count, unsigned seed = 20240601) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(1, 8);
  std::vector<pqbezier::ControlPolygon> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = deg(rng);
    std::vector<pqbezier::Point> pts;
    for (int k = 0; k <= n; ++k) pts.push_back(random_point(rng));
    out.emplace_back(std::move(pts), regime_params(rng, static_cast<int>(i)), 2);
  }
  return out;
}

inline std::vector<pqbezier::ControlNet> surfaces(std::size_t count, unsigned seed = 777) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(1, 5);
  std::vector<pqbezier::ControlNet> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int m = deg(rng), n = deg(rng);
    std::vector<std::vector<pqbezier::Point>> grid(m + 1);
    for (auto& row : grid)
      for (int j = 0; j <= n; ++j) row.push_back(random_point(rng, 3));
    out.emplace_back(std::move(grid), regime_params(rng, static_cast<int>(i)),
                     regime_params(rng, static_cast<int>(i) + 1));
  }
  return out;
}

inline std::vector<double> grid(int points) {
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = static_cast<double>(i) / (points - 1);
  return t;
}

} // namespace corpus
