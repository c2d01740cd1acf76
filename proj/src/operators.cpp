#include "pqbezier/operators.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "pqbezier/basis.hpp"
#include "pqbezier/errors.hpp"

namespace pqbezier {

namespace {

void require_unit(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("x must lie in [0,1], got " + std::to_string(x));
}

} // namespace

const std::vector<TargetFunction>& function_corpus() {
  static const std::vector<TargetFunction> corpus{
      {[](double) { return 1.0; }, "1"},
      {[](double t) { return t; }, "t"},
      {[](double t) { return t * t; }, "t2"},
      {[](double t) { return t * t * t; }, "t3"},
      {[](double t) { return std::exp(t); }, "exp"},
      {[](double t) { return std::sin(std::numbers::pi * t); }, "sin_pi"},
      {[](double t) { return std::abs(t - 0.5); }, "abs_half"},
  };
  return corpus;
}

std::optional<TargetFunction> find_target(std::string_view label) {
  for (const auto& f : function_corpus())
    if (f.label == label) return f;
  return std::nullopt;
}

ParamSchedule reference_schedule() {
  auto gen = [](int n) {
    if (n < 2) throw DomainError("reference schedule is defined for n >= 2");
    const double nn = n;
    return PQParams(1.0 - 1.0 / (2.0 * nn * nn), 1.0 - 1.0 / nn);
  };
  return {gen, "reference", {1.0, 1.0, 1.0, std::exp(-1.0)}};
}

ParamSchedule fixed_schedule(const PQParams& params) {
  const double p = params.p();
  const double q = params.q();
  auto limit_pow = [](double x) { return x < 1.0 ? 0.0 : (x == 1.0 ? 1.0 : INFINITY); };
  return {[params](int) { return params; },
          "fixed",
          {p, q, limit_pow(p), limit_pow(q)}};
}

double node(int k, int n, const PQParams& params) {
  if (n < 1 || k < 0 || k > n) throw DomainError("node needs n >= 1 and 0 <= k <= n");
  if (k == n) return 1.0;
  return std::pow(params.p(), n - k) * pq_integer(k, params) / pq_integer(n, params);
}

double lupas_operator(const TargetFunction& f, int n, const PQParams& params, double x) {
  if (n < 1) throw DomainError("operator degree must be at least 1");
  require_unit(x);
  const auto row = basis_row(n, params, x);
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double w = row.values[k];
    if (w != 0.0) acc += f(node(k, n, params)) * w;
  }
  return acc;
}

Moments moments(int n, const PQParams& params, double x) {
  if (n < 1) throw DomainError("operator degree must be at least 1");
  require_unit(x);
  const double p = params.p();
  const double q = params.q();
  const double bn = pq_integer(n, params);
  const double m2 = std::pow(p, n - 1) * x / bn +
                    q * q * x * x * pq_integer(n - 1, params) / (bn * (p * (1.0 - x) + q * x));
  return {1.0, x, m2};
}

double limit_operator(const TargetFunction& f, const PQParams& params, double x, double tol) {
  const double p = params.p();
  const double q = params.q();
  if (!(q < p && p < 1.0)) throw DomainError("limit operator requires 0 < q < p < 1");
  require_unit(x);
  if (x == 1.0) return f(1.0);

  const auto weights = limit_basis_row(params, x / (1.0 - x), tol);
  const double ratio = q / p;
  double rpow = 1.0;
  double acc = 0.0;
  for (double w : weights) {
    acc += f(1.0 - rpow) * w;
    rpow *= ratio;
  }
  return acc;
}

IdentityPair reflection_pair(const TargetFunction& f, int n, const PQParams& params, double t) {
  require_unit(t);
  const TargetFunction g{[&f](double x) { return f(1.0 - x); }, f.label + "(1-x)"};
  return {lupas_operator(f, n, params, t), lupas_operator(g, n, params.reciprocal(), 1.0 - t)};
}

std::vector<double> unit_grid(int size) {
  if (size < 2) throw DomainError("grid needs at least two points");
  std::vector<double> grid(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) grid[i] = i == size - 1 ? 1.0 : static_cast<double>(i) / (size - 1);
  return grid;
}

std::vector<ConvergenceRecord> convergence_table(const TargetFunction& f,
                                                 const ParamSchedule& schedule,
                                                 const std::vector<int>& n_values,
                                                 int grid_size) {
  if (n_values.empty()) throw DomainError("n_values must be nonempty");
  if (!std::is_sorted(n_values.begin(), n_values.end()))
    throw DomainError("n_values must be ascending");
  const auto grid = unit_grid(grid_size);

  // Rows are independent; results are collected in n order.
  std::vector<std::future<ConvergenceRecord>> pending;
  pending.reserve(n_values.size());
  for (int n : n_values) {
    const PQParams params = schedule(n);
    pending.push_back(std::async(std::launch::async, [&f, &grid, n, params] {
      double worst = 0.0;
      for (double x : grid) worst = std::max(worst, std::abs(lupas_operator(f, n, params, x) - f(x)));
      return ConvergenceRecord{n, params, worst};
    }));
  }
  std::vector<ConvergenceRecord> table;
  table.reserve(pending.size());
  for (auto& job : pending) table.push_back(job.get());
  return table;
}

} // namespace pqbezier
