#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqbezier/pq_arith.hpp"

namespace pqbezier {

struct TargetFunction {
  std::function<double(double)> evaluator;
  std::string label;

  double operator()(double x) const { return evaluator(x); }
};

/// Test functions used by the convergence experiments, by label:
/// "1", "t", "t2", "t3", "exp", "sin_pi", "abs_half".
const std::vector<TargetFunction>& function_corpus();
std::optional<TargetFunction> find_target(std::string_view label);

struct ScheduleLimits {
  double p;
  double q;
  double p_pow_n;
  double q_pow_n;
};

/// n -> (p_n, q_n).
struct ParamSchedule {
  std::function<PQParams(int)> generator;
  std::string label;
  ScheduleLimits limits;

  PQParams operator()(int n) const { return generator(n); }
};

/// p_n = 1 - 1/(2n^2), q_n = 1 - 1/n; p_n^n -> 1, q_n^n -> 1/e. Defined for n >= 2.
ParamSchedule reference_schedule();

/// The same (p, q) for every n.
ParamSchedule fixed_schedule(const PQParams& params);

struct ConvergenceRecord {
  int n;
  PQParams params;
  double sup_error;
};

/// Sampling node p^{n-k} [k] / [n].
double node(int k, int n, const PQParams& params);

/// L^n_{p,q}(f; x) = sum_k f(node_k) b^{k,n}_{p,q}(x).
double lupas_operator(const TargetFunction& f, int n, const PQParams& params, double x);

struct Moments {
  double m0;
  double m1;
  double m2;
};

/// Closed-form images of 1, t and t^2.
Moments moments(int n, const PQParams& params, double x);

/// L^inf_{p,q}(f; x) for 0 < q < p < 1: sum_k f(1 - (q/p)^k) b^{k,inf}(x/(1-x)),
/// and f(1) at x = 1.
double limit_operator(const TargetFunction& f, const PQParams& params, double x, double tol);

/// lhs = L^n_{p,q}(f; t), rhs = L^n_{1/p,1/q}(g; 1-t) with g(x) = f(1-x).
IdentityPair reflection_pair(const TargetFunction& f, int n, const PQParams& params, double t);

/// Sup-norm error of L^n against f over `grid_size` uniform points, per n.
std::vector<ConvergenceRecord> convergence_table(const TargetFunction& f,
                                                 const ParamSchedule& schedule,
                                                 const std::vector<int>& n_values,
                                                 int grid_size = 201);

/// Uniform grid on [0,1] with both endpoints.
std::vector<double> unit_grid(int size);

} // namespace pqbezier
