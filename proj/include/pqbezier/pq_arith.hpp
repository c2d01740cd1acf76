#pragma once

#include <string_view>
#include <vector>

namespace pqbezier {

/// Relative tolerance used when classifying p ~ q.
inline constexpr double kRegimeTolerance = 1e-12;

enum class Regime {
  QLtPLe1,  // 0 < q < p <= 1
  PEq1,     // p == 1
  PEqQ,     // |p - q| < kRegimeTolerance * max(p, q)
  BothGt1,  // p > 1 and q > 1
  General,
};

std::string_view to_string(Regime r) noexcept;

/// A validated pair of positive, finite deformation parameters.
class PQParams {
public:
  PQParams(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// Informational only; no formula branches on it.
  Regime regime() const noexcept;

  /// (1/p, 1/q), the parameters of the reversed curve.
  PQParams reciprocal() const { return {1.0 / p_, 1.0 / q_}; }
  /// (q, p).
  PQParams swapped() const { return {q_, p_}; }
  /// (1/q, 1/p).
  PQParams inverse_swapped() const { return {1.0 / q_, 1.0 / p_}; }

  friend bool operator==(const PQParams&, const PQParams&) = default;

private:
  double p_;
  double q_;
};

/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}, always by the summation
/// form so that p == q needs no special case.
double pq_integer(int n, const PQParams& params);

/// [1]![2]!...[n]!; 1 for n == 0. Throws OverflowError past the double range.
double pq_factorial(int n, const PQParams& params);

/// (p,q)-binomial coefficient; 0 when k < 0 or k > n.
double pq_binomial(int n, int k, const PQParams& params);

/// Whole row [n 0], ..., [n n] by the multiplicative recurrence.
std::vector<double> pq_binomial_row(int n, const PQParams& params);

/// q^{n-k} [n-1 k-1] + p^k [n-1 k]. Requires 1 <= k <= n-1.
double pascal_left(int n, int k, const PQParams& params);
/// p^{n-k} [n-1 k-1] + q^k [n-1 k]. Requires 1 <= k <= n-1.
double pascal_right(int n, int k, const PQParams& params);

struct IdentityPair {
  double lhs;
  double rhs;
};

/// Truncated sides of the (p,q) Euler identity, valid for q < p:
///
///   sum_{k=0}^{terms} q^{k(k-1)/2} x^k / ((p-q)^k [k]!)
///     = prod_{j=1}^{terms} (1 + (q/p)^{j-1} x / p).
///
/// The product carries x/p; at p = 1 this is the classical q-Euler product.
IdentityPair euler_partial_product(double x, const PQParams& params, int terms);

} // namespace pqbezier
