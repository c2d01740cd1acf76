#include "pqbezier/pq_arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pqbezier/errors.hpp"

namespace pqbezier {

std::string_view to_string(Regime r) noexcept {
  switch (r) {
  case Regime::QLtPLe1: return "Q_LT_P_LE_1";
  case Regime::PEq1: return "P_EQ_1";
  case Regime::PEqQ: return "P_EQ_Q";
  case Regime::BothGt1: return "BOTH_GT_1";
  case Regime::General: return "GENERAL";
  }
  return "GENERAL";
}

PQParams::PQParams(double p, double q) : p_(p), q_(q) {
  if (!(std::isfinite(p) && p > 0.0))
    throw DomainError("p must be positive and finite, got " + std::to_string(p));
  if (!(std::isfinite(q) && q > 0.0))
    throw DomainError("q must be positive and finite, got " + std::to_string(q));
}

Regime PQParams::regime() const noexcept {
  if (std::abs(p_ - q_) < kRegimeTolerance * std::max(p_, q_)) return Regime::PEqQ;
  if (p_ == 1.0) return Regime::PEq1;
  if (q_ < p_ && p_ <= 1.0) return Regime::QLtPLe1;
  if (p_ > 1.0 && q_ > 1.0) return Regime::BothGt1;
  return Regime::General;
}

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be non-negative");
}

} // namespace

double pq_integer(int n, const PQParams& params) {
  require_nonnegative(n, "n");
  // Horner: ((q^0) p + q^1) p + q^2 ... accumulates p^{n-1-i} q^i.
  double acc = 0.0;
  double qpow = 1.0;
  for (int i = 0; i < n; ++i) {
    acc = acc * params.p() + qpow;
    qpow *= params.q();
  }
  return acc;
}

double pq_factorial(int n, const PQParams& params) {
  require_nonnegative(n, "n");
  double acc = 1.0;
  for (int i = 1; i <= n; ++i) {
    acc *= pq_integer(i, params);
    if (!std::isfinite(acc))
      throw OverflowError("[" + std::to_string(n) + "]_{p,q}! exceeds the double range");
  }
  return acc;
}

std::vector<double> pq_binomial_row(int n, const PQParams& params) {
  require_nonnegative(n, "n");
  std::vector<double> brackets(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) brackets[i] = pq_integer(i, params);

  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) {
    double v = row[k - 1] * brackets[n - k + 1] / brackets[k];
    if (!std::isfinite(v))
      throw OverflowError("(p,q)-binomial of degree " + std::to_string(n) +
                          " exceeds the double range");
    row[k] = std::max(v, 0.0);
  }
  return row;
}

double pq_binomial(int n, int k, const PQParams& params) {
  require_nonnegative(n, "n");
  if (k < 0 || k > n) return 0.0;
  // Walk the shorter half; the coefficient is symmetric in k <-> n-k.
  const int steps = std::min(k, n - k);
  double acc = 1.0;
  for (int i = 1; i <= steps; ++i) {
    acc = acc * pq_integer(n - i + 1, params) / pq_integer(i, params);
    if (!std::isfinite(acc))
      throw OverflowError("(p,q)-binomial exceeds the double range");
  }
  return std::max(acc, 0.0);
}

namespace {

void require_interior(int n, int k) {
  if (k < 1 || k > n - 1)
    throw DomainError("Pascal relation needs 1 <= k <= n-1");
}

} // namespace

double pascal_left(int n, int k, const PQParams& params) {
  require_interior(n, k);
  return std::pow(params.q(), n - k) * pq_binomial(n - 1, k - 1, params) +
         std::pow(params.p(), k) * pq_binomial(n - 1, k, params);
}

double pascal_right(int n, int k, const PQParams& params) {
  require_interior(n, k);
  return std::pow(params.p(), n - k) * pq_binomial(n - 1, k - 1, params) +
         std::pow(params.q(), k) * pq_binomial(n - 1, k, params);
}

IdentityPair euler_partial_product(double x, const PQParams& params, int terms) {
  const double p = params.p();
  const double q = params.q();
  if (!(q < p)) throw DomainError("Euler identity requires q < p");
  if (!(x >= 0.0)) throw DomainError("Euler identity check requires x >= 0");
  if (terms < 1) throw DomainError("terms must be at least 1");

  // term_k = term_{k-1} * q^{k-1} x / ((p - q) [k])
  double sum = 1.0;
  double term = 1.0;
  double qpow = 1.0;
  for (int k = 1; k <= terms; ++k) {
    term *= qpow * x / ((p - q) * pq_integer(k, params));
    qpow *= q;
    sum += term;
  }

  const double ratio = q / p;
  double product = 1.0;
  double rpow = 1.0;
  for (int j = 1; j <= terms; ++j) {
    product *= 1.0 + rpow * x / p;
    rpow *= ratio;
  }
  return {sum, product};
}

} // namespace pqbezier
