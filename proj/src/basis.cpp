#include "pqbezier/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pqbezier/errors.hpp"

namespace pqbezier {

namespace {

void require_unit(double t, const char* name) {
  if (!(t >= 0.0 && t <= 1.0))
    throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(t));
}

} // namespace

double BasisRow::sum() const noexcept {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

LevelWeights level_weights(int m, const PQParams& params, double t) {
  if (t <= 0.0) return {1.0, 0.0};
  if (t >= 1.0) return {0.0, 1.0};
  const double p = params.p();
  const double q = params.q();
  if (q <= p) {
    const double r = std::pow(q / p, m);
    const double den = (1.0 - t) + r * t;
    return {(1.0 - t) / den, r * t / den};
  }
  const double s = std::pow(p / q, m);
  const double den = s * (1.0 - t) + t;
  return {s * (1.0 - t) / den, t / den};
}

BasisRow basis_row(int n, const PQParams& params, double t) {
  if (n < 0) throw DomainError("degree must be non-negative");
  require_unit(t, "t");
  BasisRow row{n, t, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
  auto& b = row.values;
  b[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    const auto [w0, w1] = level_weights(m - 1, params, t);
    b[m] = w1 * b[m - 1];
    for (int k = m - 1; k >= 1; --k) b[k] = w0 * b[k] + w1 * b[k - 1];
    b[0] = w0 * b[0];
  }
  return row;
}

double basis_single(int k, int n, const PQParams& params, double t) {
  if (n < 0 || k < 0 || k > n) throw DomainError("basis_single needs 0 <= k <= n");
  require_unit(t, "t");
  const double p = params.p();
  const double q = params.q();

  const double binom = pq_binomial(n, k, params);
  const double num = binom * std::pow(p, 0.5 * (n - k) * (n - k - 1)) *
                     std::pow(q, 0.5 * k * (k - 1)) * std::pow(t, k) *
                     std::pow(1.0 - t, n - k);
  double den = 1.0;
  for (int j = 1; j <= n; ++j) den *= std::pow(p, j - 1) * (1.0 - t) + std::pow(q, j - 1) * t;

  if (!std::isfinite(num) || !std::isfinite(den) || den == 0.0)
    throw OverflowError("closed-form basis not representable for n=" + std::to_string(n));
  const double value = num / den;
  if (!std::isfinite(value)) throw OverflowError("closed-form basis not representable");
  return value;
}

IdentityPair inverse_symmetry_pair(int k, int n, const PQParams& params, double t) {
  if (n < 0 || k < 0 || k > n) throw DomainError("inverse symmetry needs 0 <= k <= n");
  require_unit(t, "t");
  const double lhs = basis_row(n, params, t).values[static_cast<std::size_t>(n - k)];
  const double rhs = basis_row(n, params.reciprocal(), 1.0 - t).values[static_cast<std::size_t>(k)];
  return {lhs, rhs};
}

SplitWeights reduction_split(int k, int n, const PQParams& params, double t) {
  if (n < 1 || k < 0 || k > n) throw DomainError("reduction_split needs n >= 1, 0 <= k <= n");
  require_unit(t, "t");
  const auto [w0, w1] = level_weights(n - 1, params, t);
  return {w1, w0};
}

ElevationMatrix::ElevationMatrix(int source_degree, const PQParams& params)
    : n_(source_degree) {
  if (n_ < 0) throw DomainError("degree must be non-negative");
  const double top = pq_integer(n_ + 1, params);
  lambda_.resize(static_cast<std::size_t>(n_) + 2);
  double ppow = 1.0;
  for (int k = 0; k <= n_ + 1; ++k) {
    lambda_[k] = ppow * pq_integer(n_ + 1 - k, params) / top;
    ppow *= params.p();
  }
  lambda_.front() = 1.0;
  lambda_.back() = 0.0;
}

double ElevationMatrix::operator()(std::size_t i, std::size_t j) const noexcept {
  if (i >= rows() || j >= cols()) return 0.0;
  if (j == i) return lambda_[i];
  if (j + 1 == i) return 1.0 - lambda_[i];
  return 0.0;
}

std::vector<double> ElevationMatrix::apply(std::span<const double> coeffs) const {
  if (coeffs.size() != cols()) throw DomainError("coefficient count does not match degree");
  std::vector<double> out(rows());
  out.front() = coeffs.front();
  out.back() = coeffs.back();
  for (std::size_t k = 1; k + 1 < rows(); ++k)
    out[k] = (1.0 - lambda_[k]) * coeffs[k - 1] + lambda_[k] * coeffs[k];
  return out;
}

ElevationMatrix elevation_matrix(int n, const PQParams& params) { return {n, params}; }

std::vector<double> limit_basis_row(const PQParams& params, double u, double tol) {
  const double p = params.p();
  const double q = params.q();
  if (!(q < p)) throw DomainError("limit basis requires q < p");
  if (!(u >= 0.0) || !std::isfinite(u)) throw DomainError("limit basis requires finite u >= 0");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (u == 0.0) return {1.0};

  // log term_k = log term_{k-1} + (k-1) log q + log(p u) - log(p - q) - log [k]
  const double log_q = std::log(q);
  const double log_z = std::log(p * u) - std::log(p - q);
  const double cut = tol * 1e-2;

  std::vector<double> logs{0.0};
  double log_max = 0.0;
  double scaled_sum = 1.0;  // sum_j exp(log_j - log_max)
  for (int k = 1; k <= kLimitSeriesCap; ++k) {
    const double lt = logs.back() + (k - 1) * log_q + log_z - std::log(pq_integer(k, params));
    logs.push_back(lt);
    if (lt > log_max) {
      scaled_sum = scaled_sum * std::exp(log_max - lt) + 1.0;
      log_max = lt;
    } else {
      scaled_sum += std::exp(lt - log_max);
    }
    if (std::exp(lt - log_max) / scaled_sum < cut) break;
  }

  std::vector<double> values(logs.size());
  for (std::size_t k = 0; k < logs.size(); ++k)
    values[k] = std::exp(logs[k] - log_max) / scaled_sum;
  return values;
}

double limit_basis(int k, const PQParams& params, double u, double tol) {
  if (k < 0) throw DomainError("k must be non-negative");
  const auto row = limit_basis_row(params, u, tol);
  return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : 0.0;
}

} // namespace pqbezier
