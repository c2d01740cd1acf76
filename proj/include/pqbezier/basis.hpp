#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pqbezier/pq_arith.hpp"

namespace pqbezier {

/// All n+1 basis values b^{k,n}_{p,q}(t), k = 0..n, at one parameter.
struct BasisRow {
  int degree = 0;
  double t = 0.0;
  std::vector<double> values;

  double sum() const noexcept;
};

/// The pair of convex weights that mixes level m of the degree-raising
/// recurrence:  w1 = q^m t / (p^m (1-t) + q^m t),  w0 = 1 - w1.
/// Both are computed through the ratio (q/p)^m or (p/q)^m, whichever is <= 1,
/// so they stay finite for every p, q > 0.
struct LevelWeights {
  double w0;
  double w1;
};

LevelWeights level_weights(int m, const PQParams& params, double t);

/// Evaluates the whole row by running the degree-raising recurrence
/// b^{k,m} = w1 b^{k-1,m-1} + w0 b^{k,m-1} from degree 0. Every step is a
/// convex combination, so the row is nonnegative and sums to one up to
/// round-off regardless of how large p^{n(n-1)/2} would be.
BasisRow basis_row(int n, const PQParams& params, double t);

/// Closed-form rational expression for a single function. Throws
/// OverflowError when an intermediate power or product is not representable.
double basis_single(int k, int n, const PQParams& params, double t);

/// lhs = b^{n-k,n}_{p,q}(t), rhs = b^{k,n}_{1/p,1/q}(1-t).
IdentityPair inverse_symmetry_pair(int k, int n, const PQParams& params, double t);

/// Weights that express b^{k,n} through the degree-(n-1) functions:
///   b^{k,n} = w_prev b^{k-1,n-1} + w_same b^{k,n-1}.
struct SplitWeights {
  double w_prev;
  double w_same;
};

SplitWeights reduction_split(int k, int n, const PQParams& params, double t);

/// The (n+2) x (n+1) bidiagonal matrix mapping degree-n control values to
/// the equivalent degree-(n+1) control values.
class ElevationMatrix {
public:
  ElevationMatrix(int source_degree, const PQParams& params);

  int source_degree() const noexcept { return n_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(n_) + 2; }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(n_) + 1; }

  /// Entry (i, j); zero off the two diagonals j = i-1 and j = i.
  double operator()(std::size_t i, std::size_t j) const noexcept;

  /// lambda_k = p^k [n+1-k] / [n+1]: weight of the old point k in new point k.
  /// The old point k-1 receives 1 - lambda_k.
  double keep_weight(int k) const noexcept { return lambda_[static_cast<std::size_t>(k)]; }

  std::vector<double> apply(std::span<const double> coeffs) const;

private:
  int n_;
  std::vector<double> lambda_;  // size n+2; lambda_0 = 1, lambda_{n+1} = 0
};

ElevationMatrix elevation_matrix(int n, const PQParams& params);

/// Limit basis b^{k,inf}_{p,q}(u) for 0 < q < p, with u = t/(1-t) in [0, inf).
///
/// Defined as the normalized series term_k / sum_j term_j with
///   term_k = q^{k(k-1)/2} (p u)^k / ((p-q)^k [k]!),
/// which is the n -> inf limit of b^{k,n}_{p,q}(t). The series is cut at the
/// first K where term_K / sum_{j<=K} term_j < tol * 1e-2 (K <= 500), and
/// evaluated in log space so large u does not overflow.
double limit_basis(int k, const PQParams& params, double u, double tol);

/// Values for k = 0..K (K the truncation index above); sums to one.
std::vector<double> limit_basis_row(const PQParams& params, double u, double tol);

inline constexpr int kLimitSeriesCap = 500;

} // namespace pqbezier
