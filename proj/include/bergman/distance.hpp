// Gram-matrix least squares: the distance d_N from the geometric series
// 1/(1-z) to span{s_2, ..., s_N} of sawtooth series in the Bergman norm,
// plus the density-of-monomials residual experiment.
//
// Inner products among the family are infinite sums with period-lcm
// structure.  Two independent methods are provided:
//   direct   -- truncated summation with a rigorous 2/(M+1) tail certificate
//   digamma  -- per-residue-class closed forms via the digamma function,
//               full double precision
// ||1/(1-z)||^2 = 2 exactly (telescoping), so d_N^2 = 2 - rhs^T G^{-1} rhs.

#ifndef BERGMAN_DISTANCE_HPP
#define BERGMAN_DISTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bergman/arith.hpp"
#include "bergman/cache.hpp"
#include "bergman/series.hpp"

namespace bergman {

enum class GramPrecision { direct, digamma };

struct GramSpec {
  GramPrecision mode = GramPrecision::digamma;
  std::int64_t truncation = 1'000'000;  // direct mode only

  std::string precision_name() const {
    return mode == GramPrecision::digamma ? "digamma" : "direct";
  }
};

/// Squared Bergman norm of the geometric series (exact telescoping value).
inline constexpr double geometric_norm_sq = 2.0;

struct EntryResult {
  double value = 0.0;
  TailCertificate tail;  // zero bound in digamma mode
};

/// <s_j, s_k> for j, k >= 2.
EntryResult gram_entry(std::int64_t j, std::int64_t k, const GramSpec& spec);
/// <s_k, 1/(1-z)> for k >= 2.
EntryResult rhs_entry(std::int64_t k, const GramSpec& spec);

struct GramSystem {
  std::int64_t n_max = 2;
  GramSpec spec;
  Eigen::MatrixXd gram;    // (N-1)x(N-1), entry (a,b) = <s_(a+2), s_(b+2)>
  Eigen::VectorXd rhs;     // entry a = <s_(a+2), 1/(1-z)>
  TailCertificate tail;    // worst per-entry certificate (direct mode)
};

/// Assembles the system, consulting the cache per entry when one is given.
GramSystem build_gram(std::int64_t n_max, const GramSpec& spec,
                      const EntryCache* cache = nullptr, int threads = 1);

enum class SolverKind { cholesky, ridge };

struct DistanceReport {
  std::int64_t n_max = 2;
  double distance_sq = 0.0;
  Eigen::VectorXd coefficients;
  SolverKind solver = SolverKind::cholesky;
  double ridge_lambda = 0.0;
  /// First-order bound combining per-entry tail certificates and the
  /// residual of the linear solve.
  double error_budget = 0.0;
  bool clamped = false;  // distance_sq was clamped up to 0
};

/// Least squares via Cholesky; falls back to ridge regularization
/// G + lambda I, lambda = 1e-12 trace(G)/(N-1), when factorization fails.
DistanceReport solve_distance(const GramSystem& sys);

/// Distance reports for each N in n_list (strictly increasing), sharing one
/// Gram build and one incrementally extended Cholesky factor.  d_N^2 is
/// computed as 2 - sum of squared forward-substituted components, which
/// makes the reported sequence nonincreasing by construction.
std::vector<DistanceReport> distance_curve(const std::vector<std::int64_t>& n_list,
                                           const GramSpec& spec,
                                           const EntryCache* cache = nullptr, int threads = 1);

/// Same sweep over an already-assembled system (n_list.back() <= sys.n_max).
std::vector<DistanceReport> distance_curve_over(const GramSystem& sys,
                                                const std::vector<std::int64_t>& n_list);

/// sup_n tau(n)/n^(1/4) = 8.4466...; attained at n = 21621600.  Slight
/// round-up keeps tail certificates valid.
inline constexpr double tau_quarter_power_bound = 8.447;

struct ApproxReport {
  std::int64_t m = 1;
  std::int64_t k_max = 1;
  std::int64_t trunc = 0;
  /// Hardy-space norm of the Moebius-weighted combination of log-ratio
  /// series plus z^m, over n < trunc (exact coefficients, float norm).
  double residual_h2 = 0.0;
  /// Bergman norm of the differentiated combination against m z^(m-1).
  double residual_a21 = 0.0;
  /// Rigorous bounds on the squared contribution of n >= trunc.
  double tail_h2_sq = 0.0;
  double tail_a21_sq = 0.0;
  /// Shape of the proof's estimate: sqrt(mertens^2 + m^2 K^(-1/2)).
  double bound = 0.0;
  double mertens = 0.0;  // sum of mu(k)/k for k <= K/m
};

/// The density experiment: coefficients of
///   sum_{k <= K, m | k} (m/k) mu(k/m) F_k + z^m
/// are computed exactly; residuals are reported with tail certificates.
/// Requires trunc > k_max >= m and table.limit() >= max(trunc-1, k_max).
ApproxReport monomial_approx_residual(std::int64_t m, std::int64_t k_max, std::int64_t trunc,
                                      const FactorTable& table);

}  // namespace bergman

#endif  // BERGMAN_DISTANCE_HPP
