// Elementary multiplicative number theory backed by a smallest-prime-factor
// sieve.  The distance and residual experiments query mu and tau densely, so
// everything is table-driven with an explicit limit.

#ifndef BERGMAN_ARITH_HPP
#define BERGMAN_ARITH_HPP

#include <cstdint>
#include <vector>

#include "bergman/exact.hpp"

namespace bergman {

class FactorTable {
 public:
  explicit FactorTable(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  std::int64_t smallest_factor(std::int64_t n) const;

  /// Moebius function: 0 on non-squarefree n, else (-1)^(#prime factors).
  int moebius(std::int64_t n) const;

  /// Number of positive divisors.
  std::int64_t tau(std::int64_t n) const;

  /// All positive divisors of n (unsorted).
  std::vector<std::int64_t> divisors(std::int64_t n) const;

 private:
  void check(std::int64_t n) const;

  std::int64_t limit_;
  std::vector<std::int32_t> spf_;
};

/// floor((m+1)/k) - 1: the unique source index whose k-fold dilation window
/// covers position m.  Negative values signal "no source" (the adjoint's
/// zero branch).
constexpr std::int64_t window_index(std::int64_t k, std::int64_t m) {
  return (m + 1) / k - 1;
}

/// sum over k <= K with m | k and k | n of mu(k/m); equals [m == n] once
/// K >= n.
std::int64_t mobius_divisor_sum(std::int64_t m, std::int64_t n, std::int64_t K,
                                const FactorTable& table);

/// Partial sum of mu(k)/k for k <= x.
double mertens_ratio(std::int64_t x, const FactorTable& table);
Rational mertens_ratio_exact(std::int64_t x, const FactorTable& table);

}  // namespace bergman

#endif  // BERGMAN_ARITH_HPP
