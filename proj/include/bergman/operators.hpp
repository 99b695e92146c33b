// The multiplicative monoid of dilation isometries on the weight-1 Bergman
// space and their adjoints,
//
//   (D_k f)(z) = sqrt(k) z^(k-1) f(z^k) (1-z^k)/(1-z),
//
// acting on coefficients by spreading a_n across the window
// [kn+k-1, kn+2k-2].  Includes dense finite sections in the orthonormal
// monomial basis e_n = sqrt((n+1)(n+2)/2) z^n, identity checkers used by the
// verification suites, and a desk-scale commutant experiment.

#ifndef BERGMAN_OPERATORS_HPP
#define BERGMAN_OPERATORS_HPP

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "bergman/series.hpp"

namespace bergman {

/// Dilation by k; output order k*order + k - 1 (every input coefficient
/// fully spread).  Exact mode multiplies the radicand by k.
ExactSeries dilate(std::int64_t k, const ExactSeries& f);
FloatSeries dilate(std::int64_t k, const FloatSeries& f);

/// Adjoint of dilate.  Emits only coefficients whose full window
/// [km+k-1, km+2k-2] lies inside the input truncation, so every emitted
/// value equals the infinite-series one.  Output order
/// max(0, floor((order+1)/k) - 1).
ExactSeries dilate_adjoint(std::int64_t k, const ExactSeries& f);
FloatSeries dilate_adjoint(std::int64_t k, const FloatSeries& f);

enum class OperatorSide { forward, adjoint };

/// Dense compression to span{e_0, ..., e_dim-1}.  Forward entries are
/// sqrt(k) c_n / c_m at (m, n) with window_index(k, m) = n and m >= k-1;
/// adjoint is the transpose.  Rows hold at most one nonzero entry on the
/// forward side (each position has a unique dilation source).
struct SectionMatrix {
  std::int64_t k = 1;
  std::int64_t dim = 0;
  OperatorSide side = OperatorSide::forward;
  Eigen::MatrixXd entries;
};

SectionMatrix finite_section(std::int64_t k, std::int64_t dim, OperatorSide side);

/// Exact check of D_j D_k = D_jk on `trials` pseudorandom rational series of
/// the given order (seeded, reproducible).
bool semigroup_identity_holds(std::int64_t j, std::int64_t k, int trials, std::int64_t order,
                              std::uint64_t seed = 0x5eed0001u);

/// (||f||^2, ||D_k f||^2), both exact; equal for every series.
std::pair<Rational, Rational> isometry_norms_sq(std::int64_t k, const ExactSeries& f);

/// Exact check of D_k s_m = sqrt(k)(s_km - s_k/m) on sawtooth series
/// truncated at `order` (compared coefficientwise on the valid range after
/// dividing both sides by sqrt(k)).  k >= 1, m >= 2.
bool sawtooth_shift_identity_holds(std::int64_t k, std::int64_t m, std::int64_t order);

/// max entrywise |S^T S - I| and |P^2 - P| for the rectangular section S of
/// D_k with rows covering every window of `dim` columns (P = S S^T).  Exactly
/// zero; the exact variant returns the deviation as a rational.
Rational projection_defect_exact(std::int64_t k, std::int64_t dim);
double projection_defect(std::int64_t k, std::int64_t dim);

/// (l, k*l + k - 1): lowest nonzero coefficient index of f and of D_k f,
/// the latter verified against the actual image.  Rejects the zero series.
std::pair<std::int64_t, std::int64_t> leading_index(std::int64_t k, const ExactSeries& f);

struct CommutantReport {
  std::int64_t dim = 0;
  std::int64_t k_max = 0;
  /// Dimension of {X : X A = A X for all stored sections A}.
  std::int64_t solution_dimension = 0;
  /// Largest singular value treated as zero by the rank decision.
  double residual = 0.0;
  /// Rank tolerance used: 1e-8 * sigma_max.
  double tolerance = 0.0;
};

/// Null-space dimension of the stacked commutation constraints with the
/// finite sections of D_k and D_k^* for k <= k_max.  Finite sections only
/// approximate the operator relations, so this is an experiment, not a
/// theorem check; the tolerance is part of the output.
CommutantReport commutant_experiment(std::int64_t dim, std::int64_t k_max);

}  // namespace bergman

#endif  // BERGMAN_OPERATORS_HPP
