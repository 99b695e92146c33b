// Check suites behind the `verify` command and the acceptance harness.
// Each check emits one row; rational-mode rows assert exact identities
// (deviation must be exactly zero), float rows carry numeric tolerances.

#ifndef BERGMAN_SUITES_HPP
#define BERGMAN_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/series.hpp"

namespace bergman {

enum class NumericMode { rational, float64 };

inline const char* to_string(NumericMode mode) {
  return mode == NumericMode::rational ? "rational" : "float64";
}

struct CheckRow {
  std::string check;
  std::int64_t k = 0;
  std::int64_t m = 0;
  NumericMode mode = NumericMode::rational;
  double deviation = 0.0;
  /// 0 means "must be exact".
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  std::int64_t k_max = 8;
  std::int64_t m_max = 10;
  std::int64_t order = 400;
  int trials = 20;
  std::int64_t max_index = 8;  // moment suite: v, n2 <= max_index
  NumericMode mode = NumericMode::rational;
  std::uint64_t seed = 0x42ab1927u;
};

/// Dilation-monoid identities: semigroup, norm preservation, left inverse,
/// adjoint duality, geometric-series eigenfunction, invariant subspaces,
/// projection defects, leading-index law, finite-section consistency.
std::vector<CheckRow> run_operator_suite(const VerifyConfig& config);

/// D_k s_m = sqrt(k)(s_km - s_k/m), coefficientwise, k <= k_max, 2 <= m <= m_max.
std::vector<CheckRow> run_lemma13_suite(const VerifyConfig& config);

/// Radial/2-D quadrature cross-check of the monomial moments.
std::vector<CheckRow> run_moment_suite(const VerifyConfig& config);

/// Function-family structure plus series-core invariants: periodicity,
/// derivative and (1-z) bridges, closed-form evaluation, the sequence-space
/// isometry, conjugate symmetry, orthogonality, derivative contraction.
std::vector<CheckRow> run_family_suite(const VerifyConfig& config);

/// Dispatch by name: "operators", "lemma13", "moments", "family", or "all".
/// Throws std::invalid_argument on unknown names.
std::vector<CheckRow> run_suite(const std::string& name, const VerifyConfig& config);

namespace oracle {

/// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// 2 * int_0^1 r^(2v+2n2+1) (1 - r^2) dr by quadrature.
double radial_moment_quadrature(std::int64_t v, std::int64_t n2, int nodes = 64);

/// int over the unit disk of z^v conj(z^v) |z|^(2 n2) against the weighted
/// area measure 2(1-|z|^2) dA, by tensor quadrature (radial Gauss-Legendre x
/// uniform angular grid).  Equals twice the radial moment.
double disk_moment_quadrature(std::int64_t v, std::int64_t n2, int r_nodes = 64,
                              int theta_nodes = 32);

}  // namespace oracle

}  // namespace bergman

#endif  // BERGMAN_SUITES_HPP
