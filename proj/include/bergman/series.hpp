// Truncated Taylor-coefficient series on the unit disk, in two numeric modes:
// ExactSeries (rational coefficients, exact square-root prefactor) for
// identity verification, FloatSeries (complex<double>) for distance work.
//
// Inner products follow the coefficient formula for the weight-1 Bergman
// space: <f, g> = sum_n 2 a_n conj(b_n) / ((n+1)(n+2)), and the Hardy-space
// norm is sqrt(sum |a_n|^2).  Truncation is always explicit: every operation
// documents its output order, and dropped tails are certified separately.

#ifndef BERGMAN_SERIES_HPP
#define BERGMAN_SERIES_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "bergman/exact.hpp"

namespace bergman {

using Complex = std::complex<double>;

/// Rigorous bound on what a truncation dropped from a Bergman-norm
/// computation.  tail_bound dominates the squared contribution of all
/// coefficients at indices >= truncation_order, assuming each has magnitude
/// at most sup_coeff_bound.
struct TailCertificate {
  std::int64_t truncation_order = 0;
  double sup_coeff_bound = 0.0;
  double tail_bound = 0.0;
};

/// tail_bound = sup^2 * 2/(N+1), from the telescoping sum
/// sum_{n>=N} 2/((n+1)(n+2)) = 2/(N+1).
TailCertificate tail_bound_a21(std::int64_t dropped_from, double sup_coeff);

class FloatSeries {
 public:
  FloatSeries() = default;
  explicit FloatSeries(std::vector<Complex> coeffs);
  static FloatSeries zero(std::int64_t order) {
    return FloatSeries(std::vector<Complex>(static_cast<std::size_t>(order)));
  }

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  const Complex& coeff(std::int64_t n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Complex& coeff(std::int64_t n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  bool is_zero() const;

 private:
  std::vector<Complex> coeffs_;
};

/// sqrt(radical) * sum_n coeff(n) z^n, radical a squarefree positive integer.
/// Family constructors produce radical 1; the dilation operators multiply it.
class ExactSeries {
 public:
  ExactSeries() = default;
  explicit ExactSeries(std::vector<RationalComplex> coeffs, std::int64_t radical = 1);
  static ExactSeries zero(std::int64_t order) {
    return ExactSeries(std::vector<RationalComplex>(static_cast<std::size_t>(order)));
  }

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  std::int64_t radical() const { return radical_; }
  const RationalComplex& coeff(std::int64_t n) const {
    return coeffs_[static_cast<std::size_t>(n)];
  }
  RationalComplex& coeff(std::int64_t n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<RationalComplex>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Multiplies the represented function by sqrt(factor), factor > 0.
  void scale_radical(std::int64_t factor);
  /// Multiplies every coefficient by q.
  void scale(const Rational& q);

  /// Equal as represented functions (same order, radical, coefficients).
  friend bool operator==(const ExactSeries& a, const ExactSeries& b);
  friend bool operator!=(const ExactSeries& a, const ExactSeries& b) { return !(a == b); }

 private:
  std::vector<RationalComplex> coeffs_;
  std::int64_t radical_ = 1;
};

FloatSeries to_float(const ExactSeries& f);

// ---- Bergman (A^2_1) and Hardy (H^2) inner products -------------------------

/// Truncated inner product over n < min(order_f, order_g); conjugate-linear
/// in the second slot.
Complex inner_a21(const FloatSeries& f, const FloatSeries& g);
ExactScalar inner_a21(const ExactSeries& f, const ExactSeries& g);

double norm_a21_sq(const FloatSeries& f);
Rational norm_a21_sq(const ExactSeries& f);
double norm_a21(const FloatSeries& f);
double norm_a21(const ExactSeries& f);

double norm_h2_sq(const FloatSeries& f);
Rational norm_h2_sq(const ExactSeries& f);
double norm_h2(const FloatSeries& f);
double norm_h2(const ExactSeries& f);

// ---- Coefficient-level operations -------------------------------------------

/// Multiplication by (1-z).  Output order = order + 1; the final coefficient
/// -a_{order-1} is the boundary of the truncation.
FloatSeries mul_one_minus_z(const FloatSeries& f);
ExactSeries mul_one_minus_z(const ExactSeries& f);

/// Division by (1-z): prefix sums, same order.
FloatSeries div_one_minus_z(const FloatSeries& f);
ExactSeries div_one_minus_z(const ExactSeries& f);

/// Termwise derivative; output order = order - 1.  Rejects order-0 input.
FloatSeries derivative(const FloatSeries& f);
ExactSeries derivative(const ExactSeries& f);

/// Horner evaluation of the truncated polynomial; requires |z| < 1.
Complex evaluate(const FloatSeries& f, Complex z);
ExactScalar evaluate(const ExactSeries& f, const RationalComplex& z);

/// The radial monomial moment 2*int_0^1 r^(2v+2n2+1)(1-r^2) dr
/// = 1/((v+n2+1)(v+n2+2)).  The full-disk pairing <z^v, |z|^(2 n2) z^v> in
/// A^2_1 equals twice this value (angular integration contributes the
/// factor 2, consistent with ||z^v||^2 = 2/((v+1)(v+2))).
Rational monomial_moment(std::int64_t v, std::int64_t n2);
double monomial_moment_d(std::int64_t v, std::int64_t n2);

}  // namespace bergman

#endif  // BERGMAN_SERIES_HPP
