// Exact scalar arithmetic for the identity suites: complex numbers with
// rational real/imaginary parts, optionally carrying a square-root factor
// sqrt(radical) so that values like sqrt(k) * q stay exactly comparable.

#ifndef BERGMAN_EXACT_HPP
#define BERGMAN_EXACT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bergman {

using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

/// Splits n = s^2 * u with u squarefree; returns u and stores s in `square_root`.
/// n must be positive. Trial division; radicands in this codebase stay small
/// (products of operator indices).
std::int64_t squarefree_part(std::int64_t n, std::int64_t& square_root);

/// Complex number with exact rational components.
struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() : re(0), im(0) {}
  RationalComplex(Rational r) : re(std::move(r)), im(0) {}
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RationalComplex(long r) : re(r), im(0) {}
  RationalComplex(long num, long den) : re(Rational(num, den)), im(0) { re.canonicalize(); }

  bool is_zero() const { return re == 0 && im == 0; }

  RationalComplex conjugate() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  RationalComplex& operator+=(const RationalComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  RationalComplex& operator-=(const RationalComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  RationalComplex& operator*=(const RationalComplex& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  RationalComplex& operator*=(const Rational& q) {
    re *= q;
    im *= q;
    return *this;
  }

  friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
  friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
  friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
  friend RationalComplex operator*(RationalComplex a, const Rational& q) { return a *= q; }
  friend RationalComplex operator*(const Rational& q, RationalComplex a) { return a *= q; }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }
};

inline RationalComplex conj(const RationalComplex& z) { return z.conjugate(); }

/// value * sqrt(radical) with radical a squarefree positive integer.
/// The canonical zero is {0, 1}.  Sums of incompatible radicals are not
/// representable and throw; the operator identities verified here never
/// produce them.
struct ExactScalar {
  RationalComplex value;
  std::int64_t radical = 1;

  ExactScalar() = default;
  ExactScalar(RationalComplex v, std::int64_t rad = 1) : value(std::move(v)), radical(rad) {
    normalize();
  }

  bool is_zero() const { return value.is_zero(); }

  /// Restores the invariants: squarefree radical, radical 1 on zero.
  void normalize() {
    if (value.is_zero()) {
      value = RationalComplex();
      radical = 1;
      return;
    }
    if (radical <= 0) throw std::invalid_argument("ExactScalar: radical must be positive");
    std::int64_t root = 1;
    radical = squarefree_part(radical, root);
    if (root != 1) value *= Rational(root);
  }

  /// |value|^2 * radical, the exact squared magnitude.
  Rational magnitude_sq() const { return value.norm_sq() * Rational(radical); }

  std::complex<double> to_complex() const {
    return value.to_complex() * std::sqrt(static_cast<double>(radical));
  }
  double to_real() const { return value.re.get_d() * std::sqrt(static_cast<double>(radical)); }

  ExactScalar& operator+=(const ExactScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      return *this;
    }
    if (radical != o.radical)
      throw std::logic_error("ExactScalar: sum of incompatible radicals " +
                             std::to_string(radical) + " and " + std::to_string(o.radical));
    value += o.value;
    normalize();
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) { return *this += ExactScalar(-o.value, o.radical); }
  ExactScalar& operator*=(const ExactScalar& o) {
    if (is_zero() || o.is_zero()) {
      *this = ExactScalar();
      return *this;
    }
    // Both radicals are squarefree, so sqrt(r1 r2) = g sqrt((r1/g)(r2/g))
    // with g = gcd(r1, r2), and the remaining radicand is squarefree.
    const std::int64_t g = std::gcd(radical, o.radical);
    value *= o.value;
    if (g != 1) value *= Rational(g);
    radical = (radical / g) * (o.radical / g);
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.radical == b.radical && a.value == b.value;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

inline ExactScalar conj(const ExactScalar& z) { return {z.value.conjugate(), z.radical}; }

}  // namespace bergman

#endif  // BERGMAN_EXACT_HPP
