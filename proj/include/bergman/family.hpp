// The function families of the approximation problem, as exact coefficient
// series:
//
//   geometric_series        1/(1-z)            coefficients 1,1,1,...
//   sawtooth_series(k)      {(n+1)/k} z^n      period-k fractional parts
//   log_derivative_series(k) d/dz log(1+z+...+z^(k-1)),  a_n = 1 - k [k | n+1]
//   log_ratio_series(k)     log((1-z^k)/(1-z)), a_n = 1/n - [k | n] k/n
//
// plus the unitary bridge between the discrete weighted space l^2(nu),
// nu({n}) = 1/(n(n+1)), and the Bergman space: a sequence f maps to the
// series (1/sqrt 2) sum f(n+1) z^n.
//
// Constructors produce exact rationals; convert with to_float at the point
// of use.

#ifndef BERGMAN_FAMILY_HPP
#define BERGMAN_FAMILY_HPP

#include <cstdint>
#include <vector>

#include "bergman/series.hpp"

namespace bergman {

/// Finite sequence indexed from 1, living in l^2(nu) with
/// nu({n}) = 1/(n(n+1)).  Carries the same square-root prefactor as
/// ExactSeries so the bridge maps are exact.
class WeightedSequence {
 public:
  WeightedSequence() = default;
  explicit WeightedSequence(std::vector<RationalComplex> values, std::int64_t radical = 1);

  std::int64_t length() const { return static_cast<std::int64_t>(values_.size()); }
  std::int64_t radical() const { return radical_; }
  /// Value at n, 1-based.
  const RationalComplex& at(std::int64_t n) const {
    return values_[static_cast<std::size_t>(n - 1)];
  }
  const std::vector<RationalComplex>& values() const { return values_; }

  friend bool operator==(const WeightedSequence& a, const WeightedSequence& b);
  friend bool operator!=(const WeightedSequence& a, const WeightedSequence& b) {
    return !(a == b);
  }

 private:
  std::vector<RationalComplex> values_;
  std::int64_t radical_ = 1;
};

/// sum |f(n)|^2 / (n(n+1)), exact.
Rational weighted_norm_sq(const WeightedSequence& f);

ExactSeries geometric_series(std::int64_t order);
ExactSeries sawtooth_series(std::int64_t k, std::int64_t order);
ExactSeries log_derivative_series(std::int64_t k, std::int64_t order);
ExactSeries log_ratio_series(std::int64_t k, std::int64_t order);

/// Names a member of the function families.  The index is required (and
/// must be >= 2) for every kind except the geometric series.
struct FamilyTag {
  enum class Kind { sawtooth, log_derivative, log_ratio, geometric };

  Kind kind = Kind::geometric;
  std::int64_t index = 0;

  static FamilyTag sawtooth(std::int64_t k) { return make(Kind::sawtooth, k); }
  static FamilyTag log_derivative(std::int64_t k) { return make(Kind::log_derivative, k); }
  static FamilyTag log_ratio(std::int64_t k) { return make(Kind::log_ratio, k); }
  static FamilyTag geometric() { return FamilyTag{}; }

 private:
  static FamilyTag make(Kind kind, std::int64_t k);
};

/// Dispatches to the family constructors.
ExactSeries make_series(const FamilyTag& tag, std::int64_t order);

/// (1/sqrt 2) sum f(n+1) z^n; an isometry onto the Bergman space.
ExactSeries embed_sequence(const WeightedSequence& f);
/// Inverse of embed_sequence.
WeightedSequence extract_sequence(const ExactSeries& g);

namespace detail {
// sawtooth_series extended to k = 1, where {(n+1)/1} = 0 identically; keeps
// the k = 1 edge of the shift identity well defined.
ExactSeries sawtooth_series_any(std::int64_t k, std::int64_t order);
}  // namespace detail

}  // namespace bergman

#endif  // BERGMAN_FAMILY_HPP
