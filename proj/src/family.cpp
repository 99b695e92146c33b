#include "bergman/family.hpp"

#include <stdexcept>

namespace bergman {

WeightedSequence::WeightedSequence(std::vector<RationalComplex> values, std::int64_t radical)
    : values_(std::move(values)), radical_(radical) {
  if (radical_ <= 0) throw std::invalid_argument("WeightedSequence: radical must be positive");
  std::int64_t root = 1;
  radical_ = squarefree_part(radical_, root);
  if (root != 1) {
    const Rational q(root);
    for (auto& v : values_) v *= q;
  }
}

bool operator==(const WeightedSequence& a, const WeightedSequence& b) {
  if (a.length() != b.length()) return false;
  if (a.radical_ != b.radical_) {
    const auto zero = [](const std::vector<RationalComplex>& v) {
      for (const auto& x : v)
        if (!x.is_zero()) return false;
      return true;
    };
    if (!(zero(a.values_) && zero(b.values_))) return false;
  }
  return a.values_ == b.values_;
}

Rational weighted_norm_sq(const WeightedSequence& f) {
  Rational acc = 0;
  for (std::int64_t n = 1; n <= f.length(); ++n) {
    acc += f.at(n).norm_sq() / (Rational(n) * Rational(n + 1));
  }
  return acc * Rational(f.radical());
}

ExactSeries geometric_series(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("geometric_series: order must be >= 1");
  return ExactSeries(std::vector<RationalComplex>(static_cast<std::size_t>(order),
                                                  RationalComplex(Rational(1))));
}

namespace {

void check_family_index(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("family index k must be >= 2");
}

// {(n+1)/k} coefficients; k = 1 gives the zero series (used by the shift
// identity at its trivial edge).
std::vector<RationalComplex> sawtooth_coeffs(std::int64_t k, std::int64_t order) {
  std::vector<RationalComplex> c(static_cast<std::size_t>(order));
  for (std::int64_t n = 0; n < order; ++n) {
    const std::int64_t r = (n + 1) % k;
    if (r != 0) {
      Rational q(static_cast<long>(r), static_cast<unsigned long>(k));
      q.canonicalize();
      c[static_cast<std::size_t>(n)] = RationalComplex(std::move(q));
    }
  }
  return c;
}

}  // namespace

ExactSeries sawtooth_series(std::int64_t k, std::int64_t order) {
  check_family_index(k);
  if (order < 0) throw std::invalid_argument("sawtooth_series: negative order");
  return ExactSeries(sawtooth_coeffs(k, order));
}

namespace detail {

// Internal variant admitting k = 1 (identically zero), for the k = 1 edge of
// the dilation/shift identity.
ExactSeries sawtooth_series_any(std::int64_t k, std::int64_t order) {
  if (k < 1) throw std::invalid_argument("sawtooth_series_any: k must be >= 1");
  return ExactSeries(sawtooth_coeffs(k, order));
}

}  // namespace detail

ExactSeries log_derivative_series(std::int64_t k, std::int64_t order) {
  check_family_index(k);
  if (order < 0) throw std::invalid_argument("log_derivative_series: negative order");
  std::vector<RationalComplex> c(static_cast<std::size_t>(order));
  for (std::int64_t n = 0; n < order; ++n) {
    const bool aligned = ((n + 1) % k) == 0;
    c[static_cast<std::size_t>(n)] = RationalComplex(Rational(aligned ? 1 - k : 1));
  }
  return ExactSeries(std::move(c));
}

ExactSeries log_ratio_series(std::int64_t k, std::int64_t order) {
  check_family_index(k);
  if (order < 0) throw std::invalid_argument("log_ratio_series: negative order");
  std::vector<RationalComplex> c(static_cast<std::size_t>(order));
  for (std::int64_t n = 1; n < order; ++n) {
    const long num = (n % k == 0) ? static_cast<long>(1 - k) : 1L;
    Rational q(num, static_cast<unsigned long>(n));
    q.canonicalize();
    c[static_cast<std::size_t>(n)] = RationalComplex(std::move(q));
  }
  return ExactSeries(std::move(c));
}

FamilyTag FamilyTag::make(Kind kind, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("FamilyTag: index must be >= 2");
  FamilyTag tag;
  tag.kind = kind;
  tag.index = k;
  return tag;
}

ExactSeries make_series(const FamilyTag& tag, std::int64_t order) {
  switch (tag.kind) {
    case FamilyTag::Kind::sawtooth:
      return sawtooth_series(tag.index, order);
    case FamilyTag::Kind::log_derivative:
      return log_derivative_series(tag.index, order);
    case FamilyTag::Kind::log_ratio:
      return log_ratio_series(tag.index, order);
    case FamilyTag::Kind::geometric:
      return geometric_series(order);
  }
  throw std::logic_error("make_series: unreachable");
}

ExactSeries embed_sequence(const WeightedSequence& f) {
  std::vector<RationalComplex> c;
  c.reserve(static_cast<std::size_t>(f.length()));
  const Rational half(1, 2);
  for (const auto& v : f.values()) c.push_back(v * half);
  // (1/sqrt 2) x = sqrt(2) x / 2, so halve the coefficients and double the
  // radicand.
  return ExactSeries(std::move(c), 2 * f.radical());
}

WeightedSequence extract_sequence(const ExactSeries& g) {
  return WeightedSequence(g.coeffs(), 2 * g.radical());
}

}  // namespace bergman
