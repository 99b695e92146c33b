// Seeded pseudorandom rational/float inputs for property checks.

#ifndef BERGMAN_RANDOM_HPP
#define BERGMAN_RANDOM_HPP

#include <random>
#include <vector>

#include "bergman/family.hpp"
#include "bergman/series.hpp"

namespace bergman {

inline RationalComplex random_rational_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Rational re(num(rng), static_cast<unsigned long>(den(rng)));
  re.canonicalize();
  Rational im(num(rng), static_cast<unsigned long>(den(rng)));
  im.canonicalize();
  return {std::move(re), std::move(im)};
}

inline ExactSeries random_exact_series(std::mt19937_64& rng, std::int64_t order) {
  std::vector<RationalComplex> c(static_cast<std::size_t>(order));
  for (auto& x : c) x = random_rational_complex(rng);
  return ExactSeries(std::move(c));
}

inline WeightedSequence random_weighted_sequence(std::mt19937_64& rng, std::int64_t length) {
  std::vector<RationalComplex> v(static_cast<std::size_t>(length));
  for (auto& x : v) x = random_rational_complex(rng);
  return WeightedSequence(std::move(v));
}

inline FloatSeries random_float_series(std::mt19937_64& rng, std::int64_t order) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(order));
  for (auto& x : c) x = Complex(dist(rng), dist(rng));
  return FloatSeries(std::move(c));
}

}  // namespace bergman

#endif  // BERGMAN_RANDOM_HPP
