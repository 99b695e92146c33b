#include "bergman/arith.hpp"

#include <stdexcept>
#include <string>

namespace bergman {

FactorTable::FactorTable(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("FactorTable: limit must be >= 1");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= limit; j += i) {
      if (spf_[static_cast<std::size_t>(j)] == 0)
        spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
  }
}

void FactorTable::check(std::int64_t n) const {
  if (n < 1 || n > limit_)
    throw std::out_of_range("FactorTable: n = " + std::to_string(n) + " outside [1, " +
                            std::to_string(limit_) + "]");
}

std::int64_t FactorTable::smallest_factor(std::int64_t n) const {
  check(n);
  if (n == 1) return 1;
  return spf_[static_cast<std::size_t>(n)];
}

int FactorTable::moebius(std::int64_t n) const {
  check(n);
  int sign = 1;
  while (n > 1) {
    const std::int64_t p = spf_[static_cast<std::size_t>(n)];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t FactorTable::tau(std::int64_t n) const {
  check(n);
  std::int64_t count = 1;
  while (n > 1) {
    const std::int64_t p = spf_[static_cast<std::size_t>(n)];
    std::int64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  return count;
}

std::vector<std::int64_t> FactorTable::divisors(std::int64_t n) const {
  check(n);
  std::vector<std::int64_t> divs{1};
  while (n > 1) {
    const std::int64_t p = spf_[static_cast<std::size_t>(n)];
    std::int64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    std::int64_t pe = 1;
    for (std::int64_t i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  return divs;
}

std::int64_t mobius_divisor_sum(std::int64_t m, std::int64_t n, std::int64_t K,
                                const FactorTable& table) {
  if (m < 1 || n < 1 || K < 1) throw std::invalid_argument("mobius_divisor_sum: arguments >= 1");
  if (n % m != 0) return 0;  // k with m|k and k|n requires m|n
  std::int64_t sum = 0;
  for (std::int64_t d : table.divisors(n / m)) {
    if (m * d <= K) sum += table.moebius(d);
  }
  return sum;
}

double mertens_ratio(std::int64_t x, const FactorTable& table) {
  if (x < 1) throw std::invalid_argument("mertens_ratio: x must be >= 1");
  long double acc = 0;
  for (std::int64_t k = 1; k <= x; ++k) {
    const int mu = table.moebius(k);
    if (mu != 0) acc += static_cast<long double>(mu) / static_cast<long double>(k);
  }
  return static_cast<double>(acc);
}

Rational mertens_ratio_exact(std::int64_t x, const FactorTable& table) {
  if (x < 1) throw std::invalid_argument("mertens_ratio_exact: x must be >= 1");
  Rational acc = 0;
  for (std::int64_t k = 1; k <= x; ++k) {
    const int mu = table.moebius(k);
    if (mu != 0) acc += Rational(mu) / Rational(static_cast<long>(k));
  }
  return acc;
}

}  // namespace bergman
