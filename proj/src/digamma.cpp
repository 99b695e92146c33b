#include "bergman/digamma.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: argument must be positive");
  double result = 0.0;
  // psi(x) = psi(x+1) - 1/x until the asymptotic regime.
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_2j / (2j x^2j); at x >= 10 the truncation
  // error is below 1e-16.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  static const double coeff[] = {
      1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
  };
  double power = inv2;
  for (double c : coeff) {
    series += c * power;
    power *= inv2;
  }
  result += std::log(x) - 0.5 * inv - series;
  return result;
}

}  // namespace bergman
