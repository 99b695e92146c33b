#ifndef BERGMAN_DIGAMMA_HPP
#define BERGMAN_DIGAMMA_HPP

namespace bergman {

/// Digamma (logarithmic derivative of Gamma) for x > 0, accurate to a few
/// ulp: upward recurrence to x >= 10, then the Bernoulli asymptotic series.
double digamma(double x);

}  // namespace bergman

#endif  // BERGMAN_DIGAMMA_HPP
