#include "bergman/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bergman {

namespace {

void check_finite(const std::vector<Complex>& coeffs) {
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("FloatSeries: non-finite coefficient");
  }
}

}  // namespace

TailCertificate tail_bound_a21(std::int64_t dropped_from, double sup_coeff) {
  if (dropped_from < 0) throw std::invalid_argument("tail_bound_a21: dropped_from must be >= 0");
  if (sup_coeff < 0) throw std::invalid_argument("tail_bound_a21: sup_coeff must be >= 0");
  TailCertificate cert;
  cert.truncation_order = dropped_from;
  cert.sup_coeff_bound = sup_coeff;
  cert.tail_bound = sup_coeff * sup_coeff * 2.0 / (static_cast<double>(dropped_from) + 1.0);
  return cert;
}

FloatSeries::FloatSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  check_finite(coeffs_);
}

bool FloatSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) { return c == 0.0; });
}

ExactSeries::ExactSeries(std::vector<RationalComplex> coeffs, std::int64_t radical)
    : coeffs_(std::move(coeffs)), radical_(radical) {
  if (radical_ <= 0) throw std::invalid_argument("ExactSeries: radical must be positive");
  std::int64_t root = 1;
  radical_ = squarefree_part(radical_, root);
  if (root != 1) scale(Rational(root));
}

bool ExactSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const RationalComplex& c) { return c.is_zero(); });
}

void ExactSeries::scale_radical(std::int64_t factor) {
  if (factor <= 0) throw std::invalid_argument("ExactSeries: radical factor must be positive");
  std::int64_t root = 1;
  radical_ = squarefree_part(radical_ * factor, root);
  if (root != 1) scale(Rational(root));
}

void ExactSeries::scale(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
}

bool operator==(const ExactSeries& a, const ExactSeries& b) {
  if (a.order() != b.order()) return false;
  // Radicals only matter when some coefficient is nonzero.
  if (a.radical_ != b.radical_ && !(a.is_zero() && b.is_zero())) return false;
  return a.coeffs_ == b.coeffs_;
}

FloatSeries to_float(const ExactSeries& f) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(f.order()));
  const double scale = std::sqrt(static_cast<double>(f.radical()));
  for (const auto& c : f.coeffs()) out.push_back(c.to_complex() * scale);
  return FloatSeries(std::move(out));
}

Complex inner_a21(const FloatSeries& f, const FloatSeries& g) {
  const std::int64_t n_terms = std::min(f.order(), g.order());
  // long double accumulation keeps million-term sums within 1e-12 of exact.
  std::complex<long double> acc = 0;
  for (std::int64_t n = 0; n < n_terms; ++n) {
    const Complex t = f.coeff(n) * std::conj(g.coeff(n));
    const long double w =
        2.0L / (static_cast<long double>(n + 1) * static_cast<long double>(n + 2));
    acc += std::complex<long double>(t.real(), t.imag()) * w;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

ExactScalar inner_a21(const ExactSeries& f, const ExactSeries& g) {
  const std::int64_t n_terms = std::min(f.order(), g.order());
  RationalComplex acc;
  for (std::int64_t n = 0; n < n_terms; ++n) {
    RationalComplex t = f.coeff(n) * g.coeff(n).conjugate();
    Rational w = Rational(2) / (Rational(n + 1) * Rational(n + 2));
    acc += t * w;
  }
  return ExactScalar(std::move(acc), f.radical() * g.radical());
}

double norm_a21_sq(const FloatSeries& f) {
  long double acc = 0;
  for (std::int64_t n = 0; n < f.order(); ++n) {
    const long double w =
        2.0L / (static_cast<long double>(n + 1) * static_cast<long double>(n + 2));
    acc += static_cast<long double>(std::norm(f.coeff(n))) * w;
  }
  return static_cast<double>(acc);
}

Rational norm_a21_sq(const ExactSeries& f) {
  Rational acc = 0;
  for (std::int64_t n = 0; n < f.order(); ++n) {
    acc += f.coeff(n).norm_sq() * Rational(2) / (Rational(n + 1) * Rational(n + 2));
  }
  return acc * Rational(f.radical());
}

double norm_a21(const FloatSeries& f) { return std::sqrt(norm_a21_sq(f)); }
double norm_a21(const ExactSeries& f) { return std::sqrt(norm_a21_sq(f).get_d()); }

double norm_h2_sq(const FloatSeries& f) {
  long double acc = 0;
  for (const auto& c : f.coeffs()) acc += static_cast<long double>(std::norm(c));
  return static_cast<double>(acc);
}

Rational norm_h2_sq(const ExactSeries& f) {
  Rational acc = 0;
  for (const auto& c : f.coeffs()) acc += c.norm_sq();
  return acc * Rational(f.radical());
}

double norm_h2(const FloatSeries& f) { return std::sqrt(norm_h2_sq(f)); }
double norm_h2(const ExactSeries& f) { return std::sqrt(norm_h2_sq(f).get_d()); }

namespace {

template <class Scalar>
std::vector<Scalar> mul_one_minus_z_impl(const std::vector<Scalar>& a) {
  std::vector<Scalar> b(a.size() + 1);
  if (a.empty()) return b;
  b[0] = a[0];
  for (std::size_t n = 1; n < a.size(); ++n) b[n] = a[n] - a[n - 1];
  b[a.size()] = -a[a.size() - 1];
  return b;
}

template <class Scalar>
std::vector<Scalar> div_one_minus_z_impl(const std::vector<Scalar>& a) {
  std::vector<Scalar> b(a.size());
  Scalar run{};
  for (std::size_t n = 0; n < a.size(); ++n) {
    run += a[n];
    b[n] = run;
  }
  return b;
}

}  // namespace

FloatSeries mul_one_minus_z(const FloatSeries& f) {
  return FloatSeries(mul_one_minus_z_impl(f.coeffs()));
}
ExactSeries mul_one_minus_z(const ExactSeries& f) {
  return ExactSeries(mul_one_minus_z_impl(f.coeffs()), f.radical());
}

FloatSeries div_one_minus_z(const FloatSeries& f) {
  return FloatSeries(div_one_minus_z_impl(f.coeffs()));
}
ExactSeries div_one_minus_z(const ExactSeries& f) {
  return ExactSeries(div_one_minus_z_impl(f.coeffs()), f.radical());
}

FloatSeries derivative(const FloatSeries& f) {
  if (f.order() < 1) throw std::invalid_argument("derivative: order-0 series");
  std::vector<Complex> b(static_cast<std::size_t>(f.order()) - 1);
  for (std::int64_t n = 1; n < f.order(); ++n)
    b[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * f.coeff(n);
  return FloatSeries(std::move(b));
}

ExactSeries derivative(const ExactSeries& f) {
  if (f.order() < 1) throw std::invalid_argument("derivative: order-0 series");
  std::vector<RationalComplex> b(static_cast<std::size_t>(f.order()) - 1);
  for (std::int64_t n = 1; n < f.order(); ++n)
    b[static_cast<std::size_t>(n - 1)] = f.coeff(n) * Rational(n);
  return ExactSeries(std::move(b), f.radical());
}

Complex evaluate(const FloatSeries& f, Complex z) {
  if (std::norm(z) >= 1.0)
    throw std::domain_error("evaluate: point outside the open unit disk");
  Complex acc = 0;
  for (std::int64_t n = f.order() - 1; n >= 0; --n) acc = acc * z + f.coeff(n);
  return acc;
}

ExactScalar evaluate(const ExactSeries& f, const RationalComplex& z) {
  if (z.norm_sq() >= 1)
    throw std::domain_error("evaluate: point outside the open unit disk");
  RationalComplex acc;
  for (std::int64_t n = f.order() - 1; n >= 0; --n) acc = acc * z + f.coeff(n);
  return ExactScalar(std::move(acc), f.radical());
}

Rational monomial_moment(std::int64_t v, std::int64_t n2) {
  if (v < 0 || n2 < 0) throw std::invalid_argument("monomial_moment: negative index");
  const std::int64_t w = v + n2;
  Rational denom = Rational(w + 1) * Rational(w + 2);
  return Rational(1) / denom;
}

double monomial_moment_d(std::int64_t v, std::int64_t n2) {
  return monomial_moment(v, n2).get_d();
}

}  // namespace bergman
