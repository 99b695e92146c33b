#include "bergman/operators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bergman/arith.hpp"
#include "bergman/family.hpp"
#include "bergman/random.hpp"

namespace bergman {

namespace {

void check_operator_index(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("operator index k must be >= 1");
}

std::int64_t adjoint_output_order(std::int64_t k, std::int64_t order) {
  // Largest count of source indices m whose window [km+k-1, km+2k-2] is
  // fully stored.
  const std::int64_t m = (order + 1) / k - 1;
  return m > 0 ? m : 0;
}

// (n+1)(n+2)/2, the squared norm reciprocal weight: ||z^n||^2 = 1/w_n.
std::int64_t basis_weight(std::int64_t n) { return (n + 1) * (n + 2) / 2; }

}  // namespace

ExactSeries dilate(std::int64_t k, const ExactSeries& f) {
  check_operator_index(k);
  const std::int64_t out_order = k * f.order() + k - 1;
  std::vector<RationalComplex> out(static_cast<std::size_t>(out_order));
  for (std::int64_t n = 0; n < f.order(); ++n) {
    for (std::int64_t l = 0; l < k; ++l)
      out[static_cast<std::size_t>(k * n + k - 1 + l)] = f.coeff(n);
  }
  return ExactSeries(std::move(out), f.radical() * k);
}

FloatSeries dilate(std::int64_t k, const FloatSeries& f) {
  check_operator_index(k);
  const std::int64_t out_order = k * f.order() + k - 1;
  std::vector<Complex> out(static_cast<std::size_t>(out_order));
  const double root_k = std::sqrt(static_cast<double>(k));
  for (std::int64_t n = 0; n < f.order(); ++n) {
    const Complex v = root_k * f.coeff(n);
    for (std::int64_t l = 0; l < k; ++l) out[static_cast<std::size_t>(k * n + k - 1 + l)] = v;
  }
  return FloatSeries(std::move(out));
}

ExactSeries dilate_adjoint(std::int64_t k, const ExactSeries& f) {
  check_operator_index(k);
  const std::int64_t out_order = adjoint_output_order(k, f.order());
  std::vector<RationalComplex> out(static_cast<std::size_t>(out_order));
  for (std::int64_t m = 0; m < out_order; ++m) {
    RationalComplex acc;
    for (std::int64_t n = k * m + k - 1; n <= k * m + 2 * k - 2; ++n) {
      acc += f.coeff(n) * (Rational(1) / (Rational(n + 1) * Rational(n + 2)));
    }
    acc *= Rational(m + 1) * Rational(m + 2);
    out[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return ExactSeries(std::move(out), f.radical() * k);
}

FloatSeries dilate_adjoint(std::int64_t k, const FloatSeries& f) {
  check_operator_index(k);
  const std::int64_t out_order = adjoint_output_order(k, f.order());
  std::vector<Complex> out(static_cast<std::size_t>(out_order));
  const double root_k = std::sqrt(static_cast<double>(k));
  for (std::int64_t m = 0; m < out_order; ++m) {
    Complex acc = 0;
    for (std::int64_t n = k * m + k - 1; n <= k * m + 2 * k - 2; ++n) {
      acc += f.coeff(n) / (static_cast<double>(n + 1) * static_cast<double>(n + 2));
    }
    out[static_cast<std::size_t>(m)] =
        root_k * static_cast<double>((m + 1) * (m + 2)) * acc;
  }
  return FloatSeries(std::move(out));
}

SectionMatrix finite_section(std::int64_t k, std::int64_t dim, OperatorSide side) {
  check_operator_index(k);
  if (dim < 1) throw std::invalid_argument("finite_section: dim must be >= 1");
  SectionMatrix section;
  section.k = k;
  section.dim = dim;
  section.side = side;
  section.entries = Eigen::MatrixXd::Zero(dim, dim);
  const double root_k = std::sqrt(static_cast<double>(k));
  for (std::int64_t m = k - 1; m < dim; ++m) {
    const std::int64_t n = window_index(k, m);
    if (n < 0 || n >= dim) continue;
    const double ratio = std::sqrt(static_cast<double>(basis_weight(n)) /
                                   static_cast<double>(basis_weight(m)));
    const double value = root_k * ratio;
    if (side == OperatorSide::forward)
      section.entries(m, n) = value;
    else
      section.entries(n, m) = value;
  }
  return section;
}

bool semigroup_identity_holds(std::int64_t j, std::int64_t k, int trials, std::int64_t order,
                              std::uint64_t seed) {
  check_operator_index(j);
  check_operator_index(k);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const ExactSeries f = random_exact_series(rng, order);
    if (dilate(j, dilate(k, f)) != dilate(j * k, f)) return false;
  }
  return true;
}

std::pair<Rational, Rational> isometry_norms_sq(std::int64_t k, const ExactSeries& f) {
  return {norm_a21_sq(f), norm_a21_sq(dilate(k, f))};
}

bool sawtooth_shift_identity_holds(std::int64_t k, std::int64_t m, std::int64_t order) {
  check_operator_index(k);
  if (m < 2) throw std::invalid_argument("sawtooth_shift_identity_holds: m must be >= 2");
  const ExactSeries lhs = dilate(k, sawtooth_series(m, order));
  const ExactSeries main_term = detail::sawtooth_series_any(k * m, lhs.order());
  const ExactSeries correction = detail::sawtooth_series_any(k, lhs.order());
  std::vector<RationalComplex> combined(static_cast<std::size_t>(lhs.order()));
  const Rational inv_m = Rational(-1) / Rational(m);
  for (std::int64_t n = 0; n < lhs.order(); ++n)
    combined[static_cast<std::size_t>(n)] = main_term.coeff(n) + correction.coeff(n) * inv_m;
  ExactSeries target(std::move(combined));
  target.scale_radical(k);  // sqrt(k) times the sawtooth combination
  return lhs == target;
}

namespace {

using ExactMatrix = std::vector<std::vector<ExactScalar>>;

ExactMatrix exact_forward_section(std::int64_t k, std::int64_t rows, std::int64_t cols) {
  ExactMatrix section(static_cast<std::size_t>(rows),
                      std::vector<ExactScalar>(static_cast<std::size_t>(cols)));
  for (std::int64_t m = k - 1; m < rows; ++m) {
    const std::int64_t n = window_index(k, m);
    if (n < 0 || n >= cols) continue;
    const std::int64_t wn = basis_weight(n);
    const std::int64_t wm = basis_weight(m);
    // sqrt(k) c_n / c_m = sqrt(k wn wm) / wm.
    section[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] =
        ExactScalar(RationalComplex(1, static_cast<long>(wm)), k * wn * wm);
  }
  return section;
}

Rational max_abs_sq(const ExactMatrix& a) {
  Rational best = 0;
  for (const auto& row : a)
    for (const auto& x : row) {
      Rational mag = x.magnitude_sq();
      if (mag > best) best = mag;
    }
  return best;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  ExactMatrix out(rows, std::vector<ExactScalar>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[l][j].is_zero()) continue;
        out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

ExactMatrix transpose(const ExactMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  ExactMatrix out(cols, std::vector<ExactScalar>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

void subtract_in_place(ExactMatrix& a, const ExactMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
}

void subtract_identity(ExactMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i][i] -= ExactScalar(RationalComplex(Rational(1)));
}

}  // namespace

Rational projection_defect_exact(std::int64_t k, std::int64_t dim) {
  check_operator_index(k);
  if (dim < 1) throw std::invalid_argument("projection_defect: dim must be >= 1");
  // Rows cover every window of the dim columns, so S^T S closes exactly.
  const std::int64_t rows = k * dim + k - 1;
  const ExactMatrix section = exact_forward_section(k, rows, dim);
  const ExactMatrix section_t = transpose(section);

  ExactMatrix gram = multiply(section_t, section);  // S^T S - I = 0
  subtract_identity(gram);
  Rational worst = max_abs_sq(gram);

  ExactMatrix projector = multiply(section, section_t);  // P^2 - P = 0
  ExactMatrix projector_sq = multiply(projector, projector);
  subtract_in_place(projector_sq, projector);
  Rational defect = max_abs_sq(projector_sq);
  if (defect > worst) worst = defect;
  return worst;
}

double projection_defect(std::int64_t k, std::int64_t dim) {
  check_operator_index(k);
  if (dim < 1) throw std::invalid_argument("projection_defect: dim must be >= 1");
  const std::int64_t rows = k * dim + k - 1;
  Eigen::MatrixXd section = Eigen::MatrixXd::Zero(rows, dim);
  const double root_k = std::sqrt(static_cast<double>(k));
  for (std::int64_t m = k - 1; m < rows; ++m) {
    const std::int64_t n = window_index(k, m);
    if (n < 0 || n >= dim) continue;
    section(m, n) = root_k * std::sqrt(static_cast<double>(basis_weight(n)) /
                                       static_cast<double>(basis_weight(m)));
  }
  const Eigen::MatrixXd gram_defect =
      section.transpose() * section - Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd projector = section * section.transpose();
  const Eigen::MatrixXd projector_defect = projector * projector - projector;
  return std::max(gram_defect.cwiseAbs().maxCoeff(), projector_defect.cwiseAbs().maxCoeff());
}

std::pair<std::int64_t, std::int64_t> leading_index(std::int64_t k, const ExactSeries& f) {
  check_operator_index(k);
  std::int64_t lowest = -1;
  for (std::int64_t n = 0; n < f.order(); ++n) {
    if (!f.coeff(n).is_zero()) {
      lowest = n;
      break;
    }
  }
  if (lowest < 0) throw std::invalid_argument("leading_index: zero series");
  const std::int64_t image_lowest = k * lowest + k - 1;
  // Confirm against the actual image.
  const ExactSeries image = dilate(k, f);
  for (std::int64_t n = 0; n < image_lowest; ++n) {
    if (!image.coeff(n).is_zero())
      throw std::logic_error("leading_index: image has unexpected low-order coefficient");
  }
  if (image.coeff(image_lowest).is_zero())
    throw std::logic_error("leading_index: image leading coefficient vanished");
  return {lowest, image_lowest};
}

CommutantReport commutant_experiment(std::int64_t dim, std::int64_t k_max) {
  if (dim < 2) throw std::invalid_argument("commutant_experiment: dim must be >= 2");
  if (k_max < 1) throw std::invalid_argument("commutant_experiment: k_max must be >= 1");

  const std::int64_t d2 = dim * dim;
  std::vector<Eigen::MatrixXd> sections;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    sections.push_back(finite_section(k, dim, OperatorSide::forward).entries);
    sections.push_back(finite_section(k, dim, OperatorSide::adjoint).entries);
  }

  // vec(XA - AX) = (A^T (x) I - I (x) A) vec(X), stacked over all sections.
  Eigen::MatrixXd constraints(static_cast<std::int64_t>(sections.size()) * d2, d2);
  std::int64_t row0 = 0;
  for (const Eigen::MatrixXd& a : sections) {
    for (std::int64_t i = 0; i < dim; ++i)
      for (std::int64_t j = 0; j < dim; ++j) {
        // Row for entry (i, j) of XA - AX; vec is column-major: X(r, c) at c*dim+r.
        for (std::int64_t r = 0; r < d2; ++r) constraints(row0 + j * dim + i, r) = 0.0;
        for (std::int64_t l = 0; l < dim; ++l) {
          constraints(row0 + j * dim + i, l * dim + i) += a(l, j);   // (XA)(i,j)
          constraints(row0 + j * dim + i, j * dim + l) -= a(i, l);   // (AX)(i,j)
        }
      }
    row0 += d2;
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(constraints);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const double tol = 1e-8 * sigma_max;

  std::int64_t rank = 0;
  double residual = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > tol)
      ++rank;
    else if (sigma(i) > residual)
      residual = sigma(i);
  }

  CommutantReport report;
  report.dim = dim;
  report.k_max = k_max;
  report.solution_dimension = d2 - rank;
  report.residual = residual;
  report.tolerance = tol;
  return report;
}

}  // namespace bergman
