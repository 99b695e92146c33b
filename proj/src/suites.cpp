#include "bergman/suites.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bergman/arith.hpp"
#include "bergman/family.hpp"
#include "bergman/operators.hpp"
#include "bergman/random.hpp"

namespace bergman {

namespace {

constexpr double kFloatTol = 1e-12;

// Exact inequalities must never report deviation 0, even when the rational
// difference underflows the double range.
constexpr double kNonzeroFloor = 1e-300;

double abs_of(const ExactScalar& x) {
  if (x.is_zero()) return 0.0;
  return std::max(std::sqrt(x.magnitude_sq().get_d()), kNonzeroFloor);
}

// Largest |difference| between two exact series viewed as functions.
double exact_series_deviation(const ExactSeries& a, const ExactSeries& b) {
  if (a == b) return 0.0;
  const std::int64_t n_max = std::max(a.order(), b.order());
  const double ra = std::sqrt(static_cast<double>(a.radical()));
  const double rb = std::sqrt(static_cast<double>(b.radical()));
  double worst = 0.0;
  for (std::int64_t n = 0; n < n_max; ++n) {
    const Complex va = n < a.order() ? a.coeff(n).to_complex() * ra : Complex(0);
    const Complex vb = n < b.order() ? b.coeff(n).to_complex() * rb : Complex(0);
    worst = std::max(worst, std::abs(va - vb));
  }
  return std::max(worst, kNonzeroFloor);
}

double float_series_deviation(const FloatSeries& a, const FloatSeries& b,
                              std::int64_t upto = -1) {
  const std::int64_t n_max = upto >= 0 ? upto : std::max(a.order(), b.order());
  double worst = 0.0;
  for (std::int64_t n = 0; n < n_max; ++n) {
    const Complex va = n < a.order() ? a.coeff(n) : Complex(0);
    const Complex vb = n < b.order() ? b.coeff(n) : Complex(0);
    worst = std::max(worst, std::abs(va - vb));
  }
  return worst;
}

ExactSeries exact_monomial(std::int64_t n, std::int64_t order) {
  ExactSeries f = ExactSeries::zero(order);
  f.coeff(n) = RationalComplex(Rational(1));
  return f;
}

CheckRow make_row(std::string check, std::int64_t k, std::int64_t m, NumericMode mode,
                  double deviation, double tolerance) {
  CheckRow row;
  row.check = std::move(check);
  row.k = k;
  row.m = m;
  row.mode = mode;
  row.deviation = deviation;
  row.tolerance = tolerance;
  row.pass = mode == NumericMode::rational && tolerance == 0.0 ? deviation == 0.0
                                                               : deviation <= tolerance;
  return row;
}

// ---- operator suite ---------------------------------------------------------

void semigroup_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed);
  const int trials = std::max(1, config.trials / 8);
  for (std::int64_t j = 1; j <= config.k_max; ++j) {
    for (std::int64_t k = 1; k <= config.k_max; ++k) {
      double worst = 0.0;
      for (int t = 0; t < trials; ++t) {
        if (config.mode == NumericMode::rational) {
          const ExactSeries f = random_exact_series(rng, config.order);
          worst = std::max(worst, exact_series_deviation(dilate(j, dilate(k, f)),
                                                         dilate(j * k, f)));
        } else {
          const FloatSeries f = random_float_series(rng, config.order);
          worst = std::max(worst,
                           float_series_deviation(dilate(j, dilate(k, f)), dilate(j * k, f)));
        }
      }
      rows.push_back(make_row("semigroup", j, k, config.mode, worst,
                              config.mode == NumericMode::rational ? 0.0 : kFloatTol));
    }
  }
}

void isometry_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed + 1);
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    double worst = 0.0;
    for (int t = 0; t < config.trials; ++t) {
      if (config.mode == NumericMode::rational) {
        const ExactSeries f = random_exact_series(rng, config.order);
        const auto [before, after] = isometry_norms_sq(k, f);
        if (before != after)
          worst = std::max(worst,
                           std::max(std::abs(Rational(after - before).get_d()), kNonzeroFloor));
      } else {
        const FloatSeries f = random_float_series(rng, config.order);
        worst = std::max(worst, std::abs(norm_a21_sq(dilate(k, f)) - norm_a21_sq(f)));
      }
    }
    rows.push_back(make_row("isometry", k, 0, config.mode, worst,
                            config.mode == NumericMode::rational ? 0.0 : kFloatTol));
  }
}

void left_inverse_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed + 2);
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    double worst = 0.0;
    for (int t = 0; t < std::max(1, config.trials / 4); ++t) {
      if (config.mode == NumericMode::rational) {
        const ExactSeries f = random_exact_series(rng, config.order);
        worst = std::max(worst, exact_series_deviation(dilate_adjoint(k, dilate(k, f)), f));
      } else {
        const FloatSeries f = random_float_series(rng, config.order);
        worst = std::max(worst, float_series_deviation(dilate_adjoint(k, dilate(k, f)), f));
      }
    }
    rows.push_back(make_row("left-inverse", k, 0, config.mode, worst,
                            config.mode == NumericMode::rational ? 0.0 : kFloatTol));
  }
}

void adjoint_duality_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed + 3);
  const std::int64_t f_order = std::max<std::int64_t>(2, config.order / 4);
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    const std::int64_t g_order = k * f_order + k - 1;
    double worst = 0.0;
    for (int t = 0; t < std::max(1, config.trials / 4); ++t) {
      if (config.mode == NumericMode::rational) {
        const ExactSeries f = random_exact_series(rng, f_order);
        const ExactSeries g = random_exact_series(rng, g_order);
        const ExactScalar lhs = inner_a21(dilate(k, f), g);
        const ExactScalar rhs = inner_a21(f, dilate_adjoint(k, g));
        worst = std::max(worst, abs_of(lhs - rhs));
      } else {
        const FloatSeries f = random_float_series(rng, f_order);
        const FloatSeries g = random_float_series(rng, g_order);
        const Complex lhs = inner_a21(dilate(k, f), g);
        const Complex rhs = inner_a21(f, dilate_adjoint(k, g));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    rows.push_back(make_row("adjoint-duality", k, 0, config.mode, worst,
                            config.mode == NumericMode::rational ? 0.0 : kFloatTol));
  }
}

void eigenfunction_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    double deviation = 0.0;
    if (config.mode == NumericMode::rational) {
      const ExactSeries image = dilate_adjoint(k, geometric_series(config.order));
      ExactSeries target = geometric_series(std::max<std::int64_t>(1, image.order()));
      target.scale(Rational(1) / Rational(k));
      target.scale_radical(k);  // k^(-1/2) = sqrt(k)/k
      deviation = exact_series_deviation(image, target);
    } else {
      const FloatSeries image = dilate_adjoint(k, to_float(geometric_series(config.order)));
      const double scale = 1.0 / std::sqrt(static_cast<double>(k));
      double worst = 0.0;
      for (std::int64_t n = 0; n < image.order(); ++n)
        worst = std::max(worst, std::abs(image.coeff(n) - scale));
      deviation = worst;
    }
    rows.push_back(make_row("eigenfunction", k, 0, config.mode, deviation,
                            config.mode == NumericMode::rational ? 0.0 : kFloatTol));
  }
}

void invariance_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  const std::int64_t n_cap = std::min<std::int64_t>(30, config.order);
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    double worst = 0.0;
    for (std::int64_t n = 0; n <= n_cap; ++n) {
      // Pad so the window of the image index is fully covered.
      const std::int64_t source = window_index(k, n);
      const std::int64_t pad =
          std::max<std::int64_t>(n + 1, source >= 0 ? k * source + 2 * k - 1 : 0);
      const ExactSeries image = dilate_adjoint(k, exact_monomial(n, pad));
      for (std::int64_t i = n + 1; i < image.order(); ++i) {
        if (!image.coeff(i).is_zero())
          worst = std::max(worst, std::abs(image.coeff(i).to_complex()) *
                                      std::sqrt(static_cast<double>(image.radical())));
      }
    }
    // The adjoint section never reaches below the diagonal.
    const SectionMatrix sec = finite_section(k, 40, OperatorSide::adjoint);
    for (std::int64_t r = 0; r < sec.dim; ++r)
      for (std::int64_t c = 0; c < r; ++c)
        worst = std::max(worst, std::abs(sec.entries(r, c)));
    rows.push_back(make_row("invariant-subspace", k, 0, config.mode, worst, 0.0));
  }
}

void projection_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  const std::int64_t dim = std::min<std::int64_t>(40, std::max<std::int64_t>(4, config.order));
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    double deviation;
    if (config.mode == NumericMode::rational) {
      const Rational defect = projection_defect_exact(k, dim);
      deviation = defect == 0 ? 0.0 : std::max(std::sqrt(defect.get_d()), kNonzeroFloor);
    } else {
      deviation = projection_defect(k, dim);
    }
    rows.push_back(make_row("projection", k, 0, config.mode, deviation,
                            config.mode == NumericMode::rational ? 0.0 : kFloatTol));
  }
}

void leading_index_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed + 4);
  std::uniform_int_distribution<std::int64_t> prefix(0, 20);
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    double worst = 0.0;
    for (int t = 0; t < std::max(1, config.trials / 4); ++t) {
      const std::int64_t zeros = prefix(rng);
      ExactSeries f = random_exact_series(rng, zeros + 10);
      for (std::int64_t n = 0; n < zeros; ++n) f.coeff(n) = RationalComplex();
      f.coeff(zeros) = RationalComplex(Rational(1));  // pin a nonzero leader
      const auto [low, image_low] = leading_index(k, f);
      if (low != zeros || image_low != k * zeros + k - 1) worst = 1.0;
    }
    rows.push_back(make_row("leading-index", k, 0, config.mode, worst, 0.0));
  }
}

void section_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  const std::int64_t dim = 60;
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    const SectionMatrix fw = finite_section(k, dim, OperatorSide::forward);
    const SectionMatrix adj = finite_section(k, dim, OperatorSide::adjoint);

    // Oracle: entries through the coefficient action and the inner product.
    double worst = 0.0;
    for (std::int64_t n = 0; n < dim; ++n) {
      FloatSeries basis_n = FloatSeries::zero(n + 1);
      basis_n.coeff(n) = std::sqrt((static_cast<double>(n) + 1.0) *
                                   (static_cast<double>(n) + 2.0) / 2.0);
      const FloatSeries image = dilate(k, basis_n);
      for (std::int64_t m = 0; m < dim; ++m) {
        FloatSeries basis_m = FloatSeries::zero(m + 1);
        basis_m.coeff(m) = std::sqrt((static_cast<double>(m) + 1.0) *
                                     (static_cast<double>(m) + 2.0) / 2.0);
        const Complex oracle_entry = inner_a21(image, basis_m);
        worst = std::max(worst, std::abs(fw.entries(m, n) - oracle_entry));
      }
    }
    rows.push_back(make_row("section-oracle", k, 0, NumericMode::float64, worst, kFloatTol));

    const double transpose_dev =
        (adj.entries - fw.entries.transpose()).cwiseAbs().maxCoeff();
    rows.push_back(
        make_row("section-adjoint-transpose", k, 0, NumericMode::float64, transpose_dev, 0.0));
  }
}

// ---- family suite -----------------------------------------------------------

void family_structure_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  for (std::int64_t k = 2; k <= std::max<std::int64_t>(2, config.k_max); ++k) {
    const ExactSeries s = sawtooth_series(k, config.order);
    double worst = 0.0;
    for (std::int64_t n = 0; n + k < s.order(); ++n)
      if (s.coeff(n) != s.coeff(n + k)) worst = 1.0;
    for (std::int64_t aligned = k; aligned - 1 < s.order(); aligned += k)
      if (!s.coeff(aligned - 1).is_zero()) worst = 1.0;
    rows.push_back(make_row("sawtooth-periodicity", k, 0, NumericMode::rational, worst, 0.0));

    const ExactSeries by_derivative = derivative(log_ratio_series(k, config.order + 1));
    const ExactSeries direct = log_derivative_series(k, config.order);
    rows.push_back(make_row("derivative-bridge", k, 0, NumericMode::rational,
                            exact_series_deviation(by_derivative, direct), 0.0));

    ExactSeries bridged = mul_one_minus_z(sawtooth_series(k, config.order));
    bridged.scale(Rational(k));
    double bridge_dev = 0.0;
    for (std::int64_t n = 0; n < config.order; ++n) {
      if (bridged.coeff(n) != direct.coeff(n))
        bridge_dev =
            std::max(bridge_dev, std::abs((bridged.coeff(n) - direct.coeff(n)).to_complex()));
    }
    rows.push_back(
        make_row("sawtooth-bridge", k, 0, NumericMode::rational, bridge_dev, 0.0));
  }

  // Closed-form evaluation of the sawtooth series off the real axis.
  const std::int64_t eval_order = std::max<std::int64_t>(config.order, 64);
  const Complex points[] = {{0.1, 0.0}, {0.0, 0.3}, {-0.25, 0.0}};
  for (std::int64_t k = 2; k <= std::min<std::int64_t>(10, config.k_max); ++k) {
    const FloatSeries s = to_float(sawtooth_series(k, eval_order));
    double worst = 0.0;
    double tol = kFloatTol;
    for (const Complex z : points) {
      const Complex zk = std::pow(z, static_cast<double>(k));
      const Complex numer = 1.0 / (1.0 - z) -
                            static_cast<double>(k) * std::pow(z, static_cast<double>(k - 1)) /
                                (1.0 - zk);
      const Complex closed = numer / ((1.0 - z) * static_cast<double>(k));
      worst = std::max(worst, std::abs(evaluate(s, z) - closed));
      const double az = std::abs(z);
      tol = std::max(tol, std::pow(az, static_cast<double>(eval_order)) / (1.0 - az) + kFloatTol);
    }
    rows.push_back(make_row("sawtooth-closed-form", k, 0, NumericMode::float64, worst, tol));
  }
}

void psi_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed + 5);
  std::uniform_int_distribution<std::int64_t> length(1, 500);
  double iso_worst = 0.0;
  double round_worst = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const WeightedSequence f = random_weighted_sequence(rng, length(rng));
    const ExactSeries image = embed_sequence(f);
    const Rational lhs = weighted_norm_sq(f);
    const Rational rhs = norm_a21_sq(image);
    if (lhs != rhs)
      iso_worst =
          std::max(iso_worst, std::max(std::abs(Rational(lhs - rhs).get_d()), kNonzeroFloor));
    if (extract_sequence(image) != f) round_worst = 1.0;
  }
  rows.push_back(
      make_row("sequence-isometry", 0, 0, NumericMode::rational, iso_worst, 0.0));
  rows.push_back(
      make_row("sequence-roundtrip", 0, 0, NumericMode::rational, round_worst, 0.0));

  // The all-ones sequence maps to (1/sqrt 2) times the geometric series.
  const std::int64_t len = std::max<std::int64_t>(8, config.order);
  const WeightedSequence ones(
      std::vector<RationalComplex>(static_cast<std::size_t>(len), RationalComplex(Rational(1))));
  ExactSeries target = geometric_series(len);
  target.scale(Rational(1, 2));
  target.scale_radical(2);
  rows.push_back(make_row("sequence-geometric", 0, 0, NumericMode::rational,
                          exact_series_deviation(embed_sequence(ones), target), 0.0));
}

void series_core_rows(const VerifyConfig& config, std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(config.seed + 6);

  double conj_worst = 0.0;
  if (config.mode == NumericMode::rational) {
    for (int t = 0; t < config.trials; ++t) {
      const ExactSeries f = random_exact_series(rng, config.order / 2 + 1);
      const ExactSeries g = random_exact_series(rng, config.order / 2 + 1);
      conj_worst = std::max(conj_worst, abs_of(inner_a21(f, g) - conj(inner_a21(g, f))));
    }
  } else {
    for (int t = 0; t < config.trials; ++t) {
      const FloatSeries f = random_float_series(rng, config.order / 2 + 1);
      const FloatSeries g = random_float_series(rng, config.order / 2 + 1);
      conj_worst = std::max(conj_worst, std::abs(inner_a21(f, g) - std::conj(inner_a21(g, f))));
    }
  }
  rows.push_back(make_row("conjugate-symmetry", 0, 0, config.mode, conj_worst,
                          config.mode == NumericMode::rational ? 0.0 : kFloatTol));

  double ortho_worst = 0.0;
  for (std::int64_t m = 0; m <= 64; ++m) {
    for (std::int64_t n = 0; n <= 64; ++n) {
      if (m == n) continue;
      const ExactScalar ip = inner_a21(exact_monomial(m, 65), exact_monomial(n, 65));
      ortho_worst = std::max(ortho_worst, abs_of(ip));
    }
  }
  rows.push_back(
      make_row("monomial-orthogonality", 0, 0, NumericMode::rational, ortho_worst, 0.0));

  // Differentiation maps the Hardy norm into the Bergman norm:
  // ||G'||_B^2 <= 2 ||G||_H^2 termwise.
  double contraction_worst = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const ExactSeries g = random_exact_series(rng, config.order / 2 + 2);
    const Rational lhs = norm_a21_sq(derivative(g));
    const Rational rhs = Rational(2) * norm_h2_sq(g);
    if (lhs > rhs)
      contraction_worst = std::max(
          contraction_worst, std::max(Rational(lhs - rhs).get_d(), kNonzeroFloor));
  }
  rows.push_back(make_row("derivative-contraction", 0, 0, NumericMode::rational,
                          contraction_worst, 0.0));

  double roundtrip_worst = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const ExactSeries f = random_exact_series(rng, config.order / 2 + 1);
    const ExactSeries back = div_one_minus_z(mul_one_minus_z(f));
    for (std::int64_t n = 0; n < f.order(); ++n)
      if (back.coeff(n) != f.coeff(n)) roundtrip_worst = 1.0;
    if (!back.coeff(f.order()).is_zero()) roundtrip_worst = 1.0;
  }
  rows.push_back(make_row("one-minus-z-roundtrip", 0, 0, NumericMode::rational,
                          roundtrip_worst, 0.0));
}

}  // namespace

std::vector<CheckRow> run_operator_suite(const VerifyConfig& config) {
  std::vector<CheckRow> rows;
  semigroup_rows(config, rows);
  isometry_rows(config, rows);
  left_inverse_rows(config, rows);
  adjoint_duality_rows(config, rows);
  eigenfunction_rows(config, rows);
  invariance_rows(config, rows);
  projection_rows(config, rows);
  leading_index_rows(config, rows);
  section_rows(config, rows);
  return rows;
}

std::vector<CheckRow> run_lemma13_suite(const VerifyConfig& config) {
  std::vector<CheckRow> rows;
  for (std::int64_t k = 1; k <= config.k_max; ++k) {
    for (std::int64_t m = 2; m <= config.m_max; ++m) {
      double deviation = sawtooth_shift_identity_holds(k, m, config.order) ? 0.0 : 1.0;
      rows.push_back(make_row("sawtooth-shift", k, m, NumericMode::rational, deviation, 0.0));
    }
  }
  return rows;
}

std::vector<CheckRow> run_moment_suite(const VerifyConfig& config) {
  std::vector<CheckRow> rows;
  for (std::int64_t v = 0; v <= config.max_index; ++v) {
    for (std::int64_t n2 = 0; n2 <= config.max_index; ++n2) {
      const double moment = monomial_moment_d(v, n2);
      const double radial = oracle::radial_moment_quadrature(v, n2);
      const double disk = oracle::disk_moment_quadrature(v, n2);
      // The disk pairing carries the angular factor 2 relative to the
      // radial moment.
      const double deviation =
          std::max(std::abs(radial - moment), std::abs(disk - 2.0 * moment));
      rows.push_back(make_row("monomial-moment", v, n2, NumericMode::float64, deviation, 1e-6));
    }
  }
  return rows;
}

std::vector<CheckRow> run_family_suite(const VerifyConfig& config) {
  std::vector<CheckRow> rows;
  family_structure_rows(config, rows);
  psi_rows(config, rows);
  series_core_rows(config, rows);
  return rows;
}

std::vector<CheckRow> run_suite(const std::string& name, const VerifyConfig& config) {
  if (name == "operators") return run_operator_suite(config);
  if (name == "lemma13") return run_lemma13_suite(config);
  if (name == "moments") return run_moment_suite(config);
  if (name == "family") return run_family_suite(config);
  if (name == "all") {
    std::vector<CheckRow> rows = run_operator_suite(config);
    for (auto&& suite : {run_lemma13_suite(config), run_moment_suite(config),
                         run_family_suite(config)}) {
      rows.insert(rows.end(), suite.begin(), suite.end());
    }
    return rows;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

namespace oracle {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_01: need n >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  // Nodes of P_n on [-1, 1] by Newton from the Chebyshev initial guess.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = 0.5 * (x + 1.0);
    weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

double radial_moment_quadrature(std::int64_t v, std::int64_t n2, int n_nodes) {
  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre_01(n_nodes, nodes, weights);
  double acc = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double r = nodes[static_cast<std::size_t>(i)];
    acc += weights[static_cast<std::size_t>(i)] *
           std::pow(r, static_cast<double>(2 * (v + n2) + 1)) * (1.0 - r * r);
  }
  return 2.0 * acc;
}

double disk_moment_quadrature(std::int64_t v, std::int64_t n2, int r_nodes, int theta_nodes) {
  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre_01(r_nodes, nodes, weights);
  double acc = 0.0;
  for (int t = 0; t < theta_nodes; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / theta_nodes;
    for (int i = 0; i < r_nodes; ++i) {
      const double r = nodes[static_cast<std::size_t>(i)];
      const Complex z = std::polar(r, theta);
      const Complex zv = std::pow(z, static_cast<double>(v));
      const double integrand =
          (zv * std::conj(zv)).real() * std::pow(r * r, static_cast<double>(n2));
      // dA_1 = 2(1-r^2) * (1/pi) r dr dtheta
      acc += weights[static_cast<std::size_t>(i)] * integrand * 2.0 * (1.0 - r * r) * r;
    }
  }
  return acc * (2.0 * std::numbers::pi / theta_nodes) / std::numbers::pi;
}

}  // namespace oracle

}  // namespace bergman
