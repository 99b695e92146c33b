#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "bergman/digamma.hpp"
#include "bergman/distance.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
const double kLn2 = std::log(2.0);

GramSpec digamma_spec() { return GramSpec{GramPrecision::digamma, 0}; }
GramSpec direct_spec(std::int64_t M) { return GramSpec{GramPrecision::direct, M}; }

}  // namespace

TEST_CASE("digamma at classical points") {
  CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-14);
  CHECK(std::abs(digamma(0.5) + kEulerGamma + 2.0 * kLn2) < 1e-14);
  CHECK(std::abs(digamma(2.0) - (1.0 - kEulerGamma)) < 1e-14);
  CHECK(std::abs(digamma(0.25) + kEulerGamma + 3.0 * kLn2 + std::numbers::pi / 2.0) < 1e-13);
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-1.5), std::domain_error);
}

TEST_CASE("digamma differences match direct summation") {
  // sum_{t<T} [1/(t+a) - 1/(t+b)] -> digamma(b) - digamma(a), tail <= (b-a)/T.
  const std::int64_t T = 10'000'000;
  for (double a : {0.125, 0.4, 0.9}) {
    for (double gap : {0.1, 0.5, 1.0}) {
      const double direct = test_oracle::harmonic_difference(a, a + gap, T);
      const double via_digamma = digamma(a + gap) - digamma(a);
      CHECK(std::abs(direct - via_digamma) < gap / static_cast<double>(T) + 1e-12);
    }
  }
}

TEST_CASE("gram entries: closed forms for period 2") {
  // ||s_2||^2 = (1/2) ln 2 and <s_2, 1/(1-z)> = ln 2 by telescoping.
  const EntryResult g22 = gram_entry(2, 2, digamma_spec());
  CHECK(std::abs(g22.value - 0.5 * kLn2) < 1e-13);
  const EntryResult r2 = rhs_entry(2, digamma_spec());
  CHECK(std::abs(r2.value - kLn2) < 1e-13);

  const EntryResult g22_direct = gram_entry(2, 2, direct_spec(1'000'000));
  CHECK(std::abs(g22_direct.value - 0.5 * kLn2) <= g22_direct.tail.tail_bound);
  CHECK(g22_direct.tail.tail_bound == doctest::Approx(2.0 / 1'000'001.0));
  const EntryResult r2_direct = rhs_entry(2, direct_spec(1'000'000));
  CHECK(std::abs(r2_direct.value - kLn2) <= r2_direct.tail.tail_bound);
}

TEST_CASE("rhs entries obey the closed form 2 ln(k)/k") {
  // <s_k, 1/(1-z)> = 2 sum_j {j/k}/(j(j+1)) = 2 ln(k)/k, an independent
  // closed-form oracle for the digamma machinery.
  for (std::int64_t k : {2, 3, 5, 7, 12, 20, 50}) {
    const double law = 2.0 * std::log(static_cast<double>(k)) / static_cast<double>(k);
    CHECK(std::abs(rhs_entry(k, digamma_spec()).value - law) < 1e-13);
  }
}

TEST_CASE("frozen digamma-mode regression values") {
  CHECK(gram_entry(3, 3, digamma_spec()).value ==
        doctest::Approx(0.35391661983514394).epsilon(1e-12));
  CHECK(gram_entry(2, 3, digamma_spec()).value ==
        doctest::Approx(0.21261784560530914).epsilon(1e-12));
  CHECK(rhs_entry(20, digamma_spec()).value ==
        doctest::Approx(0.2995732273553991).epsilon(1e-12));
}

TEST_CASE("gram entries are symmetric and positive") {
  for (std::int64_t j = 2; j <= 8; ++j) {
    for (std::int64_t k = j; k <= 8; ++k) {
      const double a = gram_entry(j, k, digamma_spec()).value;
      const double b = gram_entry(k, j, digamma_spec()).value;
      CHECK(a == b);  // identical summation order
      CHECK(a > 0.0);
    }
    CHECK(rhs_entry(j, digamma_spec()).value > 0.0);
  }
}

TEST_CASE("direct and digamma methods agree within the certificate") {
  const std::int64_t M = 1'000'000;
  for (std::int64_t j = 2; j <= 6; ++j) {
    for (std::int64_t k = j; k <= 6; ++k) {
      const EntryResult direct = gram_entry(j, k, direct_spec(M));
      const EntryResult exact = gram_entry(j, k, digamma_spec());
      CHECK(std::abs(direct.value - exact.value) <= direct.tail.tail_bound + 1e-10);
    }
  }
}

TEST_CASE("build_gram shapes and positive definiteness") {
  const GramSystem tiny = build_gram(2, digamma_spec());
  REQUIRE(tiny.gram.rows() == 1);
  CHECK(std::abs(tiny.gram(0, 0) - 0.5 * kLn2) < 1e-13);
  CHECK(std::abs(tiny.rhs(0) - kLn2) < 1e-13);

  const GramSystem sys = build_gram(3, digamma_spec());
  REQUIRE(sys.gram.rows() == 2);
  CHECK(sys.gram(0, 1) == sys.gram(1, 0));

  const GramSystem big = build_gram(100, digamma_spec(), nullptr, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(big.gram);
  CHECK(eig.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("distance anchor: d_2^2 = 2 - 2 ln 2") {
  const double expected = 2.0 - 2.0 * kLn2;

  const DistanceReport digamma_report = solve_distance(build_gram(2, digamma_spec()));
  CHECK(std::abs(digamma_report.distance_sq - expected) < 1e-9);
  CHECK(digamma_report.solver == SolverKind::cholesky);

  const DistanceReport direct_report = solve_distance(build_gram(2, direct_spec(1'000'000)));
  CHECK(std::abs(direct_report.distance_sq - expected) < 1e-3);
}

TEST_CASE("distance decreases with the family size; Pythagoras holds") {
  const DistanceReport d2 = solve_distance(build_gram(2, digamma_spec()));
  const DistanceReport d3 = solve_distance(build_gram(3, digamma_spec()));
  CHECK(d3.distance_sq <= d2.distance_sq);
  CHECK(d3.distance_sq > 0.0);

  const GramSystem sys = build_gram(12, digamma_spec());
  const DistanceReport report = solve_distance(sys);
  const double projection = sys.rhs.dot(report.coefficients);
  CHECK(std::abs(report.distance_sq + projection - geometric_norm_sq) < 1e-10);
}

TEST_CASE("distance curve shares the build and stays monotone") {
  const std::vector<std::int64_t> ns{2, 3, 5, 8, 13, 20};
  const auto curve = distance_curve(ns, digamma_spec());
  REQUIRE(curve.size() == ns.size());
  const DistanceReport single = solve_distance(build_gram(2, digamma_spec()));
  CHECK(curve[0].distance_sq == doctest::Approx(single.distance_sq).epsilon(1e-14));
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].distance_sq <= curve[i - 1].distance_sq);
    CHECK(curve[i].distance_sq > 0.0);
  }
  CHECK_THROWS_AS(distance_curve({5, 3}, digamma_spec()), std::invalid_argument);
}

TEST_CASE("solver edge paths: ridge fallback, clamping, non-finite rejection") {
  // Singular Gram matrix (duplicated generator) forces the ridge path; with
  // unit entries the pivot cancellation is exact in binary.
  GramSystem singular;
  singular.n_max = 3;
  singular.gram = Eigen::MatrixXd::Constant(2, 2, 1.0);
  singular.rhs = Eigen::VectorXd::Constant(2, 0.25);
  const DistanceReport ridge_report = solve_distance(singular);
  CHECK(ridge_report.solver == SolverKind::ridge);
  CHECK(ridge_report.ridge_lambda > 0.0);
  CHECK(ridge_report.distance_sq >= 0.0);

  // A right-hand side larger than the norm budget drives the raw value
  // negative; the report clamps and flags it.
  GramSystem inconsistent;
  inconsistent.n_max = 2;
  inconsistent.gram = Eigen::MatrixXd::Identity(1, 1);
  inconsistent.rhs = Eigen::VectorXd::Constant(1, 2.0);
  const DistanceReport clamped = solve_distance(inconsistent);
  CHECK(clamped.distance_sq == 0.0);
  CHECK(clamped.clamped);

  GramSystem broken;
  broken.n_max = 2;
  broken.gram = Eigen::MatrixXd::Constant(1, 1, std::nan(""));
  broken.rhs = Eigen::VectorXd::Zero(1);
  CHECK_THROWS_AS(solve_distance(broken), std::invalid_argument);
}

TEST_CASE("distance curve over a singular system restarts with ridge everywhere") {
  GramSystem sys;
  sys.n_max = 4;
  sys.gram = Eigen::MatrixXd::Constant(3, 3, 1.0);  // rank one, pivots cancel exactly
  sys.rhs = Eigen::VectorXd::Constant(3, 0.5);
  const auto curve = distance_curve_over(sys, {2, 3, 4});
  REQUIRE(curve.size() == 3);
  double prev = geometric_norm_sq;
  for (const auto& report : curve) {
    CHECK(report.solver == SolverKind::ridge);
    CHECK(report.ridge_lambda > 0.0);
    CHECK(report.distance_sq <= prev);
    prev = report.distance_sq;
  }
}

TEST_CASE("entry cache: roundtrip, reuse, and corruption recovery") {
  const auto dir = std::filesystem::temp_directory_path() / "bergman_cache_test";
  std::filesystem::remove_all(dir);
  const EntryCache cache(dir);

  const GramSystem first = build_gram(6, digamma_spec(), &cache);
  const GramSystem second = build_gram(6, digamma_spec(), &cache);
  CHECK((first.gram - second.gram).cwiseAbs().maxCoeff() == 0.0);
  CHECK((first.rhs - second.rhs).cwiseAbs().maxCoeff() == 0.0);

  // Tamper with one entry; the checksum must reject it and recompute.
  const CacheKey key{"gram", 2, 2, "digamma", 0};
  const auto path = dir / key.file_name();
  REQUIRE(std::filesystem::exists(path));
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"version\":1,\"garbage\":true}";
  }
  CHECK(!cache.load(key).has_value());
  const GramSystem third = build_gram(6, digamma_spec(), &cache);
  CHECK(std::abs(third.gram(0, 0) - first.gram(0, 0)) == 0.0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("monomial approximation residual: vanishing-family edge") {
  const FactorTable table(10'000);
  const ApproxReport report = monomial_approx_residual(1, 1, 10'000, table);
  // The k = 1 log-ratio series is identically zero, so the residual is
  // exactly the Hardy norm of z.
  CHECK(report.residual_h2 == 1.0);
  CHECK(report.mertens == 1.0);
}

TEST_CASE("monomial approximation residual: decay in K and the norm inequality") {
  const FactorTable table(10'000);
  for (std::int64_t m = 1; m <= 3; ++m) {
    double prev = -1.0;
    for (std::int64_t K : {10, 100, 1000}) {
      if (K < m) continue;
      const ApproxReport report = monomial_approx_residual(m, K, 10'000, table);
      CHECK(report.residual_a21 <= std::numbers::sqrt2 * report.residual_h2);
      CHECK(report.tail_a21_sq == doctest::Approx(2.0 * report.tail_h2_sq));
      if (prev >= 0.0) CHECK(report.residual_h2 < prev);
      prev = report.residual_h2;
    }
  }
}

TEST_CASE("approximation coefficients collapse to mertens/n below the cutoff") {
  // With trunc = K + 1 every stored coefficient lies in the exact
  // cancellation region, so the residual is |mertens| sqrt(sum 1/n^2).
  const FactorTable table(1'000);
  const ApproxReport report = monomial_approx_residual(1, 50, 51, table);
  const double mertens = mertens_ratio(50, table);
  long double harmonic_sq = 0.0L;
  for (int n = 1; n <= 50; ++n)
    harmonic_sq += 1.0L / (static_cast<long double>(n) * static_cast<long double>(n));
  const double expected = std::abs(mertens) * std::sqrt(static_cast<double>(harmonic_sq));
  CHECK(report.residual_h2 == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("monomial approximation residual: argument validation") {
  const FactorTable table(1'000);
  CHECK_THROWS_AS(monomial_approx_residual(0, 10, 100, table), std::invalid_argument);
  CHECK_THROWS_AS(monomial_approx_residual(3, 2, 100, table), std::invalid_argument);
  CHECK_THROWS_AS(monomial_approx_residual(1, 100, 50, table), std::invalid_argument);
  CHECK_THROWS_AS(monomial_approx_residual(1, 10, 5'000, table), std::invalid_argument);
}

TEST_CASE("divisor-count bound constant covers the scanned range") {
  // tau(n) <= 8.447 n^(1/4): the sup of tau(n)/n^(1/4) is 8.4466...,
  // attained at n = 21621600 = 2^5 3^3 5^2 7 11 13.
  const FactorTable table(1'000'000);
  double scanned_max = 0.0;
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    const double ratio =
        static_cast<double>(table.tau(n)) / std::pow(static_cast<double>(n), 0.25);
    scanned_max = std::max(scanned_max, ratio);
  }
  CHECK(scanned_max < tau_quarter_power_bound);

  const std::int64_t peak = 21'621'600;
  std::int64_t tau_peak = 1;
  std::int64_t rest = peak;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    std::int64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    tau_peak *= e + 1;
  }
  if (rest > 1) tau_peak *= 2;
  CHECK(tau_peak == 576);
  const double peak_ratio =
      static_cast<double>(tau_peak) / std::pow(static_cast<double>(peak), 0.25);
  CHECK(peak_ratio < tau_quarter_power_bound);
  CHECK(peak_ratio > 8.446);
}
