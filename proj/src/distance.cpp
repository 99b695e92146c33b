#include "bergman/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bergman/digamma.hpp"
#include "bergman/parallel.hpp"

namespace bergman {

namespace {

void check_family_index(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("gram/rhs entries are defined for k >= 2");
}

// Sum over the class n+1 == r (mod L) of 1/((n+1)(n+2)), for r = 1..L, is
// (1/L)(psi((r+1)/L) - psi(r/L)).  Weights w_r are the periodic coefficient
// products, so one pass over a period gives the full inner product.
double class_sum_digamma(std::int64_t L, const std::vector<double>& weights) {
  double acc = 0.0;
  double psi_low = digamma(1.0 / static_cast<double>(L));
  for (std::int64_t r = 1; r <= L; ++r) {
    const double psi_high = digamma(static_cast<double>(r + 1) / static_cast<double>(L));
    const double w = weights[static_cast<std::size_t>(r - 1)];
    if (w != 0.0) acc += w * (psi_high - psi_low);
    psi_low = psi_high;
  }
  return 2.0 * acc / static_cast<double>(L);
}

}  // namespace

EntryResult gram_entry(std::int64_t j, std::int64_t k, const GramSpec& spec) {
  check_family_index(j);
  check_family_index(k);
  EntryResult out;
  if (spec.mode == GramPrecision::digamma) {
    const std::int64_t L = std::lcm(j, k);
    std::vector<double> weights(static_cast<std::size_t>(L));
    for (std::int64_t r = 1; r <= L; ++r) {
      const std::int64_t rj = r % j;
      const std::int64_t rk = r % k;
      weights[static_cast<std::size_t>(r - 1)] =
          (static_cast<double>(rj) / static_cast<double>(j)) *
          (static_cast<double>(rk) / static_cast<double>(k));
    }
    out.value = class_sum_digamma(L, weights);
    out.tail = TailCertificate{0, 0.0, 0.0};
    return out;
  }
  const std::int64_t M = spec.truncation;
  if (M < 1) throw std::invalid_argument("gram_entry: direct truncation must be >= 1");
  long double acc = 0.0L;
  std::int64_t rj = 0;
  std::int64_t rk = 0;
  for (std::int64_t n = 0; n < M; ++n) {
    ++rj;
    if (rj == j) rj = 0;
    ++rk;
    if (rk == k) rk = 0;
    if (rj == 0 || rk == 0) continue;
    const long double w = (static_cast<long double>(rj) / j) * (static_cast<long double>(rk) / k);
    acc += 2.0L * w /
           (static_cast<long double>(n + 1) * static_cast<long double>(n + 2));
  }
  out.value = static_cast<double>(acc);
  out.tail = tail_bound_a21(M, 1.0);  // sawtooth coefficients lie in [0, 1)
  return out;
}

EntryResult rhs_entry(std::int64_t k, const GramSpec& spec) {
  check_family_index(k);
  EntryResult out;
  if (spec.mode == GramPrecision::digamma) {
    std::vector<double> weights(static_cast<std::size_t>(k));
    for (std::int64_t r = 1; r <= k; ++r)
      weights[static_cast<std::size_t>(r - 1)] =
          static_cast<double>(r % k) / static_cast<double>(k);
    out.value = class_sum_digamma(k, weights);
    out.tail = TailCertificate{0, 0.0, 0.0};
    return out;
  }
  const std::int64_t M = spec.truncation;
  if (M < 1) throw std::invalid_argument("rhs_entry: direct truncation must be >= 1");
  long double acc = 0.0L;
  std::int64_t rk = 0;
  for (std::int64_t n = 0; n < M; ++n) {
    ++rk;
    if (rk == k) rk = 0;
    if (rk == 0) continue;
    acc += 2.0L * (static_cast<long double>(rk) / k) /
           (static_cast<long double>(n + 1) * static_cast<long double>(n + 2));
  }
  out.value = static_cast<double>(acc);
  out.tail = tail_bound_a21(M, 1.0);
  return out;
}

namespace {

double cached_entry(const CacheKey& key, const EntryCache* cache,
                    const std::function<double()>& compute) {
  if (cache != nullptr && cache->enabled()) {
    if (auto hit = cache->load(key)) return *hit;
    const double value = compute();
    cache->store(key, value);
    return value;
  }
  return compute();
}

}  // namespace

GramSystem build_gram(std::int64_t n_max, const GramSpec& spec, const EntryCache* cache,
                      int threads) {
  if (n_max < 2) throw std::invalid_argument("build_gram: n_max must be >= 2");
  const std::int64_t dim = n_max - 1;
  GramSystem sys;
  sys.n_max = n_max;
  sys.spec = spec;
  sys.gram = Eigen::MatrixXd::Zero(dim, dim);
  sys.rhs = Eigen::VectorXd::Zero(dim);
  sys.tail = spec.mode == GramPrecision::direct ? tail_bound_a21(spec.truncation, 1.0)
                                                : TailCertificate{0, 0.0, 0.0};

  struct Task {
    std::int64_t a;  // row offset, -1 for rhs
    std::int64_t b;
  };
  std::vector<Task> tasks;
  for (std::int64_t a = 0; a < dim; ++a) {
    tasks.push_back({-1, a});
    for (std::int64_t b = a; b < dim; ++b) tasks.push_back({a, b});
  }

  const std::int64_t cache_trunc =
      spec.mode == GramPrecision::direct ? spec.truncation : 0;
  parallel_for(static_cast<std::int64_t>(tasks.size()), threads, [&](std::int64_t t) {
    const Task& task = tasks[static_cast<std::size_t>(t)];
    if (task.a < 0) {
      const std::int64_t k = task.b + 2;
      const CacheKey key{"rhs", 0, k, spec.precision_name(), cache_trunc};
      sys.rhs(task.b) =
          cached_entry(key, cache, [&] { return rhs_entry(k, spec).value; });
    } else {
      const std::int64_t j = task.a + 2;
      const std::int64_t k = task.b + 2;
      const CacheKey key{"gram", j, k, spec.precision_name(), cache_trunc};
      const double value =
          cached_entry(key, cache, [&] { return gram_entry(j, k, spec).value; });
      sys.gram(task.a, task.b) = value;
      sys.gram(task.b, task.a) = value;
    }
  });
  return sys;
}

namespace {

struct CholeskyState {
  Eigen::MatrixXd lower;     // growing lower-triangular factor
  Eigen::VectorXd forward;   // L^-1 rhs, extended row by row
  double sum_sq = 0.0;       // running |forward|^2
  double lambda = 0.0;
  std::int64_t rows = 0;

  explicit CholeskyState(std::int64_t dim)
      : lower(Eigen::MatrixXd::Zero(dim, dim)), forward(Eigen::VectorXd::Zero(dim)) {}

  // Returns false when the pivot is not positive (matrix not numerically PD).
  bool append(const GramSystem& sys) {
    const std::int64_t t = rows;
    double pivot = sys.gram(t, t) + lambda;
    for (std::int64_t c = 0; c < t; ++c) {
      double y = sys.gram(t, c);
      for (std::int64_t i = 0; i < c; ++i) y -= lower(t, i) * lower(c, i);
      y /= lower(c, c);
      lower(t, c) = y;
      pivot -= y * y;
    }
    if (!(pivot > 0.0)) return false;
    lower(t, t) = std::sqrt(pivot);
    double w = sys.rhs(t);
    for (std::int64_t i = 0; i < t; ++i) w -= lower(t, i) * forward(i);
    w /= lower(t, t);
    forward(t) = w;
    sum_sq += w * w;
    rows = t + 1;
    return true;
  }

  Eigen::VectorXd solve_coefficients() const {
    Eigen::VectorXd c(rows);
    for (std::int64_t i = rows - 1; i >= 0; --i) {
      double v = forward(i);
      for (std::int64_t j = i + 1; j < rows; ++j) v -= lower(j, i) * c(j);
      c(i) = v / lower(i, i);
    }
    return c;
  }
};

double ridge_lambda_for(const GramSystem& sys) {
  const std::int64_t dim = sys.gram.rows();
  return 1e-12 * sys.gram.trace() / static_cast<double>(dim);
}

DistanceReport report_from_state(const GramSystem& sys, const CholeskyState& state) {
  const std::int64_t t = state.rows;
  DistanceReport report;
  report.n_max = t + 1;
  report.solver = state.lambda > 0.0 ? SolverKind::ridge : SolverKind::cholesky;
  report.ridge_lambda = state.lambda;
  report.coefficients = state.solve_coefficients();
  double dist = geometric_norm_sq - state.sum_sq;
  if (dist < 0.0) {
    dist = 0.0;
    report.clamped = true;
  }
  report.distance_sq = dist;

  const auto gram_block = sys.gram.topLeftCorner(t, t);
  const auto rhs_block = sys.rhs.head(t);
  const double solver_residual =
      (gram_block * report.coefficients - rhs_block).lpNorm<Eigen::Infinity>();
  const double c1 = report.coefficients.lpNorm<1>();
  report.error_budget =
      solver_residual * (1.0 + c1) + sys.tail.tail_bound * (2.0 * c1 + c1 * c1);
  return report;
}

}  // namespace

DistanceReport solve_distance(const GramSystem& sys) {
  if (!sys.gram.allFinite() || !sys.rhs.allFinite())
    throw std::invalid_argument("solve_distance: non-finite system entries");
  const std::int64_t dim = sys.gram.rows();
  CholeskyState state(dim);
  for (std::int64_t t = 0; t < dim; ++t) {
    if (state.append(sys)) continue;
    // Restart with ridge regularization, recorded in the report.
    state = CholeskyState(dim);
    state.lambda = ridge_lambda_for(sys);
    for (std::int64_t u = 0; u <= t; ++u) {
      if (!state.append(sys))
        throw std::runtime_error("solve_distance: ridge factorization failed");
    }
  }
  return report_from_state(sys, state);
}

std::vector<DistanceReport> distance_curve(const std::vector<std::int64_t>& n_list,
                                           const GramSpec& spec, const EntryCache* cache,
                                           int threads) {
  if (n_list.empty()) return {};
  const GramSystem sys = build_gram(n_list.back(), spec, cache, threads);
  return distance_curve_over(sys, n_list);
}

std::vector<DistanceReport> distance_curve_over(const GramSystem& sys,
                                                const std::vector<std::int64_t>& n_list) {
  if (n_list.empty()) return {};
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2) throw std::invalid_argument("distance_curve: N must be >= 2");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("distance_curve: n_list must be strictly increasing");
  }
  const std::int64_t n_top = n_list.back();
  if (n_top > sys.n_max) throw std::invalid_argument("distance_curve: system too small");
  if (!sys.gram.allFinite() || !sys.rhs.allFinite())
    throw std::invalid_argument("distance_curve: non-finite system entries");

  std::vector<DistanceReport> reports;
  reports.reserve(n_list.size());
  const std::int64_t dim = n_top - 1;
  CholeskyState state(dim);
  std::size_t next_emit = 0;
  for (std::int64_t t = 0; t < dim; ++t) {
    if (!state.append(sys)) {
      // Ridge restart covers the whole curve so the sequence stays monotone.
      const double lambda = ridge_lambda_for(sys);
      state = CholeskyState(dim);
      state.lambda = lambda;
      reports.clear();
      next_emit = 0;
      for (std::int64_t u = 0; u <= t; ++u) {
        if (!state.append(sys))
          throw std::runtime_error("distance_curve: ridge factorization failed");
        while (next_emit < n_list.size() && n_list[next_emit] == u + 2) {
          reports.push_back(report_from_state(sys, state));
          ++next_emit;
        }
      }
      continue;
    }
    while (next_emit < n_list.size() && n_list[next_emit] == t + 2) {
      reports.push_back(report_from_state(sys, state));
      ++next_emit;
    }
  }
  return reports;
}

ApproxReport monomial_approx_residual(std::int64_t m, std::int64_t k_max, std::int64_t trunc,
                                      const FactorTable& table) {
  if (m < 1) throw std::invalid_argument("monomial_approx_residual: m must be >= 1");
  if (k_max < m) throw std::invalid_argument("monomial_approx_residual: need k_max >= m");
  if (trunc <= k_max) throw std::invalid_argument("monomial_approx_residual: need trunc > k_max");
  if (table.limit() < trunc - 1 || table.limit() < k_max)
    throw std::invalid_argument("monomial_approx_residual: factor table too small");

  const std::int64_t quot = k_max / m;
  const Rational mertens_exact = mertens_ratio_exact(quot, table);
  const double mertens = mertens_exact.get_d();

  // Coefficient of z^n of the combination, exactly:
  //   c_n = (mertens - m * D_n)/n + [n == m],
  // with D_n the Moebius sum over divisors k of n that are multiples of m
  // with k <= k_max.  The defining equality of the Moebius function makes
  // c_n = mertens/n for n <= k_max.
  long double h2_sq = 0.0L;
  long double a21_sq = 0.0L;
  for (std::int64_t n = 1; n < trunc; ++n) {
    std::int64_t divisor_sum = 0;
    if (n % m == 0) {
      for (std::int64_t d : table.divisors(n / m)) {
        if (d <= quot) divisor_sum += table.moebius(d);
      }
    }
    Rational q = mertens_exact - Rational(static_cast<long>(m * divisor_sum));
    double c = q.get_d() / static_cast<double>(n);
    if (n == m) c += 1.0;
    const long double c_sq = static_cast<long double>(c) * c;
    h2_sq += c_sq;
    a21_sq += c_sq * 2.0L * static_cast<long double>(n) / static_cast<long double>(n + 1);
  }

  ApproxReport report;
  report.m = m;
  report.k_max = k_max;
  report.trunc = trunc;
  report.mertens = mertens;

  // For n >= trunc: |c_n| <= |mertens|/n + m tau(n)/n, so
  //   sum |c_n|^2 <= 2 mertens^2 sum 1/n^2 + 2 m^2 sum (tau(n)/n)^2
  // with sum_{n>=T} 1/n^2 <= 1/(T-1) and, via tau(n) <= C n^(1/4),
  // sum_{n>=T} tau(n)^2/n^2 <= 2 C^2 / sqrt(T-1).
  const double T1 = static_cast<double>(trunc - 1);
  const double C = tau_quarter_power_bound;
  report.tail_h2_sq = 2.0 * mertens * mertens / T1 +
                      4.0 * static_cast<double>(m * m) * C * C / std::sqrt(T1);
  report.tail_a21_sq = 2.0 * report.tail_h2_sq;

  report.residual_h2 = std::sqrt(static_cast<double>(h2_sq));
  report.residual_a21 = std::sqrt(static_cast<double>(a21_sq));
  report.bound =
      std::sqrt(mertens * mertens + static_cast<double>(m * m) / std::sqrt(static_cast<double>(k_max)));
  return report;
}

}  // namespace bergman
