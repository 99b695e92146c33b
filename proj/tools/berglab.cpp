// berglab: numerical laboratory for the weight-1 Bergman space machinery.
//
// Subcommands:
//   verify     identity suites (operators / lemma13 / moments / family / all)
//   distance   least-squares distance from 1/(1-z) to span{s_2..s_N}
//   approx     Moebius-weighted monomial approximation residuals
//   section    finite sections of the dilation operators
//   commutant  commutant dimension of finite sections
//
// Output is CSV (default) or JSON (--output json).  CSV is timestamp-free
// and byte-stable for identical configurations; the JSON header carries a
// timestamp.  Exit status: 0 all checks passed, 1 a check failed its
// tolerance, 2 usage or I/O error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/arith.hpp"
#include "bergman/distance.hpp"
#include "bergman/operators.hpp"
#include "bergman/parallel.hpp"
#include "bergman/suites.hpp"

using bergman::NumericMode;
using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

struct Emitter {
  bool json = false;
  std::string command;
  ordered_json config;
  std::vector<std::string> columns;
  std::vector<ordered_json> rows;

  void add_row(const ordered_json& row) { rows.push_back(row); }

  void print() const {
    if (json) {
      ordered_json doc;
      doc["header"] = {{"version", 1},
                       {"command", command},
                       {"generated_at", iso_timestamp()},
                       {"config", config}};
      doc["rows"] = rows;
      std::cout << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
      std::cout << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows) {
      std::size_t i = 0;
      for (const auto& col : columns) {
        const auto& cell = row.at(col);
        if (cell.is_string())
          std::cout << cell.get<std::string>();
        else if (cell.is_boolean())
          std::cout << (cell.get<bool>() ? "true" : "false");
        else if (cell.is_number_integer())
          std::cout << cell.get<std::int64_t>();
        else
          std::cout << fmt(cell.get<double>());
        std::cout << (++i < columns.size() ? "," : "\n");
      }
    }
  }
};

std::string cache_dir_from(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("BERGLAB_CACHE_DIR")) return env;
  return {};
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const std::string& suite, const bergman::VerifyConfig& config, Emitter& out) {
  const auto rows = bergman::run_suite(suite, config);
  out.columns = {"check", "k", "m", "mode", "max_deviation", "tolerance", "pass"};
  bool all_pass = true;
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    ordered_json r;
    r["check"] = row.check;
    r["k"] = row.k;
    r["m"] = row.m;
    r["mode"] = to_string(row.mode);
    r["max_deviation"] = row.deviation;
    if (row.tolerance == 0.0)
      r["tolerance"] = "exact";
    else
      r["tolerance"] = row.tolerance;
    r["pass"] = row.pass;
    out.add_row(r);
  }
  out.print();
  return all_pass ? 0 : 1;
}

// ---- distance -------------------------------------------------------------

int cmd_distance(const std::vector<std::int64_t>& n_list, const bergman::GramSpec& spec,
                 const std::string& cache_dir, int threads, bool timing, Emitter& out) {
  const bergman::EntryCache cache{std::filesystem::path(cache_dir)};
  if (!cache_dir.empty()) {
    // Fail early on unwritable cache directories.
    const auto probe = std::filesystem::path(cache_dir) / ".write_probe";
    std::FILE* f = std::fopen(probe.c_str(), "w");
    if (f == nullptr) {
      std::cerr << "error: cache directory '" << cache_dir << "' is not writable\n";
      return 2;
    }
    std::fclose(f);
    std::filesystem::remove(probe);
  }

  const auto start = std::chrono::steady_clock::now();
  const auto reports =
      bergman::distance_curve(n_list, spec, cache.enabled() ? &cache : nullptr, threads);
  // wall_ms is optional so that the default CSV is byte-stable across reruns.
  out.columns = {"N", "distance_sq", "solver", "ridge_lambda", "error_budget"};
  if (timing) out.columns.push_back("wall_ms");
  for (const auto& report : reports) {
    const auto elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    ordered_json r;
    r["N"] = report.n_max;
    r["distance_sq"] = report.distance_sq;
    r["solver"] = report.solver == bergman::SolverKind::cholesky ? "cholesky" : "ridge";
    r["ridge_lambda"] = report.ridge_lambda;
    r["error_budget"] = report.error_budget;
    if (timing) r["wall_ms"] = elapsed;
    out.add_row(r);
  }
  out.print();
  return 0;
}

// ---- approx -------------------------------------------------------------

int cmd_approx(std::int64_t m, const std::vector<std::int64_t>& k_list, std::int64_t trunc,
               Emitter& out) {
  std::int64_t limit = trunc - 1;
  for (const std::int64_t K : k_list) limit = std::max(limit, K);
  const bergman::FactorTable table(limit);
  out.columns = {"m",          "K",           "trunc", "residual_h2", "residual_a21",
                 "tail_h2_sq", "tail_a21_sq", "bound", "mertens"};
  for (const std::int64_t K : k_list) {
    const auto report = bergman::monomial_approx_residual(m, K, trunc, table);
    ordered_json r;
    r["m"] = report.m;
    r["K"] = report.k_max;
    r["trunc"] = report.trunc;
    r["residual_h2"] = report.residual_h2;
    r["residual_a21"] = report.residual_a21;
    r["tail_h2_sq"] = report.tail_h2_sq;
    r["tail_a21_sq"] = report.tail_a21_sq;
    r["bound"] = report.bound;
    r["mertens"] = report.mertens;
    out.add_row(r);
  }
  out.print();
  return 0;
}

// ---- section -------------------------------------------------------------

int cmd_section(std::int64_t k, std::int64_t dim, bool adjoint, Emitter& out) {
  const auto section = bergman::finite_section(
      k, dim, adjoint ? bergman::OperatorSide::adjoint : bergman::OperatorSide::forward);

  std::int64_t nonzeros = 0;
  std::int64_t populated_columns = 0;
  for (std::int64_t c = 0; c < dim; ++c) {
    bool any = false;
    for (std::int64_t r = 0; r < dim; ++r) {
      if (section.entries(r, c) != 0.0) {
        ++nonzeros;
        any = true;
      }
    }
    if (any) ++populated_columns;
  }

  if (out.json) {
    ordered_json doc;
    doc["header"] = {{"version", 1},
                     {"command", "section"},
                     {"generated_at", iso_timestamp()},
                     {"config", out.config}};
    ordered_json matrix = ordered_json::array();
    for (std::int64_t r = 0; r < dim; ++r) {
      ordered_json row = ordered_json::array();
      for (std::int64_t c = 0; c < dim; ++c) row.push_back(section.entries(r, c));
      matrix.push_back(row);
    }
    doc["matrix"] = matrix;
    doc["sparsity"] = {{"nonzeros", nonzeros}, {"populated_columns", populated_columns}};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (std::int64_t r = 0; r < dim; ++r) {
      for (std::int64_t c = 0; c < dim; ++c)
        std::cout << fmt(section.entries(r, c)) << (c + 1 < dim ? "," : "\n");
    }
    std::cerr << "section k=" << k << " dim=" << dim
              << " side=" << (adjoint ? "adjoint" : "forward") << " nonzeros=" << nonzeros
              << " populated_columns=" << populated_columns << '\n';
  }
  return 0;
}

// ---- commutant -------------------------------------------------------------

int cmd_commutant(std::int64_t dim, std::int64_t k_max, bool sweep, Emitter& out) {
  out.columns = {"dim", "k_max", "solution_dimension", "residual", "tolerance"};
  const std::int64_t first = sweep ? 1 : k_max;
  for (std::int64_t k = first; k <= k_max; ++k) {
    const auto report = bergman::commutant_experiment(dim, k);
    ordered_json r;
    r["dim"] = report.dim;
    r["k_max"] = report.k_max;
    r["solution_dimension"] = report.solution_dimension;
    r["residual"] = report.residual;
    r["tolerance"] = report.tolerance;
    out.add_row(r);
  }
  out.print();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for dilation operators on the weight-1 Bergman space"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "csv";
  app.add_option("--output", output, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite = "all";
  bergman::VerifyConfig vconfig;
  std::string mode = "rational";
  verify->add_option("--suite", suite, "all|operators|lemma13|moments|family")
      ->check(CLI::IsMember({"all", "operators", "lemma13", "moments", "family"}))
      ->capture_default_str();
  verify->add_option("--k-max", vconfig.k_max, "largest operator index")->capture_default_str();
  verify->add_option("--m-max", vconfig.m_max, "largest sawtooth index (lemma13)")
      ->capture_default_str();
  verify->add_option("--order", vconfig.order, "series truncation order")->capture_default_str();
  verify->add_option("--trials", vconfig.trials, "random trials per check")
      ->capture_default_str();
  verify->add_option("--max-index", vconfig.max_index, "largest moment index")
      ->capture_default_str();
  verify->add_option("--mode", mode, "rational|float64")
      ->check(CLI::IsMember({"rational", "float64"}))
      ->capture_default_str();
  verify->add_option("--seed", vconfig.seed, "PRNG seed for random checks")
      ->capture_default_str();

  auto* distance = app.add_subcommand("distance", "distance from 1/(1-z) to the sawtooth span");
  std::int64_t n_max = 0;
  std::vector<std::int64_t> n_list;
  std::string precision = "digamma";
  std::int64_t truncation = 1'000'000;
  std::string cache_flag;
  int threads = bergman::default_thread_count();
  distance->add_option("--n-max", n_max, "emit all N = 2..n_max");
  distance->add_option("--n-list", n_list, "explicit strictly increasing N values")
      ->delimiter(',');
  distance->add_option("--precision", precision, "digamma|direct")
      ->check(CLI::IsMember({"digamma", "direct"}))
      ->capture_default_str();
  distance->add_option("--truncation", truncation, "direct-mode truncation")
      ->capture_default_str();
  distance->add_option("--cache-dir", cache_flag,
                       "entry cache directory (or BERGLAB_CACHE_DIR)");
  distance->add_option("--threads", threads, "worker threads")->capture_default_str();
  bool timing = false;
  distance->add_flag("--timing", timing, "append a wall_ms column (breaks byte-stability)");

  auto* approx = app.add_subcommand("approx", "monomial approximation residuals");
  std::int64_t approx_m = 1;
  std::vector<std::int64_t> k_list{10, 100, 1000};
  std::int64_t trunc = 100'000;
  approx->add_option("--m", approx_m, "monomial exponent")->capture_default_str();
  approx->add_option("--k-list", k_list, "family cutoffs K")
      ->delimiter(',')
      ->capture_default_str();
  approx->add_option("--trunc", trunc, "coefficient truncation")->capture_default_str();

  auto* section = app.add_subcommand("section", "dump a finite section matrix");
  std::int64_t sec_k = 2;
  std::int64_t sec_dim = 8;
  bool adjoint = false;
  section->add_option("--k", sec_k, "operator index")->capture_default_str();
  section->add_option("--dim", sec_dim, "section dimension")->capture_default_str();
  section->add_flag("--adjoint", adjoint, "dump the adjoint section");

  auto* commutant = app.add_subcommand("commutant", "finite-section commutant experiment");
  std::int64_t com_dim = 8;
  std::int64_t com_kmax = 4;
  bool sweep = false;
  commutant->add_option("--dim", com_dim, "matrix dimension")->capture_default_str();
  commutant->add_option("--k-max", com_kmax, "largest operator index")->capture_default_str();
  commutant->add_flag("--sweep", sweep, "emit one row per k_max' = 1..k_max");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Emitter out;
  out.json = output == "json";

  try {
    if (verify->parsed()) {
      vconfig.mode = mode == "rational" ? NumericMode::rational : NumericMode::float64;
      out.command = "verify";
      out.config = {{"suite", suite},
                    {"k_max", vconfig.k_max},
                    {"m_max", vconfig.m_max},
                    {"order", vconfig.order},
                    {"trials", vconfig.trials},
                    {"max_index", vconfig.max_index},
                    {"mode", mode},
                    {"seed", vconfig.seed}};
      return cmd_verify(suite, vconfig, out);
    }
    if (distance->parsed()) {
      if (n_list.empty()) {
        if (n_max < 2) {
          std::cerr << "error: provide --n-max >= 2 or --n-list\n";
          return 2;
        }
        for (std::int64_t n = 2; n <= n_max; ++n) n_list.push_back(n);
      }
      bergman::GramSpec spec;
      spec.mode = precision == "digamma" ? bergman::GramPrecision::digamma
                                         : bergman::GramPrecision::direct;
      spec.truncation = truncation;
      const std::string cache_dir = cache_dir_from(cache_flag);
      out.command = "distance";
      out.config = {{"n_list_size", static_cast<std::int64_t>(n_list.size())},
                    {"precision", precision},
                    {"truncation", spec.mode == bergman::GramPrecision::direct ? truncation : 0},
                    {"cache_dir", cache_dir},
                    {"threads", threads}};
      return cmd_distance(n_list, spec, cache_dir, threads, timing, out);
    }
    if (approx->parsed()) {
      out.command = "approx";
      out.config = {{"m", approx_m}, {"k_list", k_list}, {"trunc", trunc}};
      return cmd_approx(approx_m, k_list, trunc, out);
    }
    if (section->parsed()) {
      out.command = "section";
      out.config = {{"k", sec_k}, {"dim", sec_dim}, {"adjoint", adjoint}};
      return cmd_section(sec_k, sec_dim, adjoint, out);
    }
    if (commutant->parsed()) {
      out.command = "commutant";
      out.config = {{"dim", com_dim}, {"k_max", com_kmax}, {"sweep", sweep}};
      return cmd_commutant(com_dim, com_kmax, sweep, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
