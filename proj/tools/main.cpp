// Command-line frontend: simulate paths, compute spectra, run the
// replication study, and verify the model/diagnostic invariants.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.
// stdout carries data; stderr carries the resolved configuration echo and
// diagnostics.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bmc/config.hpp"
#include "bmc/dense.hpp"
#include "bmc/diagnostics.hpp"
#include "bmc/errors.hpp"
#include "bmc/experiments.hpp"
#include "bmc/model.hpp"
#include "bmc/sampler.hpp"
#include "bmc/spectral.hpp"
#include "bmc/stats.hpp"
#include "bmc/trim.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string config_path;
  std::string alpha_text;
  std::string p_text;
  std::uint64_t seed = 1;
  int threads = 0;
};

std::vector<double> parse_decimal_list(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double value = std::stod(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw bmc::InvalidArgument("bad decimal '" + item + "'");
    out.push_back(value);
  }
  return out;
}

// Model from --config, or inline --alpha/--p (decimals, comma within a row,
// semicolon between rows). Inline flags win.
bmc::RunConfig resolve_config(const CommonOptions& common) {
  std::optional<bmc::RunConfig> config;
  if (!common.config_path.empty()) config = bmc::load_config_file(common.config_path);
  if (!common.alpha_text.empty() || !common.p_text.empty()) {
    if (common.alpha_text.empty() || common.p_text.empty()) {
      throw bmc::InvalidArgument("--alpha and --p must be given together");
    }
    const std::vector<double> alpha = parse_decimal_list(common.alpha_text, ',');
    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd alpha_vec(k);
    for (Eigen::Index i = 0; i < k; ++i) alpha_vec[i] = alpha[static_cast<std::size_t>(i)];
    Eigen::MatrixXd p(k, k);
    std::stringstream rows(common.p_text);
    std::string row_text;
    Eigen::Index r = 0;
    while (std::getline(rows, row_text, ';')) {
      const std::vector<double> row = parse_decimal_list(row_text, ',');
      if (r >= k || static_cast<Eigen::Index>(row.size()) != k) {
        throw bmc::InvalidArgument("--p must have K rows of K decimals");
      }
      for (Eigen::Index c = 0; c < k; ++c) p(r, c) = row[static_cast<std::size_t>(c)];
      ++r;
    }
    if (r != k) throw bmc::InvalidArgument("--p must have K rows of K decimals");
    bmc::RunConfig inline_config;
    if (config) inline_config = *config;
    inline_config.model = bmc::validate_model(alpha_vec, p);
    config = inline_config;
  }
  if (!config) throw bmc::InvalidArgument("no model: pass --config or --alpha/--p");
  return *config;
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BMC_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 0;  // library picks hardware concurrency
}

json model_json(const bmc::ClusterModel& model) {
  json alpha = json::array();
  for (Eigen::Index i = 0; i < model.K; ++i) alpha.push_back(model.alpha[i]);
  json p = json::array();
  for (Eigen::Index r = 0; r < model.K; ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < model.K; ++c) row.push_back(model.p(r, c));
    p.push_back(row);
  }
  return json{{"K", model.K}, {"alpha", alpha}, {"p", p}, {"eta", model.eta}};
}

void echo_config(const std::string& command, const json& resolved) {
  json doc = resolved;
  doc["command"] = command;
  std::cerr << "config " << doc.dump() << "\n";
}

std::string format_values(const Eigen::VectorXd& values) {
  std::string out;
  char buffer[64];
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    std::snprintf(buffer, sizeof(buffer), i + 1 < values.size() ? "%.12g " : "%.12g", values[i]);
    out += buffer;
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_simulate(const CommonOptions& common, Eigen::Index n, std::int64_t T,
                 const std::string& out_path) {
  const bmc::RunConfig config = resolve_config(common);
  const bmc::BmcInstance instance = bmc::build_instance(config.model, n);
  echo_config("simulate", json{{"model", model_json(config.model)},
                               {"n", n},
                               {"T", T},
                               {"seed", common.seed},
                               {"out", out_path}});
  const bmc::PathCounts counts = bmc::sample_path_counts(instance, T, common.seed);
  if (out_path == "-") {
    bmc::write_counts(counts, std::cout);
  } else {
    bmc::write_counts_file(counts, out_path);
    std::cerr << "wrote " << counts.counts.nonZeros() << " nonzeros to " << out_path << "\n";
  }
  return 0;
}

int cmd_spectrum(const CommonOptions& common, Eigen::Index n, std::int64_t T,
                 const std::string& trim_text, int k, double tol, int max_iter, bool dense) {
  bmc::RunConfig config = resolve_config(common);
  if (k > 0) config.top_k = k;
  if (tol > 0) config.solver.tol = tol;
  if (max_iter > 0) config.solver.max_iter = max_iter;
  const bmc::TrimPolicy policy = bmc::TrimPolicy::parse(trim_text);

  const bmc::BmcInstance instance = bmc::build_instance(config.model, n);
  echo_config("spectrum", json{{"model", model_json(config.model)},
                               {"n", n},
                               {"T", T},
                               {"seed", common.seed},
                               {"trim", policy.to_string()},
                               {"k", config.top_k},
                               {"tol", config.solver.tol},
                               {"max_iter", config.solver.max_iter},
                               {"dense", dense}});

  const bmc::PathCounts counts = bmc::sample_path_counts(instance, T, common.seed);
  const Eigen::Index m = policy.resolve(n, T);
  const bmc::PathCounts trimmed =
      m > 0 ? bmc::apply_trim(counts, bmc::trim_set(counts, m)) : counts;

  const int top_k = std::min<int>(config.top_k, static_cast<int>(n));
  Eigen::VectorXd centered_values, counts_values;
  if (dense) {
    const Eigen::MatrixXd counts_dense = bmc::dense_counts(trimmed);
    const Eigen::MatrixXd expected = bmc::dense_expected(instance, T);
    centered_values =
        Eigen::BDCSVD<Eigen::MatrixXd>(counts_dense - expected).singularValues().head(top_k);
    counts_values = Eigen::BDCSVD<Eigen::MatrixXd>(counts_dense).singularValues().head(top_k);
  } else {
    const bmc::CenteredOperator op(trimmed, instance, T);
    centered_values = bmc::top_singular_values(op, top_k, config.solver).values;
    counts_values =
        bmc::top_singular_values(bmc::SparseOperator(trimmed.counts), top_k, config.solver)
            .values;
  }
  const bmc::ExpectedSpectrum expected = bmc::expected_spectrum(instance, T);

  char buffer[64];
  std::cout << "m " << m << "\n";
  std::cout << "sigma_centered " << format_values(centered_values) << "\n";
  std::cout << "sigma_counts " << format_values(counts_values) << "\n";
  std::cout << "sigma_expected " << format_values(expected.singular_values) << "\n";
  std::snprintf(buffer, sizeof(buffer), "%.12g",
                T > 0 ? std::sqrt(static_cast<double>(n) / static_cast<double>(T)) *
                            centered_values[0]
                      : 0.0);
  std::cout << "scaled_norm " << buffer << "\n";
  std::snprintf(buffer, sizeof(buffer), "%.12g", bmc::row_lower_bound(counts, instance, T));
  std::cout << "row_lower_bound " << buffer << "\n";
  return 0;
}

int cmd_experiment(const CommonOptions& common, const std::string& regimes_text,
                   const std::string& grid_text, int replications, const std::string& trim_text,
                   double tol, int max_iter, const std::string& out_path,
                   const std::string& samples_path) {
  bmc::RunConfig config = resolve_config(common);
  if (tol > 0) config.solver.tol = tol;
  if (max_iter > 0) config.solver.max_iter = max_iter;

  const std::vector<double> regimes = parse_decimal_list(regimes_text, ',');
  const std::vector<double> grid_raw = parse_decimal_list(grid_text, ',');
  if (regimes.empty() || grid_raw.empty()) {
    throw bmc::InvalidArgument("need at least one regime and one grid point");
  }
  std::vector<Eigen::Index> grid;
  for (const double v : grid_raw) grid.push_back(static_cast<Eigen::Index>(v));
  const bmc::TrimPolicy policy = bmc::TrimPolicy::parse(trim_text);

  echo_config("experiment", json{{"model", model_json(config.model)},
                                 {"regimes", regimes},
                                 {"n_grid", grid_raw},
                                 {"replications", replications},
                                 {"trim", policy.to_string()},
                                 {"base_seed", common.seed},
                                 {"tol", config.solver.tol},
                                 {"max_iter", config.solver.max_iter},
                                 {"threads", resolve_threads(common.threads)},
                                 {"out", out_path},
                                 {"samples_out", samples_path}});

  std::vector<bmc::ReplicationStats> all;
  for (const double a : regimes) {
    bmc::RegimeSpec spec;
    spec.exponent = a;
    spec.n_grid = grid;
    spec.replications = replications;
    spec.trim_policy = policy;
    spec.base_seed = common.seed;
    spec.solver = config.solver;
    auto stats = bmc::run_regime(config.model, spec, resolve_threads(common.threads));
    all.insert(all.end(), stats.begin(), stats.end());
  }

  if (out_path == "-") {
    bmc::emit_csv(all, std::cout);
  } else {
    bmc::emit_csv_file(all, out_path);
    std::cerr << "wrote " << all.size() << " rows to " << out_path << "\n";
  }
  if (!samples_path.empty()) bmc::emit_samples_csv_file(all, samples_path);
  return 0;
}

int cmd_mixing(const CommonOptions& common, Eigen::Index n, int t_max, int i_max) {
  const bmc::RunConfig config = resolve_config(common);
  const bmc::BmcInstance instance = bmc::build_instance(config.model, n);
  echo_config("mixing", json{{"model", model_json(config.model)},
                             {"n", n},
                             {"t_max", t_max},
                             {"i_max", i_max}});
  const bmc::MixingReport report = bmc::mixing_report(instance, t_max, i_max, {0.5, 0.25, 0.125});
  char buffer[64];
  for (std::size_t t = 0; t < report.d_values.size(); ++t) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", report.d_values[t]);
    std::cout << "d " << t << " " << buffer << "\n";
  }
  for (const auto& [eps, t] : report.t_mix) {
    std::snprintf(buffer, sizeof(buffer), "%g", eps);
    std::cout << "t_mix " << buffer << " " << t << "\n";
  }
  std::snprintf(buffer, sizeof(buffer), "%.12g", report.gamma_ps);
  std::cout << "gamma_ps " << buffer << "\n";
  std::snprintf(buffer, sizeof(buffer), "%.12g", report.eta);
  std::cout << "eta " << buffer << "\n";
  std::cout << "geometric_bound_ok " << (report.geometric_bound_ok ? 1 : 0) << "\n";
  return 0;
}

struct Check {
  std::string name;
  bool ok;
  bool hard;
  std::string detail;
};

int cmd_verify(const CommonOptions& common, Eigen::Index n, std::int64_t T, bool machine,
               std::int64_t subset_budget, double d1, double d2, double degree_b) {
  const bmc::RunConfig config = resolve_config(common);
  const bmc::BmcInstance instance = bmc::build_instance(config.model, n);
  if (T <= 0) T = bmc::regime_path_length(n, 1.0);
  if (degree_b <= 0) degree_b = bmc::default_degree_constant(config.model);
  echo_config("verify", json{{"model", model_json(config.model)},
                             {"n", n},
                             {"T", T},
                             {"seed", common.seed},
                             {"subset_budget", subset_budget},
                             {"d1", d1},
                             {"d2", d2},
                             {"degree_b", degree_b}});

  std::vector<Check> checks;
  char buffer[160];
  const auto add = [&](const std::string& name, bool ok, bool hard, const std::string& detail) {
    checks.push_back({name, ok, hard, detail});
  };

  // Stationarity identities.
  {
    const double pi_residual =
        (config.model.pi.transpose() * config.model.p - config.model.pi.transpose())
            .cwiseAbs()
            .maxCoeff();
    add("pi_residual", pi_residual <= 1e-12, true, std::to_string(pi_residual));
    const Eigen::VectorXd pi_n = instance.stationary_vector();
    double worst = std::fabs(pi_n.sum() - 1.0);
    if (n <= 2000) {
      const Eigen::MatrixXd p_dense = bmc::dense_transition(instance);
      worst = std::max(worst,
                       (pi_n.transpose() * p_dense - pi_n.transpose()).cwiseAbs().maxCoeff());
    }
    add("stationary_residual", worst <= 1e-12, true, std::to_string(worst));
  }

  // Entry bounds for the expected matrix; guaranteed once n clears the
  // floor-rule distortion, reported below that.
  {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (Eigen::Index a = 0; a < config.model.K; ++a) {
      for (Eigen::Index b = 0; b < config.model.K; ++b) {
        const double limit = config.model.pi[a] * config.model.p(a, b) /
                             (config.model.alpha[a] * config.model.alpha[b]);
        const double actual = static_cast<double>(T) * config.model.pi[a] *
                              config.model.p(a, b) /
                              (static_cast<double>(instance.cluster_sizes[a]) *
                               static_cast<double>(instance.cluster_sizes[b]));
        const double scaled = actual * static_cast<double>(n) * static_cast<double>(n) /
                              static_cast<double>(T);
        lo = std::min(lo, scaled / limit);
        hi = std::max(hi, scaled / limit);
      }
    }
    const bool in_band = lo >= 0.5 && hi <= 2.0;
    const bool guaranteed =
        static_cast<double>(n) >=
        8.0 * static_cast<double>(config.model.K) / config.model.alpha.minCoeff();
    std::snprintf(buffer, sizeof(buffer), "ratio_range=[%.6g,%.6g]", lo, hi);
    add("expected_entry_bounds", in_band, guaranteed, buffer);
  }

  const bmc::PathCounts counts = bmc::sample_path_counts(instance, T, common.seed);

  // Flow conservation along the path.
  {
    bool ok = counts.total() == static_cast<double>(T);
    for (Eigen::Index x = 0; x < n && ok; ++x) {
      const double gap = std::fabs(counts.out_degree[x] - counts.in_degree[x]);
      if (x == counts.start_state || x == counts.end_state) {
        ok = gap <= 1.0;
      } else {
        ok = gap == 0.0;
      }
    }
    add("flow_conservation", ok, true, "sum=" + std::to_string(counts.total()));
  }

  // Adjoint consistency of the centered operator on random probes.
  {
    const bmc::CenteredOperator op(counts, instance, T);
    bmc::Xoshiro256 rng(common.seed ^ 0xADD017ULL);
    double worst = 0.0;
    for (int probe = 0; probe < 8; ++probe) {
      Eigen::VectorXd u(n), v(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        u[i] = 2.0 * rng.uniform01() - 1.0;
        v[i] = 2.0 * rng.uniform01() - 1.0;
      }
      const double forward = u.dot(op.apply(v));
      const double backward = op.apply_adjoint(u).dot(v);
      const double scale = std::max({std::fabs(forward), std::fabs(backward), 1e-30});
      worst = std::max(worst, std::fabs(forward - backward) / scale);
    }
    add("adjoint_consistency", worst <= 1e-10, true, std::to_string(worst));

    const bmc::SpectrumEstimate top = bmc::top_singular_values(op, 1, config.solver);
    const double bound = std::sqrt(op.one_norm() * op.inf_norm());
    std::snprintf(buffer, sizeof(buffer), "sigma1=%.6g bound=%.6g", top.values[0], bound);
    add("norm_bound", top.values[0] <= bound * (1.0 + 1e-10) + 1e-30, true, buffer);
    const double row_bound = bmc::row_lower_bound(counts, instance, T);
    std::snprintf(buffer, sizeof(buffer), "row=%.6g sigma1=%.6g", row_bound, top.values[0]);
    add("row_lower_bound", row_bound <= top.values[0] * (1.0 + 1e-8) + 1e-12, true, buffer);
  }

  // Mixing diagnostics at dense-oracle scale.
  if (n <= 500) {
    const bmc::MixingReport mixing = bmc::mixing_report(instance, 50, 4, {0.25, 0.125});
    bool monotone = true;
    for (std::size_t t = 1; t < mixing.d_values.size(); ++t) {
      monotone = monotone && mixing.d_values[t] <= mixing.d_values[t - 1] + 1e-12;
    }
    add("d_monotone", monotone, true, "");
    const bool eta_applicable =
        static_cast<double>(n) >= 4.0 / config.model.alpha.minCoeff();
    add("d_geometric_bound", mixing.geometric_bound_ok, eta_applicable,
        "eta=" + std::to_string(mixing.eta));
    const double floor = 1.0 / (2.0 * (1.0 + 4.0 * mixing.eta));
    std::snprintf(buffer, sizeof(buffer), "gamma_ps=%.6g floor=%.6g", mixing.gamma_ps, floor);
    add("gamma_ps_floor", mixing.gamma_ps >= floor - 1e-12, eta_applicable, buffer);
    for (const auto& [eps_half, t_eps] : mixing.t_mix) {
      if (t_eps == 0) continue;
      const double lower = (1.0 - 2.0 * eps_half) / static_cast<double>(t_eps);
      std::snprintf(buffer, sizeof(buffer), "eps=%g bound=%.6g", 2.0 * eps_half, lower);
      add("gamma_ps_vs_tmix", mixing.gamma_ps >= lower - 1e-12, true, buffer);
    }
  }

  // Degree and subset-density behaviour: probabilistic, reported.
  {
    const bmc::DegreeBoundReport degrees = bmc::degree_bound_report(counts, T, degree_b);
    std::snprintf(buffer, sizeof(buffer), "max_scaled=%.6g b=%.6g", degrees.max_scaled_degree,
                  degree_b);
    add("degree_bound", degrees.holds, false, buffer);

    const bmc::DiscrepancyMode mode =
        n <= 12 ? bmc::DiscrepancyMode::Exhaustive : bmc::DiscrepancyMode::MonteCarlo;
    const bmc::DiscrepancyReport discrepancy =
        bmc::discrepancy_report(counts, T, d1, d2, mode, subset_budget, common.seed);
    std::snprintf(buffer, sizeof(buffer), "pairs=%lld minimal_d1=%.6g minimal_d2=%.6g",
                  static_cast<long long>(discrepancy.pairs_checked), discrepancy.minimal_d1,
                  discrepancy.minimal_d2);
    add("discrepancy", discrepancy.holds, false, buffer);
  }

  bool all_hard_ok = true;
  for (const auto& check : checks) {
    if (check.hard && !check.ok) all_hard_ok = false;
    if (machine) {
      std::cout << check.name << "=" << (check.ok ? "pass" : "fail")
                << (check.hard ? "" : " reported=1")
                << (check.detail.empty() ? "" : " " + check.detail) << "\n";
    } else {
      std::cout << (check.ok ? "[pass] " : (check.hard ? "[FAIL] " : "[info] ")) << check.name
                << (check.detail.empty() ? "" : "  " + check.detail) << "\n";
    }
  }
  std::cout << (all_hard_ok ? "verify ok" : "verify failed") << "\n";
  return all_hard_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block Markov chain spectral toolkit"};
  app.require_subcommand(1);

  CommonOptions common;
  Eigen::Index n = 100;
  std::int64_t t_len = 0;
  std::string out_path = "-";
  std::string samples_path;
  std::string trim_text = "none";
  std::string regimes_text = "1";
  std::string grid_text;
  int replications = 48;
  int top_k = 0;
  double tol = 0.0;
  int max_iter = 0;
  bool dense = false;
  bool machine = false;
  int t_max = 50;
  int i_max = 4;
  std::int64_t subset_budget = 100000;
  double d1 = 16.0, d2 = 16.0, degree_b = 0.0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", common.config_path, "model/config JSON file");
    cmd->add_option("--alpha", common.alpha_text, "inline cluster ratios, comma separated");
    cmd->add_option("--p", common.p_text, "inline cluster matrix, rows ';', entries ','");
    cmd->add_option("--seed", common.seed, "base seed");
    cmd->add_option("--threads", common.threads, "worker threads (default: BMC_THREADS or all)");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "sample a path, write counts");
  add_common(simulate);
  simulate->add_option("--n", n, "number of states")->required();
  simulate->add_option("--T", t_len, "path length")->required();
  simulate->add_option("--out", out_path, "output file, '-' for stdout");

  CLI::App* spectrum = app.add_subcommand("spectrum", "singular values of one sample");
  add_common(spectrum);
  spectrum->add_option("--n", n, "number of states")->required();
  spectrum->add_option("--T", t_len, "path length")->required();
  spectrum->add_option("--trim", trim_text, "auto | none | m=<int>");
  spectrum->add_option("--k", top_k, "values to compute");
  spectrum->add_option("--tol", tol, "solver tolerance");
  spectrum->add_option("--max-iter", max_iter, "solver iteration cap");
  spectrum->add_flag("--dense", dense, "use the dense SVD path");

  CLI::App* experiment = app.add_subcommand("experiment", "replication study, CSV out");
  add_common(experiment);
  experiment->add_option("--regimes", regimes_text, "regime exponents, comma separated");
  experiment->add_option("--n-grid", grid_text, "grid of n values")->required();
  experiment->add_option("--reps", replications, "replications per cell");
  experiment->add_option("--trim", trim_text, "auto | none | m=<int>");
  experiment->add_option("--tol", tol, "solver tolerance");
  experiment->add_option("--max-iter", max_iter, "solver iteration cap");
  experiment->add_option("--out", out_path, "CSV path, '-' for stdout");
  experiment->add_option("--samples-out", samples_path, "per-replication CSV path");

  CLI::App* verify = app.add_subcommand("verify", "run the diagnostic battery");
  add_common(verify);
  verify->add_option("--n", n, "number of states")->required();
  verify->add_option("--T", t_len, "path length (default round(n ln n))");
  verify->add_flag("--machine", machine, "key=value output");
  verify->add_option("--subset-budget", subset_budget, "Monte Carlo subset pairs");
  verify->add_option("--d1", d1, "density constant");
  verify->add_option("--d2", d2, "entropy constant");
  verify->add_option("--b", degree_b, "degree constant (default 4 max pi/alpha)");

  CLI::App* mixing = app.add_subcommand("mixing", "distance profile and pseudo-spectral gap");
  add_common(mixing);
  mixing->add_option("--n", n, "number of states")->required();
  mixing->add_option("--t-max", t_max, "profile horizon");
  mixing->add_option("--i-max", i_max, "gap search depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(common, n, t_len, out_path);
    if (spectrum->parsed()) {
      return cmd_spectrum(common, n, t_len, trim_text, top_k, tol, max_iter, dense);
    }
    if (experiment->parsed()) {
      return cmd_experiment(common, regimes_text, grid_text, replications, trim_text, tol,
                            max_iter, out_path, samples_path);
    }
    if (verify->parsed()) {
      return cmd_verify(common, n, t_len, machine, subset_budget, d1, d2, degree_b);
    }
    if (mixing->parsed()) return cmd_mixing(common, n, t_max, i_max);
  } catch (const bmc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
