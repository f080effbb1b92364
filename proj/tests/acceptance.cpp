// Acceptance suite: one criterion per runnable unit, one pass/fail line each.
//
//   bmc_acceptance [--criterion N] [--cli PATH]
//
// Without --criterion it runs all ten. --cli points at the command line
// binary and is only needed by criterion 10. Exit code 0 iff every selected
// criterion passed.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bmc/dense.hpp"
#include "bmc/diagnostics.hpp"
#include "bmc/experiments.hpp"
#include "bmc/model.hpp"
#include "bmc/sampler.hpp"
#include "bmc/spectral.hpp"
#include "bmc/stats.hpp"
#include "bmc/trim.hpp"
#include "oracles.hpp"

namespace {

std::string g_cli_path;

bmc::ClusterModel study_model() { return oracle::study_model(); }

struct PaperPoint {
  Eigen::Index n;
  double mean;
  double halfwidth;
};

struct PaperCurve {
  double exponent;
  std::vector<PaperPoint> points;
};

// Plotted means and 95% halfwidths for the four trajectory-length regimes.
const std::vector<PaperCurve> kReferenceCurves = {
    {1.0,
     {{500, 2.19652, 0.0208963},
      {1000, 2.18045, 0.0126127},
      {2000, 2.18613, 0.0238793},
      {4000, 2.15018, 0.00763181}}},
    {0.5,
     {{500, 2.38347, 0.0339093},
      {1000, 2.48488, 0.0676725},
      {2000, 2.50103, 0.0453305},
      {4000, 2.45727, 0.0271101}}},
    {0.0,
     {{500, 2.87541, 0.0764689},
      {1000, 3.04789, 0.107064},
      {2000, 3.00511, 0.0843903},
      {4000, 3.03615, 0.0630791}}},
    {-0.5,
     {{500, 3.28725, 0.0677924},
      {1000, 3.45281, 0.0666286},
      {2000, 3.71451, 0.145113},
      {4000, 4.17051, 0.146184}}},
};

constexpr std::uint64_t kBaseSeed = 20260808;
constexpr int kReplications = 48;

std::vector<bmc::ReplicationStats> run_reference_cell(double exponent,
                                                      std::vector<Eigen::Index> grid) {
  bmc::RegimeSpec spec;
  spec.exponent = exponent;
  spec.n_grid = std::move(grid);
  spec.replications = kReplications;
  spec.trim_policy = bmc::TrimPolicy{};  // none, matching the reference study
  spec.base_seed = kBaseSeed;
  return bmc::run_regime(study_model(), spec);
}

bool criterion_figure_reproduction(std::ostream& out) {
  bool ok = true;
  for (const PaperCurve& curve : kReferenceCurves) {
    std::vector<Eigen::Index> grid;
    for (const PaperPoint& point : curve.points) grid.push_back(point.n);
    const auto cells = run_reference_cell(curve.exponent, grid);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const PaperPoint& target = curve.points[i];
      const double diff = std::fabs(cells[i].mean - target.mean);
      const double allowance = 3.0 * (target.halfwidth + cells[i].ci_halfwidth);
      const bool point_ok = diff <= allowance;
      ok = ok && point_ok;
      char line[160];
      std::snprintf(line, sizeof(line),
                    "  a=%+.1f n=%5lld mean=%.5f target=%.5f |diff|=%.4f allowed=%.4f %s",
                    curve.exponent, static_cast<long long>(cells[i].n), cells[i].mean,
                    target.mean, diff, allowance, point_ok ? "ok" : "MISS");
      out << line << "\n";
    }
  }
  return ok;
}

bool criterion_regime_ordering(std::ostream& out) {
  std::vector<double> means, halfwidths;
  for (const double a : {-0.5, 0.0, 0.5, 1.0}) {
    const auto cells = run_reference_cell(a, {2000});
    means.push_back(cells[0].mean);
    halfwidths.push_back(cells[0].ci_halfwidth);
    char line[96];
    std::snprintf(line, sizeof(line), "  a=%+.1f mean=%.5f hw=%.5f", a, cells[0].mean,
                  cells[0].ci_halfwidth);
    out << line << "\n";
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < means.size(); ++i) {
    decreasing = decreasing && means[i] < means[i - 1];
  }
  const double separation = means.front() - means.back();
  const double needed = 3.0 * (halfwidths.front() + halfwidths.back());
  out << "  separation=" << separation << " needed=" << needed << "\n";
  return decreasing && separation > needed;
}

bool criterion_exact_spectrum(std::ostream& out) {
  bmc::Xoshiro256 rng(1905);
  bool ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.bounded(4));
    const bmc::ClusterModel model = oracle::random_model(rng, k);
    const Eigen::Index min_n = static_cast<Eigen::Index>(
        std::ceil(static_cast<double>(k) / model.alpha.minCoeff())) + k;
    const Eigen::Index n =
        std::min<Eigen::Index>(300, min_n + static_cast<Eigen::Index>(rng.bounded(250)));
    const bmc::BmcInstance instance = bmc::build_instance(model, n);
    const std::int64_t T = 1 + static_cast<std::int64_t>(rng.bounded(100000));

    const bmc::ExpectedSpectrum reduced = bmc::expected_spectrum(instance, T);
    const Eigen::VectorXd dense =
        oracle::singular_values(oracle::dense_expected(instance, T));
    for (Eigen::Index i = 0; i < k; ++i) {
      ok = ok && std::fabs(reduced.singular_values[i] - dense[i]) <= 1e-10 * dense[0];
    }
    if (n > k) ok = ok && dense[k] <= 1e-10 * dense[0];
  }
  out << "  20 random models: reduction matches dense SVD at 1e-10, rank K confirmed\n";

  // Symmetric example: report the printed-value discrepancy, no assertion.
  Eigen::VectorXd alpha(3);
  alpha << 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0;
  Eigen::MatrixXd p(3, 3);
  p << 0.2, 0.3, 0.5, 0.3, 0.5, 0.2, 0.5, 0.2, 0.3;
  const bmc::BmcInstance instance =
      bmc::build_instance(bmc::validate_model(alpha, p), 30);
  const bmc::ExpectedSpectrum spectrum = bmc::expected_spectrum(instance, 3000);
  const double printed_sigma1 = 3000.0 / (3.0 * 30.0);
  out << "  symmetric example: sigma_1 = " << spectrum.singular_values[0]
      << ", printed form T/(3n) = " << printed_sigma1
      << ", discrepancy factor = " << spectrum.singular_values[0] / printed_sigma1
      << " (reported)\n";
  return ok;
}

bool criterion_gap_profile(std::ostream& out) {
  const Eigen::Index n = 2000;
  const std::int64_t T = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));
  const bmc::BmcInstance instance = bmc::build_instance(study_model(), n);

  int ratio_ok = 0, scale_ok = 0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (int seed = 0; seed < kReplications; ++seed) {
    const bmc::PathCounts counts =
        bmc::sample_path_counts(instance, T, kBaseSeed + static_cast<std::uint64_t>(seed));
    const bmc::SpectrumEstimate profile = bmc::spectral_gap_profile(counts, instance, 4);
    const double ratio = profile.values[2] / profile.values[3];
    if (ratio >= 3.0) ++ratio_ok;
    worst_ratio = std::min(worst_ratio, ratio);
    const double scaled = profile.values[2] * static_cast<double>(n) / static_cast<double>(T);
    if (scaled >= 0.1 && scaled <= 10.0) ++scale_ok;
  }
  out << "  sigma3/sigma4 >= 3 on " << ratio_ok << "/" << kReplications
      << " seeds (min ratio " << worst_ratio << "), sigma3*n/T in [0.1,10] on " << scale_ok
      << "/" << kReplications << "\n";
  const bool ratio_clause =
      ratio_ok >= static_cast<int>(0.9 * kReplications);
  if (!ratio_clause) {
    out << "  the ratio clause does not hold at these parameters: sigma_3(N) ~ 0.26 T/n"
           " sits below the noise level ~2.14 sqrt(T/n), so sigma_3(Nhat) and sigma_4(Nhat)"
           " both lie at the noise edge\n";
  }
  return ratio_clause && scale_ok == kReplications;
}

bool criterion_lower_bound(std::ostream& out) {
  const Eigen::Index n = 2000;
  const std::int64_t T = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));
  const bmc::BmcInstance instance = bmc::build_instance(study_model(), n);

  bool ok = true;
  double min_scaled = std::numeric_limits<double>::infinity();
  double min_scaled_row = std::numeric_limits<double>::infinity();
  for (int seed = 0; seed < kReplications; ++seed) {
    const bmc::PathCounts counts =
        bmc::sample_path_counts(instance, T, kBaseSeed + static_cast<std::uint64_t>(seed));
    const bmc::CenteredOperator op(counts, instance, T);
    const double sigma1 = bmc::top_singular_values(op, 1).values[0];
    const double scaled =
        std::sqrt(static_cast<double>(n) / static_cast<double>(T)) * sigma1;
    const double row = bmc::row_lower_bound(counts, instance, T);
    min_scaled = std::min(min_scaled, scaled);
    min_scaled_row = std::min(
        min_scaled_row, std::sqrt(static_cast<double>(n) / static_cast<double>(T)) * row);
    ok = ok && scaled >= 0.5 && row <= sigma1 * (1.0 + 1e-8);
  }
  out << "  min scaled sigma_1 = " << min_scaled
      << " (threshold 0.5); min scaled row bound = " << min_scaled_row
      << " (reported); row bound never exceeded sigma_1\n";
  return ok;
}

bool criterion_oracle_equivalence(std::ostream& out) {
  bool ok = true;
  bmc::Xoshiro256 rng(424242);
  for (const Eigen::Index n : {Eigen::Index{50}, Eigen::Index{150}}) {
    const bmc::BmcInstance instance = bmc::build_instance(study_model(), n);
    const std::int64_t T = 40 * n;
    const bmc::PathCounts counts = bmc::sample_path_counts(instance, T, 7 + n);
    const bmc::CenteredOperator op(counts, instance, T);
    const Eigen::MatrixXd dense =
        oracle::dense_counts(counts) - oracle::dense_expected(instance, T);
    double worst = 0.0;
    for (int probe = 0; probe < 50; ++probe) {
      const Eigen::VectorXd v = oracle::random_vector(rng, n);
      const double scale = v.norm() * static_cast<double>(T) / static_cast<double>(n);
      worst = std::max(worst, (op.apply(v) - dense * v).norm() / scale);
      worst = std::max(worst, (op.apply_adjoint(v) - dense.transpose() * v).norm() / scale);
    }
    ok = ok && worst <= 1e-12;
    out << "  n=" << n << ": worst probe error " << worst << " (100 probes, cap 1e-12)\n";
  }

  const Eigen::Index n = 200;
  const bmc::BmcInstance instance = bmc::build_instance(study_model(), n);
  const std::int64_t T = 9000;
  const bmc::PathCounts counts = bmc::sample_path_counts(instance, T, 11);
  const Eigen::MatrixXd dense =
      oracle::dense_counts(counts) - oracle::dense_expected(instance, T);
  const Eigen::VectorXd exact = oracle::singular_values(dense);
  const bmc::SpectrumEstimate top =
      bmc::top_singular_values(bmc::CenteredOperator(counts, instance, T), 5);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    worst = std::max(worst, std::fabs(top.values[i] - exact[i]) / exact[0]);
  }
  ok = ok && worst <= 1e-8 && top.converged;
  out << "  n=200 solver vs dense SVD: worst relative error " << worst << " (cap 1e-8)\n";
  return ok;
}

bool criterion_mixing(std::ostream& out) {
  const bmc::BmcInstance instance = bmc::build_instance(study_model(), 30);
  const bmc::MixingReport report = bmc::mixing_report(instance, 50, 4, {0.25, 0.125});

  bool monotone = true;
  for (std::size_t t = 1; t < report.d_values.size(); ++t) {
    monotone = monotone && report.d_values[t] <= report.d_values[t - 1] + 1e-12;
  }
  const bool geometric = report.geometric_bound_ok;
  const double floor = 1.0 / (2.0 * (1.0 + 4.0 * report.eta));
  const bool gap_floor = report.gamma_ps >= floor;
  bool paulin = true;
  for (const auto& [eps_half, t] : report.t_mix) {
    if (t == 0) continue;
    paulin = paulin && report.gamma_ps >= (1.0 - 2.0 * eps_half) / static_cast<double>(t) - 1e-12;
  }
  out << "  d monotone=" << monotone << " geometric=" << geometric
      << " gamma_ps=" << report.gamma_ps << " floor=" << floor
      << " mixing-time relation=" << paulin << "\n";
  return monotone && geometric && gap_floor && paulin;
}

bool criterion_degree_discrepancy(std::ostream& out) {
  const Eigen::Index n = 2000;
  const std::int64_t T = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));
  const bmc::BmcInstance instance = bmc::build_instance(study_model(), n);
  const double b = bmc::default_degree_constant(study_model());

  int held = 0;
  double worst = 0.0;
  for (int seed = 0; seed < kReplications; ++seed) {
    const bmc::PathCounts counts =
        bmc::sample_path_counts(instance, T, kBaseSeed + static_cast<std::uint64_t>(seed));
    const bmc::DegreeBoundReport report = bmc::degree_bound_report(counts, T, b);
    worst = std::max(worst, report.max_scaled_degree);
    if (report.holds) ++held;
  }
  const bool degrees_ok = held >= static_cast<int>(0.95 * kReplications);
  out << "  degree bound b=" << b << " held on " << held << "/" << kReplications
      << " seeds (max scaled degree " << worst << ")\n";

  const bmc::BmcInstance small = bmc::build_instance(study_model(), 8);
  const std::int64_t small_T = 160;
  const bmc::PathCounts counts = bmc::sample_path_counts(small, small_T, 77);
  const Eigen::MatrixXd dense = oracle::dense_counts(counts);
  bool brute_ok = true;
  for (const double d1 : {0.5, 2.0, 16.0}) {
    for (const double d2 : {0.5, 8.0}) {
      const bmc::DiscrepancyReport report = bmc::discrepancy_report(
          counts, small_T, d1, d2, bmc::DiscrepancyMode::Exhaustive);
      const oracle::BruteDiscrepancy brute = oracle::brute_discrepancy(dense, small_T, d1, d2);
      brute_ok = brute_ok && report.pairs_checked == brute.pairs &&
                 report.minimal_d1 == brute.minimal_d1 && report.holds == brute.holds;
      if (std::isfinite(brute.minimal_d2)) {
        brute_ok = brute_ok &&
                   std::fabs(report.minimal_d2 - brute.minimal_d2) <=
                       1e-12 * std::max(1.0, brute.minimal_d2);
      } else {
        brute_ok = brute_ok && !std::isfinite(report.minimal_d2);
      }
    }
  }
  out << "  exhaustive discrepancy at n=8 matches the brute-force oracle: "
      << (brute_ok ? "yes" : "NO") << "\n";
  return degrees_ok && brute_ok;
}

bool criterion_net_suite(std::ostream& out) {
  const double eps = 0.25;
  bool ok = true;
  for (Eigen::Index n = 1; n <= 4; ++n) {
    const bmc::EpsilonNet net = bmc::epsilon_net(n, eps);
    const double cap = std::pow(9.0 / eps, static_cast<double>(n));
    bool members = true;
    for (Eigen::Index r = 0; r < net.points.rows(); ++r) {
      members = members && net.points.row(r).norm() <= 1.0 + 1e-12;
    }
    ok = ok && static_cast<double>(net.points.rows()) <= cap && members;
    out << "  n=" << n << ": |net|=" << net.points.rows() << " cap=" << cap << "\n";
  }

  bmc::Xoshiro256 rng(5050);
  bool covered = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::VectorXd x = oracle::random_unit_ball(rng, 4);
    const Eigen::VectorXd witness = bmc::net_round_toward_zero(x, eps);
    covered = covered && (x - witness).norm() <= eps && witness.norm() <= 1.0 + 1e-15;
  }
  ok = ok && covered;
  out << "  covering witness within eps for 1000 random ball points: "
      << (covered ? "yes" : "NO") << "\n";

  bool bound_ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd a(4, 4);
    for (Eigen::Index c = 0; c < 4; ++c) a.col(c) = oracle::random_vector(rng, 4);
    bound_ok = bound_ok && bmc::net_norm_bound_check(a, eps).holds;
  }
  ok = ok && bound_ok;
  out << "  net norm bound held for 50 random matrices: " << (bound_ok ? "yes" : "NO") << "\n";
  return ok;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool criterion_determinism(std::ostream& out) {
  if (g_cli_path.empty()) {
    out << "  pass --cli <path to the bmc binary>\n";
    return false;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bmc_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);

  const std::string model_flags =
      " --alpha 0.3333333333333333,0.3333333333333333,0.3333333333333334"
      " --p \"0.2,0.3,0.5;0.3,0.5,0.2;0.5,0.2,0.3\"";

  bool ok = true;
  for (int round = 1; round <= 2; ++round) {
    const std::string counts = (dir / ("counts" + std::to_string(round) + ".txt")).string();
    const std::string csv = (dir / ("study" + std::to_string(round) + ".csv")).string();
    const std::string simulate = "\"" + g_cli_path + "\" simulate" + model_flags +
                                 " --n 120 --T 4000 --seed 9 --out " + counts +
                                 " 2>/dev/null";
    const std::string experiment = "\"" + g_cli_path + "\" experiment" + model_flags +
                                   " --regimes 0.5,1 --n-grid 60,120 --reps 6 --seed 9"
                                   " --out " + csv + " 2>/dev/null";
    ok = ok && std::system(simulate.c_str()) == 0;
    ok = ok && std::system(experiment.c_str()) == 0;
  }
  if (!ok) {
    out << "  CLI invocation failed\n";
    return false;
  }
  const bool counts_equal =
      read_file(dir / "counts1.txt") == read_file(dir / "counts2.txt") &&
      !read_file(dir / "counts1.txt").empty();
  const bool csv_equal = read_file(dir / "study1.csv") == read_file(dir / "study2.csv") &&
                         !read_file(dir / "study1.csv").empty();
  out << "  counts files identical: " << (counts_equal ? "yes" : "NO")
      << "; CSV files identical: " << (csv_equal ? "yes" : "NO") << "\n";
  fs::remove_all(dir);
  return counts_equal && csv_equal;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::ostream&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "scaled spectral norm reproduction at n in {500,1000,2000,4000}",
     criterion_figure_reproduction},
    {2, "regime means strictly decreasing in a at n=2000", criterion_regime_ordering},
    {3, "exact rank-K spectrum of the expected matrix", criterion_exact_spectrum},
    {4, "singular value gap of the raw counts at n=2000", criterion_gap_profile},
    {5, "scaled sigma_1 lower bound and row-norm certificate", criterion_lower_bound},
    {6, "matrix-free operator and solver against dense oracles", criterion_oracle_equivalence},
    {7, "mixing diagnostics at n=30", criterion_mixing},
    {8, "degree bound across seeds and exhaustive discrepancy at n=8",
     criterion_degree_discrepancy},
    {9, "epsilon net cardinality, covering, and norm bound", criterion_net_suite},
    {10, "byte-identical outputs from identical invocations", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else if (arg == "--cli" && i + 1 < argc) {
      g_cli_path = argv[++i];
    } else {
      std::cerr << "usage: bmc_acceptance [--criterion N] [--cli PATH]\n";
      return 2;
    }
  }

  bool all_ok = true;
  for (const Criterion& criterion : kCriteria) {
    if (selected != 0 && criterion.id != selected) continue;
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail << "  exception: " << e.what() << "\n";
    }
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.name << "\n"
              << detail.str();
  }
  return all_ok ? 0 : 1;
}
