#include "bmc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "bmc/errors.hpp"
#include "bmc/sampler.hpp"
#include "bmc/stats.hpp"

namespace bmc {
namespace {

// Distinct stream for the solver probe so it never reuses path randomness.
constexpr std::uint64_t kSolverSeedSalt = 0x9E3779B97F4A7C15ULL;

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  const int workers = std::min(resolve_threads(threads), std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

void format_row(std::ostream& out, const ReplicationStats& cell) {
  char buffer[256];
  const double lo = *std::min_element(cell.samples.begin(), cell.samples.end());
  const double hi = *std::max_element(cell.samples.begin(), cell.samples.end());
  std::snprintf(buffer, sizeof(buffer), "%.9g,%lld,%lld,%zu,%.9g,%.9g,%.9g,%.9g\n",
                cell.exponent, static_cast<long long>(cell.n), static_cast<long long>(cell.T),
                cell.samples.size(), cell.mean, cell.ci_halfwidth, lo, hi);
  out << buffer;
}

}  // namespace

std::int64_t regime_path_length(Eigen::Index n, double exponent) {
  if (n < 3) throw InvalidArgument("regime grid needs n >= 3");
  const double t = std::round(static_cast<double>(n) *
                              std::pow(std::log(static_cast<double>(n)), exponent));
  if (!(t >= 1.0)) throw InvalidArgument("path length rounds below 1 at n = " +
                                         std::to_string(n));
  return static_cast<std::int64_t>(t);
}

std::vector<ReplicationStats> run_regime(const ClusterModel& model, const RegimeSpec& spec,
                                         int threads) {
  if (spec.replications < 2) throw TooFewSamples("need at least 2 replications");

  std::vector<ReplicationStats> out;
  out.reserve(spec.n_grid.size());
  for (const Eigen::Index n : spec.n_grid) {
    const std::int64_t T = regime_path_length(n, spec.exponent);
    const BmcInstance instance = build_instance(model, n);
    const Eigen::Index trim_m = spec.trim_policy.resolve(n, T);

    ReplicationStats cell;
    cell.exponent = spec.exponent;
    cell.n = n;
    cell.T = T;
    cell.samples.assign(static_cast<std::size_t>(spec.replications), 0.0);

    std::exception_ptr failure;
    std::mutex failure_mutex;
    parallel_for(spec.replications, threads, [&](int rep) {
      try {
        const std::uint64_t path_seed = spec.base_seed ^ static_cast<std::uint64_t>(rep);
        PathCounts counts = sample_path_counts(instance, T, path_seed);
        if (trim_m > 0) counts = apply_trim(counts, trim_set(counts, trim_m));
        SolverParams solver = spec.solver;
        solver.seed = path_seed ^ kSolverSeedSalt;
        cell.samples[static_cast<std::size_t>(rep)] =
            scaled_spectral_norm(counts, instance, T, solver);
      } catch (...) {
        const std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
    if (failure) std::rethrow_exception(failure);

    const auto [mean, hw] = confidence_interval(cell.samples);
    cell.mean = mean;
    cell.ci_halfwidth = hw;
    out.push_back(std::move(cell));
  }
  return out;
}

std::pair<double, double> confidence_interval(const std::vector<double>& samples, double level) {
  if (samples.size() < 2) throw TooFewSamples("confidence interval needs at least 2 samples");
  if (!(level > 0.0 && level < 1.0)) throw InvalidArgument("level must be in (0, 1)");
  const Eigen::Map<const Eigen::VectorXd> view(samples.data(),
                                               static_cast<Eigen::Index>(samples.size()));
  const auto [mean, sd] = stats::mean_sd(view);
  const double quantile =
      stats::student_t_quantile(0.5 + level / 2.0, static_cast<double>(samples.size() - 1));
  return {mean, quantile * sd / std::sqrt(static_cast<double>(samples.size()))};
}

void emit_csv(const std::vector<ReplicationStats>& stats, std::ostream& out) {
  std::vector<const ReplicationStats*> ordered;
  ordered.reserve(stats.size());
  for (const auto& cell : stats) ordered.push_back(&cell);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->exponent != b->exponent ? a->exponent < b->exponent : a->n < b->n;
  });
  out << "regime_a,n,T,replications,mean,ci_halfwidth,min,max\n";
  for (const auto* cell : ordered) format_row(out, *cell);
}

void emit_csv_file(const std::vector<ReplicationStats>& stats, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  emit_csv(stats, out);
  if (!out) throw IoError("write to " + path + " failed");
}

void emit_samples_csv(const std::vector<ReplicationStats>& stats, std::ostream& out) {
  std::vector<const ReplicationStats*> ordered;
  ordered.reserve(stats.size());
  for (const auto& cell : stats) ordered.push_back(&cell);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->exponent != b->exponent ? a->exponent < b->exponent : a->n < b->n;
  });
  out << "regime_a,n,replication,value\n";
  char buffer[192];
  for (const auto* cell : ordered) {
    for (std::size_t rep = 0; rep < cell->samples.size(); ++rep) {
      std::snprintf(buffer, sizeof(buffer), "%.9g,%lld,%zu,%.9g\n", cell->exponent,
                    static_cast<long long>(cell->n), rep, cell->samples[rep]);
      out << buffer;
    }
  }
}

void emit_samples_csv_file(const std::vector<ReplicationStats>& stats, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  emit_samples_csv(stats, out);
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace bmc
