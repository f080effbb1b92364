#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bmc/model.hpp"
#include "bmc/spectral.hpp"
#include "bmc/trim.hpp"

namespace bmc {

/// One sweep of the scaled-spectral-norm study: for each n in the grid,
/// `replications` independent paths of length T(n) = round(n (ln n)^a).
struct RegimeSpec {
  double exponent = 1.0;  // the regime parameter a
  std::vector<Eigen::Index> n_grid;
  int replications = 48;
  TrimPolicy trim_policy;
  std::uint64_t base_seed = 1;
  SolverParams solver;
};

/// Aggregated replications at one (regime, n) cell. The interval is the
/// 95% Student-t interval unless another level is requested.
struct ReplicationStats {
  double exponent = 0.0;
  Eigen::Index n = 0;
  std::int64_t T = 0;
  std::vector<double> samples;
  double mean = 0.0;
  double ci_halfwidth = 0.0;
};

/// Path length for one grid point; throws InvalidArgument if it lands
/// below 1 or n < 3.
std::int64_t regime_path_length(Eigen::Index n, double exponent);

/// Runs the sweep. Replication r draws its path with seed base_seed ^ r and
/// computes sqrt(n/T) * sigma_1(Nhat_Gamma - N) after applying the trim
/// policy. Replications run on `threads` workers (0 = hardware concurrency);
/// samples are aggregated in replication order, so results are independent
/// of the thread count.
std::vector<ReplicationStats> run_regime(const ClusterModel& model, const RegimeSpec& spec,
                                         int threads = 0);

/// Student-t confidence interval. Throws TooFewSamples below 2 samples.
std::pair<double, double> confidence_interval(const std::vector<double>& samples,
                                              double level = 0.95);

/// CSV with header regime_a,n,T,replications,mean,ci_halfwidth,min,max,
/// one row per (regime, n) sorted by regime then n, 9 significant digits.
void emit_csv(const std::vector<ReplicationStats>& stats, std::ostream& out);
void emit_csv_file(const std::vector<ReplicationStats>& stats, const std::string& path);

/// Companion per-replication dump: regime_a,n,replication,value.
void emit_samples_csv(const std::vector<ReplicationStats>& stats, std::ostream& out);
void emit_samples_csv_file(const std::vector<ReplicationStats>& stats, const std::string& path);

}  // namespace bmc
