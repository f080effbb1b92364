#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bmc/model.hpp"
#include "bmc/sampler.hpp"

namespace bmc {

/// Mixing behaviour of the chain, from exact dense computation.
///
/// d(t) is the worst-case total variation distance between the t-step
/// distribution and the stationary one. It is non-increasing, d(0) <= 1, and
/// for these chains decays at least geometrically with rate 1 - 1/(2 eta).
struct MixingReport {
  std::vector<double> d_values;       // d(0) .. d(t_max)
  std::map<double, int> t_mix;        // eps -> smallest t with d(t) <= eps, if reached
  double gamma_ps = 0.0;              // pseudo-spectral gap, if computed
  double eta = 1.0;
  bool geometric_bound_ok = false;    // d(t) <= (1 - 1/(2 eta))^t over the computed range
};

/// d(t) for t = 0..t_max via repeated dense multiplication. n <= 2000.
MixingReport exact_distance_profile(const BmcInstance& instance, int t_max,
                                    const std::vector<double>& epsilons = {0.5, 0.25});

/// gamma_ps = max_{1 <= i <= i_max} (1 - lambda((P*)^i P^i)) / i, where
/// lambda is the second-largest eigenvalue of the multiplicative
/// reversibilization. Dense eigenwork, n <= 500.
double pseudo_spectral_gap(const BmcInstance& instance, int i_max);

/// Convenience bundle of the two computations above.
MixingReport mixing_report(const BmcInstance& instance, int t_max, int i_max,
                           const std::vector<double>& epsilons = {0.5, 0.25});

/// Largest in- or out-degree scaled by n/T, and whether it clears the
/// configured constant b. The conventional default for b is
/// 4 * max_k pi_k / alpha_k.
struct DegreeBoundReport {
  double max_scaled_degree = 0.0;
  bool holds = true;
};

DegreeBoundReport degree_bound_report(const PathCounts& counts, std::int64_t T, double b);

double default_degree_constant(const ClusterModel& model);

enum class DiscrepancyMode { Exhaustive, MonteCarlo };

/// Subset-pair statistics: e = sum of counts over A x B and the density
/// ratio e n^2 / (|A| |B| T).
struct SubsetPairStats {
  std::vector<Eigen::Index> a, b;
  std::int64_t e = 0;
  double ratio = 0.0;
};

/// Outcome of checking the two-condition subset-density property over a
/// family of subset pairs: either the density ratio stays below d1, or the
/// entropy-weighted form stays below d2 times the size term.
///
/// minimal_d1 is the largest ratio seen; minimal_d2 is the smallest constant
/// that, together with the *requested* d1, lets every checked pair pass.
/// frontier holds the undominated (ratio, needed_d2) pairs, so holds_for()
/// answers exactly for any other pair of constants over the same family.
struct DiscrepancyReport {
  DiscrepancyMode mode = DiscrepancyMode::Exhaustive;
  std::int64_t pairs_checked = 0;
  SubsetPairStats worst_pair;
  double minimal_d1 = 0.0;
  double minimal_d2 = 0.0;
  bool holds = true;
  std::vector<std::pair<double, double>> frontier;

  bool holds_for(double d1, double d2) const;
};

/// Exhaustive mode enumerates all nonempty subset pairs (n <= 12). Monte
/// Carlo samples `subset_budget` pairs stratified by size on a log grid.
DiscrepancyReport discrepancy_report(const PathCounts& counts, std::int64_t T, double d1,
                                     double d2, DiscrepancyMode mode,
                                     std::int64_t subset_budget = 100000,
                                     std::uint64_t seed = 1);

/// All points of the grid (eps/sqrt(n)) Z^n inside the unit ball, one per
/// row. Cardinality is at most (9/eps)^n.
struct EpsilonNet {
  double epsilon = 0.0;
  Eigen::Index n = 0;
  Eigen::MatrixXd points;
};

EpsilonNet epsilon_net(Eigen::Index n, double epsilon, std::int64_t max_points = 5000000);

/// Coordinatewise rounding toward zero onto the net grid. The result stays
/// in the unit ball and lies within eps of the input.
Eigen::VectorXd net_round_toward_zero(const Eigen::VectorXd& x, double epsilon);

/// Checks sigma_1(A) <= max |x^T A y| / (1 - 3 eps) over net pairs.
struct NetNormBound {
  double true_norm = 0.0;
  double net_bound = 0.0;
  bool holds = true;
};

NetNormBound net_norm_bound_check(const Eigen::MatrixXd& a, double epsilon);

/// Bilinear form split by the pair-weight threshold (1/n) sqrt(T/n):
/// total = |x^T A y| <= light + heavy. heavy_abs_mass is the plain
/// sum of |x_i y_j| over heavy pairs, bounded by n sqrt(n/T) for unit x, y.
struct LightHeavySplit {
  double light = 0.0;
  double heavy = 0.0;
  double total = 0.0;
  double heavy_abs_mass = 0.0;
};

LightHeavySplit light_heavy_split(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                  std::int64_t T, const Eigen::MatrixXd& a);

}  // namespace bmc
