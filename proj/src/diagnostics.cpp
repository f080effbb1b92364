#include "bmc/diagnostics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bmc/dense.hpp"
#include "bmc/errors.hpp"
#include "bmc/rng.hpp"

namespace bmc {
namespace {

constexpr Eigen::Index kMixingDenseLimit = 2000;
constexpr Eigen::Index kGapDenseLimit = 500;
constexpr Eigen::Index kExhaustiveLimit = 12;
constexpr Eigen::Index kNetDimensionLimit = 8;
constexpr Eigen::Index kNetBoundDimensionLimit = 6;
constexpr Eigen::Index kSplitLimit = 200;

double tv_to_stationary(const Eigen::RowVectorXd& row, const Eigen::VectorXd& pi) {
  return 0.5 * (row.transpose() - pi).cwiseAbs().sum();
}

// Condition (ii) bookkeeping for one subset pair: the smallest d2 that lets
// the pair pass, given that condition (i) already failed. Pairs with a
// nonpositive log factor pass outright; a vanishing size term with a positive
// left side cannot pass for any finite d2.
double needed_d2(std::int64_t e, double ratio, Eigen::Index size_max, Eigen::Index n) {
  const double lhs = static_cast<double>(e) * std::log(ratio);
  if (lhs <= 0.0) return 0.0;
  const double denom = static_cast<double>(size_max) *
                       std::log(static_cast<double>(n) / static_cast<double>(size_max));
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return lhs / denom;
}

struct PairAccumulator {
  Eigen::Index n = 0;
  std::int64_t T = 0;
  double d1 = 0.0, d2 = 0.0;
  DiscrepancyReport report;
  double worst_ratio = -1.0;
  // Undominated (ratio, needed_d2) points: keys ascending, values strictly
  // descending. Answers holds_for exactly for any constants.
  std::map<double, double> frontier;

  void insert_frontier(double ratio, double q) {
    if (q <= 0.0) return;
    auto it = frontier.lower_bound(ratio);
    if (it != frontier.end() && it->second >= q) return;  // dominated
    while (it != frontier.begin()) {
      auto prev = std::prev(it);
      if (prev->second > q) break;
      it = frontier.erase(prev);
    }
    if (it != frontier.end() && it->first == ratio) {
      it->second = q;  // same ratio, stricter requirement
    } else {
      frontier.emplace_hint(it, ratio, q);
    }
  }

  void add(std::int64_t e, Eigen::Index size_a, Eigen::Index size_b,
           const std::vector<Eigen::Index>* a = nullptr,
           const std::vector<Eigen::Index>* b = nullptr) {
    ++report.pairs_checked;
    const double ratio = static_cast<double>(e) * static_cast<double>(n) *
                         static_cast<double>(n) /
                         (static_cast<double>(size_a) * static_cast<double>(size_b) *
                          static_cast<double>(T));
    report.minimal_d1 = std::max(report.minimal_d1, ratio);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      report.worst_pair.e = e;
      report.worst_pair.ratio = ratio;
      if (a && b) {
        report.worst_pair.a = *a;
        report.worst_pair.b = *b;
      }
    }
    const double q = ratio > 1.0 ? needed_d2(e, ratio, std::max(size_a, size_b), n) : 0.0;
    insert_frontier(ratio, q);
    if (ratio <= d1) return;
    report.minimal_d2 = std::max(report.minimal_d2, q);
    if (q > d2) report.holds = false;
  }

  DiscrepancyReport finish() {
    report.frontier.assign(frontier.begin(), frontier.end());
    return report;
  }
};

}  // namespace

MixingReport exact_distance_profile(const BmcInstance& instance, int t_max,
                                    const std::vector<double>& epsilons) {
  if (instance.n > kMixingDenseLimit) {
    throw DenseTooLarge("distance profile uses dense powers, n <= 2000");
  }
  if (t_max < 0) throw InvalidArgument("t_max must be nonnegative");

  const Eigen::MatrixXd p = dense_transition(instance, kMixingDenseLimit);
  const Eigen::VectorXd pi = instance.stationary_vector();

  MixingReport report;
  report.eta = instance.model.eta;
  report.d_values.reserve(static_cast<std::size_t>(t_max) + 1);

  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(instance.n, instance.n);
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) power = (power * p).eval();
    double worst = 0.0;
    for (Eigen::Index x = 0; x < instance.n; ++x) {
      worst = std::max(worst, tv_to_stationary(power.row(x), pi));
    }
    report.d_values.push_back(worst);
  }

  for (const double eps : epsilons) {
    for (int t = 0; t <= t_max; ++t) {
      if (report.d_values[static_cast<std::size_t>(t)] <= eps) {
        report.t_mix[eps] = t;
        break;
      }
    }
  }

  const double rate = 1.0 - 1.0 / (2.0 * instance.model.eta);
  report.geometric_bound_ok = true;
  double bound = 1.0;
  for (int t = 0; t <= t_max; ++t) {
    if (report.d_values[static_cast<std::size_t>(t)] > bound + 1e-12) {
      report.geometric_bound_ok = false;
      break;
    }
    bound *= rate;
  }
  return report;
}

double pseudo_spectral_gap(const BmcInstance& instance, int i_max) {
  if (instance.n > kGapDenseLimit) {
    throw DenseTooLarge("pseudo-spectral gap uses dense eigenwork, n <= 500");
  }
  if (i_max < 1) throw InvalidArgument("i_max must be at least 1");

  const Eigen::MatrixXd p = dense_transition(instance, kGapDenseLimit);
  const Eigen::VectorXd pi = instance.stationary_vector();
  const Eigen::VectorXd sqrt_pi = pi.cwiseSqrt();

  // Similarity transform: S_i = A_i^T A_i with A_i = D^{1/2} P^i D^{-1/2}
  // shares eigenvalues with (P*)^i P^i and is symmetric PSD with top
  // eigenvalue 1.
  if (instance.n == 1) return 1.0;  // single state: every function is constant
  const Eigen::MatrixXd a1 =
      sqrt_pi.asDiagonal() * p * sqrt_pi.cwiseInverse().asDiagonal();
  Eigen::MatrixXd ai = Eigen::MatrixXd::Identity(instance.n, instance.n);

  double gap = 0.0;
  for (int i = 1; i <= i_max; ++i) {
    ai = (ai * a1).eval();
    const Eigen::MatrixXd si = ai.transpose() * ai;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(si, Eigen::EigenvaluesOnly);
    const double lambda2 = eig.eigenvalues()[instance.n - 2];
    gap = std::max(gap, (1.0 - lambda2) / static_cast<double>(i));
  }
  return gap;
}

MixingReport mixing_report(const BmcInstance& instance, int t_max, int i_max,
                           const std::vector<double>& epsilons) {
  MixingReport report = exact_distance_profile(instance, t_max, epsilons);
  report.gamma_ps = pseudo_spectral_gap(instance, i_max);
  return report;
}

DegreeBoundReport degree_bound_report(const PathCounts& counts, std::int64_t T, double b) {
  DegreeBoundReport report;
  if (T == 0) return report;
  const double scale = static_cast<double>(counts.n) / static_cast<double>(T);
  report.max_scaled_degree =
      scale * counts.in_degree.cwiseMax(counts.out_degree).maxCoeff();
  report.holds = report.max_scaled_degree <= b;
  return report;
}

double default_degree_constant(const ClusterModel& model) {
  return 4.0 * (model.pi.array() / model.alpha.array()).maxCoeff();
}

bool DiscrepancyReport::holds_for(double d1, double d2) const {
  for (const auto& [ratio, q] : frontier) {
    if (ratio > d1 && q > d2) return false;
  }
  return true;
}

DiscrepancyReport discrepancy_report(const PathCounts& counts, std::int64_t T, double d1,
                                     double d2, DiscrepancyMode mode,
                                     std::int64_t subset_budget, std::uint64_t seed) {
  if (T < 1) throw InvalidArgument("discrepancy needs T >= 1");
  const Eigen::Index n = counts.n;

  PairAccumulator acc;
  acc.n = n;
  acc.T = T;
  acc.d1 = d1;
  acc.d2 = d2;
  acc.report.mode = mode;

  if (mode == DiscrepancyMode::Exhaustive) {
    if (n > kExhaustiveLimit) {
      throw TooLarge("exhaustive discrepancy enumerates 4^n pairs, n <= 12");
    }
    const std::uint32_t full = (n >= 1 ? (1u << n) : 1u);
    const Eigen::MatrixXd dense = dense_counts(counts, kExhaustiveLimit);

    // row_to_b[x][B] = sum of row x over the columns in mask B.
    std::vector<std::vector<std::int64_t>> row_to_b(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(full, 0));
    for (Eigen::Index x = 0; x < n; ++x) {
      auto& row = row_to_b[static_cast<std::size_t>(x)];
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        const int bit = std::countr_zero(mask);
        row[mask] = row[mask & (mask - 1)] + static_cast<std::int64_t>(dense(x, bit));
      }
    }

    std::vector<int> popcount(full);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      popcount[mask] = popcount[mask >> 1] + static_cast<int>(mask & 1);
    }

    std::vector<std::int64_t> e_for_a(full);
    std::uint32_t worst_a = 0, worst_b = 0;
    double worst_ratio = -1.0;
    for (std::uint32_t b_mask = 1; b_mask < full; ++b_mask) {
      e_for_a[0] = 0;
      for (std::uint32_t a_mask = 1; a_mask < full; ++a_mask) {
        const int bit = std::countr_zero(a_mask);
        e_for_a[a_mask] = e_for_a[a_mask & (a_mask - 1)] +
                          row_to_b[static_cast<std::size_t>(bit)][b_mask];
        acc.add(e_for_a[a_mask], popcount[a_mask], popcount[b_mask]);
        if (acc.worst_ratio > worst_ratio) {
          worst_ratio = acc.worst_ratio;
          worst_a = a_mask;
          worst_b = b_mask;
        }
      }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (worst_a & (1u << i)) acc.report.worst_pair.a.push_back(i);
      if (worst_b & (1u << i)) acc.report.worst_pair.b.push_back(i);
    }
    return acc.finish();
  }

  // Monte Carlo over subset pairs, stratified by size on a log grid.
  if (subset_budget < 1) throw BudgetZero("subset budget must be positive");
  std::vector<Eigen::Index> grid;
  for (Eigen::Index s = 1; s < n; s *= 2) grid.push_back(s);
  grid.push_back(n);
  const std::int64_t per_stratum = std::max<std::int64_t>(
      1, subset_budget / (static_cast<std::int64_t>(grid.size()) *
                          static_cast<std::int64_t>(grid.size())));

  Xoshiro256 rng(seed);
  std::vector<Eigen::Index> perm_a(static_cast<std::size_t>(n)), perm_b(perm_a);
  std::iota(perm_a.begin(), perm_a.end(), Eigen::Index{0});
  std::iota(perm_b.begin(), perm_b.end(), Eigen::Index{0});
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);

  std::vector<Eigen::Index> a_states, b_states;
  for (const Eigen::Index sa : grid) {
    for (const Eigen::Index sb : grid) {
      for (std::int64_t rep = 0; rep < per_stratum; ++rep) {
        // Partial Fisher-Yates; starting from any permutation the prefix is
        // a uniform subset.
        for (Eigen::Index i = 0; i < sa; ++i) {
          std::swap(perm_a[static_cast<std::size_t>(i)],
                    perm_a[static_cast<std::size_t>(
                        i + static_cast<Eigen::Index>(rng.bounded(
                                static_cast<std::uint64_t>(n - i))))]);
        }
        for (Eigen::Index i = 0; i < sb; ++i) {
          std::swap(perm_b[static_cast<std::size_t>(i)],
                    perm_b[static_cast<std::size_t>(
                        i + static_cast<Eigen::Index>(rng.bounded(
                                static_cast<std::uint64_t>(n - i))))]);
        }
        for (Eigen::Index i = 0; i < sb; ++i) in_b[static_cast<std::size_t>(perm_b[i])] = 1;
        std::int64_t e = 0;
        for (Eigen::Index i = 0; i < sa; ++i) {
          const Eigen::Index x = perm_a[static_cast<std::size_t>(i)];
          for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(counts.counts,
                                                                              static_cast<int>(x));
               it; ++it) {
            if (in_b[static_cast<std::size_t>(it.col())]) {
              e += static_cast<std::int64_t>(it.value());
            }
          }
        }
        for (Eigen::Index i = 0; i < sb; ++i) in_b[static_cast<std::size_t>(perm_b[i])] = 0;

        a_states.assign(perm_a.begin(), perm_a.begin() + sa);
        b_states.assign(perm_b.begin(), perm_b.begin() + sb);
        acc.add(e, sa, sb, &a_states, &b_states);
      }
    }
  }
  std::sort(acc.report.worst_pair.a.begin(), acc.report.worst_pair.a.end());
  std::sort(acc.report.worst_pair.b.begin(), acc.report.worst_pair.b.end());
  return acc.finish();
}

EpsilonNet epsilon_net(Eigen::Index n, double epsilon, std::int64_t max_points) {
  if (n < 1 || n > kNetDimensionLimit) throw TooLarge("net enumeration supports 1 <= n <= 8");
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");

  const double step = epsilon / std::sqrt(static_cast<double>(n));
  const double budget = 1.0 / (step * step);  // sum of squared integer coords

  std::vector<double> flat;
  std::vector<Eigen::Index> coord(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;

  // Depth-first over integer coordinates with the remaining norm budget.
  auto recurse = [&](auto&& self, Eigen::Index depth, double remaining) -> void {
    if (depth == n) {
      ++count;
      if (count > max_points) throw TooLarge("epsilon net exceeds the point cap");
      for (Eigen::Index i = 0; i < n; ++i) {
        flat.push_back(static_cast<double>(coord[static_cast<std::size_t>(i)]) * step);
      }
      return;
    }
    const auto reach = static_cast<Eigen::Index>(std::floor(std::sqrt(std::max(remaining, 0.0))));
    for (Eigen::Index m = -reach; m <= reach; ++m) {
      coord[static_cast<std::size_t>(depth)] = m;
      self(self, depth + 1, remaining - static_cast<double>(m) * static_cast<double>(m));
    }
  };
  recurse(recurse, 0, budget);

  EpsilonNet net;
  net.epsilon = epsilon;
  net.n = n;
  net.points = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      flat.data(), count, n);
  return net;
}

Eigen::VectorXd net_round_toward_zero(const Eigen::VectorXd& x, double epsilon) {
  const double step = epsilon / std::sqrt(static_cast<double>(x.size()));
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out[i] = std::trunc(x[i] / step) * step;
  }
  return out;
}

NetNormBound net_norm_bound_check(const Eigen::MatrixXd& a, double epsilon) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw ShapeMismatch("net bound check expects a square matrix");
  if (n > kNetBoundDimensionLimit) throw TooLarge("net bound check supports n <= 6");
  if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0)) {
    throw InvalidArgument("the net bound needs epsilon in (0, 1/3)");
  }

  const EpsilonNet net = epsilon_net(n, epsilon);

  // |x^T A y| is invariant under negating x or y, so it suffices to scan
  // points whose first nonzero coordinate is positive.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < net.points.rows(); ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double v = net.points(r, c);
      if (v != 0.0) {
        if (v > 0.0) keep.push_back(r);
        break;
      }
    }
  }
  Eigen::MatrixXd w(static_cast<Eigen::Index>(keep.size()), n);
  for (Eigen::Index i = 0; i < w.rows(); ++i) w.row(i) = net.points.row(keep[i]);

  double best = 0.0;
  const Eigen::MatrixXd wa = w * a;
  constexpr Eigen::Index kBlock = 256;
  for (Eigen::Index start = 0; start < wa.rows(); start += kBlock) {
    const Eigen::Index len = std::min(kBlock, wa.rows() - start);
    best = std::max(best,
                    (wa.middleRows(start, len) * w.transpose()).cwiseAbs().maxCoeff());
  }

  NetNormBound out;
  out.true_norm = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()[0];
  out.net_bound = best / (1.0 - 3.0 * epsilon);
  out.holds = out.true_norm <= out.net_bound + 1e-9;
  return out;
}

LightHeavySplit light_heavy_split(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                  std::int64_t T, const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || x.size() != n || y.size() != n) {
    throw ShapeMismatch("light/heavy split expects square A and matching vectors");
  }
  if (n > kSplitLimit) throw TooLarge("light/heavy split enumerates pairs, n <= 200");
  if (x.norm() > 1.0 + 1e-12 || y.norm() > 1.0 + 1e-12) {
    throw InvalidArgument("x and y must lie in the unit ball");
  }
  if (T < 1) throw InvalidArgument("split threshold needs T >= 1");

  const double threshold = std::sqrt(static_cast<double>(T) / static_cast<double>(n)) /
                           static_cast<double>(n);
  double light = 0.0, heavy = 0.0, total = 0.0, heavy_mass = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double weight = x[i] * y[j];
      const double term = weight * a(i, j);
      total += term;
      if (std::fabs(weight) <= threshold) {
        light += term;
      } else {
        heavy += term;
        heavy_mass += std::fabs(weight);
      }
    }
  }
  return {std::fabs(light), std::fabs(heavy), std::fabs(total), heavy_mass};
}

}  // namespace bmc
