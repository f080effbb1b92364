#pragma once

#include <Eigen/SparseCore>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "bmc/model.hpp"

namespace bmc {

/// Transition counts of one sample path of length T (T transitions,
/// T+1 states), stored in compressed sparse row form. Values are
/// nonnegative integers held exactly in doubles (T is capped at 2^40).
///
/// For freshly sampled counts, counts.sum() == T and per-state flow is
/// conserved: out_degree[x] == in_degree[x] except at the path endpoints,
/// where they differ by at most 1. Trimmed counts (see trim.hpp) keep the
/// original T but satisfy counts.sum() <= T.
struct PathCounts {
  Eigen::Index n = 0;
  std::int64_t T = 0;
  std::uint64_t seed = 0;
  Eigen::SparseMatrix<double, Eigen::RowMajor> counts;
  Eigen::VectorXd out_degree;
  Eigen::VectorXd in_degree;
  Eigen::Index start_state = 0;
  Eigen::Index end_state = 0;

  double total() const { return counts.sum(); }
};

/// Samples a stationary-start path and accumulates its transition counts.
///
/// X_0 is drawn from the stationary distribution; every step draws the
/// destination cluster from row sigma(X_t) of p via an alias table, then a
/// uniform state within that cluster. Each transition consumes exactly three
/// raw draws from a Xoshiro256 stream seeded with `seed`, so the result is a
/// pure function of (instance, T, seed).
PathCounts sample_path_counts(const BmcInstance& instance, std::int64_t T, std::uint64_t seed);

/// Entrywise average of `replications` independent PathCounts, with
/// replication r seeded by `seed ^ r`. Dense output; throws DenseTooLarge
/// for n > 2000.
Eigen::MatrixXd empirical_mean_counts(const BmcInstance& instance, std::int64_t T,
                                      int replications, std::uint64_t seed);

/// Text triplet format: header "n T seed", then one line "x y count" per
/// nonzero with 1-based indices, sorted lexicographically.
void write_counts(const PathCounts& counts, std::ostream& out);
void write_counts_file(const PathCounts& counts, const std::string& path);
PathCounts read_counts(std::istream& in);

}  // namespace bmc
