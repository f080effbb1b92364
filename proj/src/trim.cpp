#include "bmc/trim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bmc/errors.hpp"

namespace bmc {

Eigen::Index default_trim_count(Eigen::Index n, std::int64_t T) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (T < 0) throw InvalidArgument("T must be nonnegative");
  const double m = std::floor(static_cast<double>(n) *
                              std::exp(-static_cast<double>(T) / static_cast<double>(n)));
  return static_cast<Eigen::Index>(m);
}

TrimSet trim_set(const PathCounts& counts, Eigen::Index m) {
  if (m < 0 || m > counts.n) throw InvalidArgument("trim size must be in [0, n]");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(counts.n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::partial_sort(order.begin(), order.begin() + m, order.end(),
                    [&](Eigen::Index a, Eigen::Index b) {
                      if (counts.in_degree[a] != counts.in_degree[b]) {
                        return counts.in_degree[a] > counts.in_degree[b];
                      }
                      return a < b;
                    });

  TrimSet set;
  set.m = m;
  set.gamma_complement.assign(order.begin(), order.begin() + m);
  std::sort(set.gamma_complement.begin(), set.gamma_complement.end());
  return set;
}

PathCounts apply_trim(const PathCounts& counts, const TrimSet& gamma) {
  std::vector<char> removed(static_cast<std::size_t>(counts.n), 0);
  for (const Eigen::Index y : gamma.gamma_complement) {
    if (y < 0 || y >= counts.n) throw InvalidArgument("trim set state out of range");
    removed[static_cast<std::size_t>(y)] = 1;
  }

  PathCounts out;
  out.n = counts.n;
  out.T = counts.T;
  out.seed = counts.seed;
  out.start_state = counts.start_state;
  out.end_state = counts.end_state;
  out.out_degree = Eigen::VectorXd::Zero(counts.n);
  out.in_degree = Eigen::VectorXd::Zero(counts.n);

  std::vector<Eigen::Triplet<double>> kept;
  kept.reserve(static_cast<std::size_t>(counts.counts.nonZeros()));
  for (int row = 0; row < counts.counts.outerSize(); ++row) {
    if (removed[static_cast<std::size_t>(row)]) continue;
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(counts.counts, row); it;
         ++it) {
      if (removed[static_cast<std::size_t>(it.col())]) continue;
      kept.emplace_back(it.row(), it.col(), it.value());
      out.out_degree[it.row()] += it.value();
      out.in_degree[it.col()] += it.value();
    }
  }
  out.counts.resize(out.n, out.n);
  out.counts.setFromTriplets(kept.begin(), kept.end());
  out.counts.makeCompressed();
  return out;
}

TrimPolicy TrimPolicy::parse(const std::string& text) {
  TrimPolicy policy;
  if (text == "auto") {
    policy.kind = Kind::Auto;
  } else if (text == "none") {
    policy.kind = Kind::None;
  } else if (text.rfind("m=", 0) == 0) {
    policy.kind = Kind::Fixed;
    try {
      policy.fixed_m = static_cast<Eigen::Index>(std::stoll(text.substr(2)));
    } catch (const std::exception&) {
      throw InvalidArgument("bad trim size in '" + text + "'");
    }
    if (policy.fixed_m < 0) throw InvalidArgument("trim size must be nonnegative");
  } else {
    throw InvalidArgument("trim policy must be auto, none, or m=<int>");
  }
  return policy;
}

Eigen::Index TrimPolicy::resolve(Eigen::Index n, std::int64_t T) const {
  switch (kind) {
    case Kind::Auto:
      return default_trim_count(n, T);
    case Kind::None:
      return 0;
    case Kind::Fixed:
      return std::min(fixed_m, n);
  }
  return 0;
}

std::string TrimPolicy::to_string() const {
  switch (kind) {
    case Kind::Auto:
      return "auto";
    case Kind::None:
      return "none";
    case Kind::Fixed:
      return "m=" + std::to_string(fixed_m);
  }
  return "none";
}

}  // namespace bmc
