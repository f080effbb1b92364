#include "bmc/sampler.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "bmc/alias.hpp"
#include "bmc/errors.hpp"
#include "bmc/rng.hpp"

namespace bmc {
namespace {

constexpr std::int64_t kMaxPathLength = std::int64_t{1} << 40;

void finalize_from_triplets(PathCounts& pc,
                            std::vector<Eigen::Triplet<double>>& triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
    return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
  });
  pc.counts.resize(pc.n, pc.n);
  pc.counts.setFromTriplets(triplets.begin(), triplets.end());
  pc.counts.makeCompressed();
}

}  // namespace

PathCounts sample_path_counts(const BmcInstance& instance, std::int64_t T, std::uint64_t seed) {
  if (T < 0) throw InvalidArgument("path length must be nonnegative");
  if (T > kMaxPathLength) throw TooLarge("path length exceeds 2^40");

  const Eigen::Index k = instance.model.K;
  Xoshiro256 rng(seed);

  std::vector<AliasTable> row_tables;
  row_tables.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index c = 0; c < k; ++c) {
    row_tables.emplace_back(instance.model.p.row(c).transpose());
  }
  const AliasTable pi_table(instance.model.pi);

  const auto draw_state_in = [&](Eigen::Index cluster) {
    return instance.offsets[cluster] +
           static_cast<Eigen::Index>(
               rng.bounded(static_cast<std::uint64_t>(instance.cluster_sizes[cluster])));
  };

  PathCounts pc;
  pc.n = instance.n;
  pc.T = T;
  pc.seed = seed;
  pc.out_degree = Eigen::VectorXd::Zero(instance.n);
  pc.in_degree = Eigen::VectorXd::Zero(instance.n);

  Eigen::Index x = draw_state_in(static_cast<Eigen::Index>(pi_table.draw(rng)));
  pc.start_state = x;

  std::unordered_map<std::uint64_t, std::int64_t> acc;
  acc.reserve(static_cast<std::size_t>(std::min<std::int64_t>(T, 1 << 20)));
  for (std::int64_t t = 0; t < T; ++t) {
    const Eigen::Index next_cluster =
        static_cast<Eigen::Index>(row_tables[static_cast<std::size_t>(instance.cluster_of(x))].draw(rng));
    const Eigen::Index y = draw_state_in(next_cluster);
    ++acc[static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(instance.n) +
          static_cast<std::uint64_t>(y)];
    pc.out_degree[x] += 1.0;
    pc.in_degree[y] += 1.0;
    x = y;
  }
  pc.end_state = x;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(acc.size());
  for (const auto& [key, count] : acc) {
    triplets.emplace_back(static_cast<Eigen::Index>(key / static_cast<std::uint64_t>(instance.n)),
                          static_cast<Eigen::Index>(key % static_cast<std::uint64_t>(instance.n)),
                          static_cast<double>(count));
  }
  finalize_from_triplets(pc, triplets);
  return pc;
}

Eigen::MatrixXd empirical_mean_counts(const BmcInstance& instance, std::int64_t T,
                                      int replications, std::uint64_t seed) {
  if (instance.n > 2000) throw DenseTooLarge("empirical_mean_counts supports n <= 2000");
  if (replications < 1) throw InvalidArgument("need at least one replication");

  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(instance.n, instance.n);
  for (int r = 0; r < replications; ++r) {
    const PathCounts pc =
        sample_path_counts(instance, T, seed ^ static_cast<std::uint64_t>(r));
    for (int row = 0; row < pc.counts.outerSize(); ++row) {
      for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(pc.counts, row); it;
           ++it) {
        mean(it.row(), it.col()) += it.value();
      }
    }
  }
  mean /= static_cast<double>(replications);
  return mean;
}

void write_counts(const PathCounts& pc, std::ostream& out) {
  out << pc.n << ' ' << pc.T << ' ' << pc.seed << '\n';
  for (int row = 0; row < pc.counts.outerSize(); ++row) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(pc.counts, row); it;
         ++it) {
      out << it.row() + 1 << ' ' << it.col() + 1 << ' '
          << static_cast<std::int64_t>(it.value()) << '\n';
    }
  }
}

void write_counts_file(const PathCounts& pc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_counts(pc, out);
  if (!out) throw IoError("write to " + path + " failed");
}

PathCounts read_counts(std::istream& in) {
  PathCounts pc;
  std::string header;
  if (!std::getline(in, header)) throw IoError("missing counts header");
  {
    std::istringstream hs(header);
    if (!(hs >> pc.n >> pc.T >> pc.seed)) throw IoError("malformed counts header");
  }
  pc.out_degree = Eigen::VectorXd::Zero(pc.n);
  pc.in_degree = Eigen::VectorXd::Zero(pc.n);

  std::vector<Eigen::Triplet<double>> triplets;
  Eigen::Index x = 0, y = 0;
  std::int64_t c = 0;
  while (in >> x >> y >> c) {
    if (x < 1 || x > pc.n || y < 1 || y > pc.n) throw IoError("state index out of range");
    triplets.emplace_back(x - 1, y - 1, static_cast<double>(c));
    pc.out_degree[x - 1] += static_cast<double>(c);
    pc.in_degree[y - 1] += static_cast<double>(c);
  }
  finalize_from_triplets(pc, triplets);
  return pc;
}

}  // namespace bmc
