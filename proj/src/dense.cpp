#include "bmc/dense.hpp"

#include "bmc/errors.hpp"

namespace bmc {

Eigen::MatrixXd dense_transition(const BmcInstance& instance, Eigen::Index max_n) {
  if (instance.n > max_n) throw DenseTooLarge("dense transition matrix capped at n <= " +
                                              std::to_string(max_n));
  const Eigen::Index k = instance.model.K;
  Eigen::MatrixXd out(instance.n, instance.n);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      out.block(instance.offsets[a], instance.offsets[b], instance.cluster_sizes[a],
                instance.cluster_sizes[b])
          .setConstant(instance.model.p(a, b) / static_cast<double>(instance.cluster_sizes[b]));
    }
  }
  return out;
}

Eigen::MatrixXd dense_expected(const BmcInstance& instance, std::int64_t T, Eigen::Index max_n) {
  if (instance.n > max_n) throw DenseTooLarge("dense expected matrix capped at n <= " +
                                              std::to_string(max_n));
  const Eigen::Index k = instance.model.K;
  Eigen::MatrixXd out(instance.n, instance.n);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const double cell = static_cast<double>(T) * instance.model.pi[a] *
                          instance.model.p(a, b) /
                          (static_cast<double>(instance.cluster_sizes[a]) *
                           static_cast<double>(instance.cluster_sizes[b]));
      out.block(instance.offsets[a], instance.offsets[b], instance.cluster_sizes[a],
                instance.cluster_sizes[b])
          .setConstant(cell);
    }
  }
  return out;
}

Eigen::MatrixXd dense_counts(const PathCounts& counts, Eigen::Index max_n) {
  if (counts.n > max_n) throw DenseTooLarge("dense counts matrix capped at n <= " +
                                            std::to_string(max_n));
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(counts.n, counts.n);
  for (int row = 0; row < counts.counts.outerSize(); ++row) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(counts.counts, row); it;
         ++it) {
      out(it.row(), it.col()) = it.value();
    }
  }
  return out;
}

}  // namespace bmc
