#include "bmc/spectral.hpp"

namespace bmc {

double scaled_spectral_norm(const PathCounts& trimmed, const BmcInstance& instance,
                            std::int64_t T, SolverParams params) {
  if (T == 0) return 0.0;
  const CenteredOperator op(trimmed, instance, T);
  const SpectrumEstimate top = top_singular_values(op, 1, params);
  return std::sqrt(static_cast<double>(instance.n) / static_cast<double>(T)) * top.values[0];
}

double row_lower_bound(const PathCounts& counts, const BmcInstance& instance, std::int64_t T) {
  if (counts.n != instance.n) throw ShapeMismatch("counts do not match instance");
  const Eigen::Index k = instance.model.K;
  const Eigen::Index a = instance.cluster_of(0);
  const double pi_0 = instance.stationary(0);

  // ||row||^2 for the all-zero row of Nhat, then correct for each nonzero.
  double sum = 0.0;
  for (Eigen::Index b = 0; b < k; ++b) {
    const double cell = static_cast<double>(T) * pi_0 * instance.model.p(a, b) /
                        static_cast<double>(instance.cluster_sizes[b]);
    sum += static_cast<double>(instance.cluster_sizes[b]) * cell * cell;
  }
  if (counts.counts.outerSize() > 0) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(counts.counts, 0); it;
         ++it) {
      const Eigen::Index b = instance.cluster_of(it.col());
      const double cell = static_cast<double>(T) * pi_0 * instance.model.p(a, b) /
                          static_cast<double>(instance.cluster_sizes[b]);
      const double diff = it.value() - cell;
      sum += diff * diff - cell * cell;
    }
  }
  return std::sqrt(std::max(sum, 0.0));
}

SpectrumEstimate spectral_gap_profile(const PathCounts& trimmed, const BmcInstance& instance,
                                      int k, SolverParams params) {
  if (k < instance.model.K + 1) {
    throw InvalidArgument("profile needs k >= K + 1 to show the gap");
  }
  return top_singular_values(SparseOperator(trimmed.counts), k, params);
}

}  // namespace bmc
