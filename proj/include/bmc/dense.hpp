#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "bmc/model.hpp"
#include "bmc/sampler.hpp"

namespace bmc {

/// Dense materializations, for oracle-scale work only. Each throws
/// DenseTooLarge beyond `max_n`; the transition and expected matrices are
/// O(n^2) and are deliberately never formed by the matrix-free paths.

Eigen::MatrixXd dense_transition(const BmcInstance& instance, Eigen::Index max_n = 2000);

Eigen::MatrixXd dense_expected(const BmcInstance& instance, std::int64_t T,
                               Eigen::Index max_n = 2000);

Eigen::MatrixXd dense_counts(const PathCounts& counts, Eigen::Index max_n = 2000);

}  // namespace bmc
