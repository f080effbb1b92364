#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmc/sampler.hpp"

namespace bmc {

enum class TrimCriterion { InDegree };

/// The set Gamma^c of states whose rows and columns get zeroed. Selected as
/// the m states of largest in-degree, ties broken toward the smaller state
/// index, so min in-degree over Gamma^c >= max in-degree over Gamma.
struct TrimSet {
  std::vector<Eigen::Index> gamma_complement;  // sorted ascending
  Eigen::Index m = 0;
  TrimCriterion criterion = TrimCriterion::InDegree;
};

/// Default trim size floor(n * exp(-T/n)).
Eigen::Index default_trim_count(Eigen::Index n, std::int64_t T);

/// Picks the m most-visited states by in-degree.
TrimSet trim_set(const PathCounts& counts, Eigen::Index m);

/// Returns counts with all entries on the rows and columns of Gamma^c set to
/// zero and the degree vectors recomputed. The T field keeps the original
/// path length, so total() <= T afterwards.
PathCounts apply_trim(const PathCounts& counts, const TrimSet& gamma);

/// Trim policy as exposed on the command line: auto | none | m=<int>.
struct TrimPolicy {
  enum class Kind { Auto, None, Fixed };
  Kind kind = Kind::None;
  Eigen::Index fixed_m = 0;

  static TrimPolicy parse(const std::string& text);
  Eigen::Index resolve(Eigen::Index n, std::int64_t T) const;
  std::string to_string() const;
};

}  // namespace bmc
