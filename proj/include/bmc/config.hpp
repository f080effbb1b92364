#pragma once

#include <string>

#include "bmc/model.hpp"
#include "bmc/spectral.hpp"

namespace bmc {

/// Model configuration file: a JSON object with keys
///   K      integer
///   alpha  array of K decimals
///   p      row-major array of K arrays of K decimals
/// and optionally
///   spectral { "tol": ..., "max_iter": ..., "k": ... }
/// Decimals are parsed exactly (correctly rounded); stochasticity is checked
/// after parsing by validate_model.
struct RunConfig {
  ClusterModel model;
  SolverParams solver;
  int top_k = 5;
};

RunConfig load_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace bmc
