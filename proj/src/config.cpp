#include "bmc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bmc/errors.hpp"

namespace bmc {
namespace {

using nlohmann::json;

RunConfig from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");
  for (const char* key : {"K", "alpha", "p"}) {
    if (!doc.contains(key)) throw InvalidArgument(std::string("config is missing key '") + key + "'");
  }
  const auto k = doc.at("K").get<Eigen::Index>();
  const auto& alpha_json = doc.at("alpha");
  const auto& p_json = doc.at("p");
  if (!alpha_json.is_array() || static_cast<Eigen::Index>(alpha_json.size()) != k) {
    throw InvalidArgument("alpha must be an array of K decimals");
  }
  if (!p_json.is_array() || static_cast<Eigen::Index>(p_json.size()) != k) {
    throw InvalidArgument("p must be a K x K array of arrays");
  }

  Eigen::VectorXd alpha(k);
  for (Eigen::Index i = 0; i < k; ++i) alpha[i] = alpha_json.at(i).get<double>();
  Eigen::MatrixXd p(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const auto& row = p_json.at(r);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) {
      throw InvalidArgument("p must be a K x K array of arrays");
    }
    for (Eigen::Index c = 0; c < k; ++c) p(r, c) = row.at(c).get<double>();
  }

  RunConfig config;
  config.model = validate_model(alpha, p);
  if (doc.contains("spectral")) {
    const auto& s = doc.at("spectral");
    if (s.contains("tol")) config.solver.tol = s.at("tol").get<double>();
    if (s.contains("max_iter")) config.solver.max_iter = s.at("max_iter").get<int>();
    if (s.contains("k")) config.top_k = s.at("k").get<int>();
  }
  return config;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config parse error: ") + e.what());
  }
  try {
    return from_json(doc);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config error: ") + e.what());
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace bmc
