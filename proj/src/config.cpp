#include "joinscout/config.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "joinscout/errors.hpp"

namespace joinscout {

using nlohmann::json;

void MatchConfig::validate() const {
  for (double w : {alpha, beta, gamma}) {
    if (!std::isfinite(w) || w < 0.0) throw ConfigError("weights must be finite and non-negative");
  }
  if (std::abs(alpha + beta + gamma - 1.0) > 1e-9)
    throw ConfigError("alpha + beta + gamma must equal 1");
  for (double t : {column_threshold, row_threshold}) {
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("thresholds must lie in [0, 1]");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon must be positive");
  if (sample_cap == 0) throw ConfigError("sample_cap must be at least 1");
}

MatchConfig config_from_json(const json& node) {
  if (!node.is_object()) throw ConfigError("config must be a JSON object");
  MatchConfig cfg;
  for (const auto& [key, value] : node.items()) {
    try {
      if (key == "alpha") cfg.alpha = value.get<double>();
      else if (key == "beta") cfg.beta = value.get<double>();
      else if (key == "gamma") cfg.gamma = value.get<double>();
      else if (key == "column_threshold") cfg.column_threshold = value.get<double>();
      else if (key == "row_threshold") cfg.row_threshold = value.get<double>();
      else if (key == "epsilon") cfg.epsilon = value.get<double>();
      else if (key == "sample_cap" || key == "seed") {
        if (!value.is_number_unsigned())
          throw ConfigError("config key '" + key + "' must be a non-negative integer");
        if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else cfg.sample_cap = value.get<std::size_t>();
      }
      else if (key == "semantic_provider") cfg.semantic_provider = value.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    } catch (const json::exception& e) {
      throw ConfigError("config key '" + key + "' has the wrong type: " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

MatchConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("config file not found: " + path.string());
  json node;
  try {
    node = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(node);
}

json config_to_json(const MatchConfig& c) {
  return {{"alpha", c.alpha},
          {"beta", c.beta},
          {"gamma", c.gamma},
          {"column_threshold", c.column_threshold},
          {"row_threshold", c.row_threshold},
          {"epsilon", c.epsilon},
          {"sample_cap", c.sample_cap},
          {"seed", c.seed},
          {"semantic_provider", c.semantic_provider}};
}

}  // namespace joinscout
