#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace joinscout {

/// Discovery parameters. Weights combine the three column-name scores;
/// thresholds are inclusive.
struct MatchConfig {
  double alpha = 0.4;  // name similarity
  double beta = 0.3;   // semantic similarity
  double gamma = 0.3;  // token overlap
  double column_threshold = 0.6;
  double row_threshold = 0.5;
  double epsilon = 1e-6;
  std::size_t sample_cap = 500;
  std::uint64_t seed = 42;
  std::string semantic_provider = "lexicon";

  /// Throws ConfigError when weights are negative or do not sum to 1 within
  /// 1e-9, a threshold is outside [0, 1], epsilon is not positive, or
  /// sample_cap is zero.
  void validate() const;
};

/// Reads a config object; absent keys keep their defaults, unknown keys are
/// rejected. The result is validated.
MatchConfig config_from_json(const nlohmann::json& node);
MatchConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const MatchConfig& config);

}  // namespace joinscout
