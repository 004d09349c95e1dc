#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "joinscout/catalog.hpp"
#include "joinscout/join_graph.hpp"
#include "joinscout/rng.hpp"

namespace joinscout {

struct FuzzConfig {
  std::uint64_t seed = 42;
  /// Chance that a fuzzified person or facility name also loses characters.
  double char_removal_rate = 0.5;
  /// Chance that a fuzzified person name has its parts reversed.
  double reorder_rate = 0.5;
  std::map<std::string, std::string, std::less<>> synonym_map = default_synonyms();
  std::vector<std::string> suffix_pool = {"Clinic", "Hospital"};
  /// Share of the copied values that get fuzzified.
  double fuzzify_fraction = 0.3;

  static std::map<std::string, std::string, std::less<>> default_synonyms();
  /// Throws ConfigError when a rate is outside [0, 1].
  void validate() const;
};

// Fuzzification transforms.

/// Deletes one or two characters at random positions. Throws
/// ValueTooShortError for values under three characters.
std::string remove_chars(std::string_view value, Rng& rng);

/// Reverses whitespace-separated parts ("John Smith" -> "Smith John").
/// Throws SingleTokenError for fewer than two parts.
std::string reorder_name(std::string_view value);

/// Mapped value when `value` is a key of the map, otherwise `value`.
std::string inject_synonym(std::string_view value, const std::map<std::string, std::string, std::less<>>& synonyms);

/// `value + " " + suffix` with the suffix drawn from the pool; unchanged for an
/// empty pool.
std::string vary_label(std::string_view value, const std::vector<std::string>& suffix_pool, Rng& rng);

/// A generated value together with the pristine value it was derived from.
struct FuzzRecord {
  ColumnRef column;
  std::size_t row = 0;
  std::string value;
  std::string original;
  std::vector<std::string> transforms;
};

/// What the generator knows to be joinable across databases.
struct GroundTruth {
  std::uint64_t seed = 0;
  std::size_t scale = 1;
  double fuzzify_fraction = 0.0;
  std::vector<std::pair<ColumnRef, ColumnRef>> joinable_pairs;
  std::vector<FuzzRecord> fuzzified;

  nlohmann::json to_json() const;
  static GroundTruth from_json(const nlohmann::json& node);
};

struct GeneratedCatalog {
  Catalog catalog;
  GroundTruth truth;
};

/// Builds the four-database healthcare catalog (14 tables). Row counts scale
/// linearly with `scale` (>= 1). Identical config and scale give identical
/// output.
GeneratedCatalog generate_catalog(const FuzzConfig& config, std::size_t scale = 1);

/// Writes manifest.json, the CSV files and ground_truth.json under `out_dir`,
/// creating it if needed. Throws IoError when its parent does not exist.
void write_generated(const GeneratedCatalog& generated, const std::filesystem::path& out_dir);

GroundTruth load_ground_truth(const std::filesystem::path& path);

/// Table-pair level comparison of discovered fuzzy edges with the ground truth.
struct EdgeEvaluation {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 0.0;  // 0 when no fuzzy edge was discovered
  double recall = 0.0;     // 1 when the ground truth is empty
};

EdgeEvaluation evaluate_fuzzy_edges(const JoinGraph& graph, const GroundTruth& truth);

}  // namespace joinscout
