#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "joinscout/catalog.hpp"
#include "joinscout/column_matcher.hpp"
#include "joinscout/config.hpp"

namespace joinscout {

/// A column pair confirmed by its values.
struct ValidationResult {
  ColumnMatch match;
  double value_score = 0.0;
  double overlap_s = 0.0;
  std::size_t sampled_left = 0;
  std::size_t sampled_right = 0;
};

struct Rejection {
  ColumnMatch match;
  std::string reason;
  double value_score = 0.0;  // 0 when never computed
};

using Validation = std::variant<ValidationResult, Rejection>;

/// Mean over the non-empty left values of the best token_sort_ratio against
/// any non-empty right value. Asymmetric: the left side is averaged.
/// Throws EmptyColumnError when either side has no non-empty value.
double value_score(std::span<const std::string> left_values, std::span<const std::string> right_values);

/// Fuzzy Jaccard m / (|L| + |R| - m), where m is the size of a greedy
/// one-to-one matching over pairs with token_sort_ratio >= row_threshold,
/// taken in descending similarity. Inputs are treated as sets (duplicates and
/// empty strings ignored). Throws EmptyColumnError on an empty set.
double fuzzy_jaccard(std::span<const std::string> left_distinct, std::span<const std::string> right_distinct,
                     double row_threshold);

/// Size of the greedy matching used by fuzzy_jaccard.
std::size_t greedy_match_count(std::span<const std::string> left_distinct,
                               std::span<const std::string> right_distinct, double row_threshold);

/// Up to `cap` distinct non-empty values of a column: the sorted distinct
/// list, subsampled with a generator seeded from `seed` and the column ref,
/// returned sorted.
std::vector<std::string> sample_distinct(const Column& column, const ColumnRef& ref, std::size_t cap,
                                         std::uint64_t seed);

/// Confirms a candidate by its sampled values. Accepted when
/// value_score >= row_threshold; the overlap is the fuzzy Jaccard of the same
/// samples.
Validation validate(const ColumnMatch& match, const Catalog& catalog, const MatchConfig& config);

/// Validates every match on `jobs` threads. Results keep input order.
std::vector<Validation> validate_all(std::span<const ColumnMatch> matches, const Catalog& catalog,
                                     const MatchConfig& config, std::size_t jobs = 1);

}  // namespace joinscout
