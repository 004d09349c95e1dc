#include "joinscout/row_validator.hpp"

#include <algorithm>
#include <tuple>

#include "joinscout/errors.hpp"
#include "joinscout/parallel.hpp"
#include "joinscout/rng.hpp"
#include "joinscout/similarity.hpp"

namespace joinscout {

namespace {

std::vector<std::string> distinct_nonempty(std::span<const std::string> values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    if (!v.empty()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::u32string> sort_keys(std::span<const std::string> values) {
  std::vector<std::u32string> keys;
  keys.reserve(values.size());
  for (const auto& v : values) keys.push_back(token_sort_key(v));
  return keys;
}

// Row-major token_sort_ratio matrix.
std::vector<double> similarity_matrix(std::span<const std::string> left, std::span<const std::string> right) {
  const auto lk = sort_keys(left);
  const auto rk = sort_keys(right);
  std::vector<double> sim(left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) sim[i * right.size() + j] = indel_ratio(lk[i], rk[j]);
  }
  return sim;
}

double mean_row_max(const std::vector<double>& sim, std::size_t rows, std::size_t cols) {
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < cols; ++j) best = std::max(best, sim[i * cols + j]);
    total += best;
  }
  return total / static_cast<double>(rows);
}

// Greedy one-to-one matching in descending similarity. The tie-break key
// (min, max) of the two strings does not depend on which side is which, so
// swapping the inputs yields the same matching.
std::size_t greedy_count(const std::vector<double>& sim, std::span<const std::string> left,
                         std::span<const std::string> right, double threshold) {
  struct Candidate {
    double sim;
    std::size_t i, j;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const double s = sim[i * right.size() + j];
      if (s >= threshold) candidates.push_back({s, i, j});
    }
  }
  auto key = [&](const Candidate& c) {
    const std::string& a = left[c.i];
    const std::string& b = right[c.j];
    return std::tie(std::min(a, b), std::max(a, b));
  };
  std::sort(candidates.begin(), candidates.end(), [&](const Candidate& x, const Candidate& y) {
    if (x.sim != y.sim) return x.sim > y.sim;
    const auto kx = key(x), ky = key(y);
    if (kx != ky) return kx < ky;
    return std::tie(left[x.i], right[x.j]) < std::tie(left[y.i], right[y.j]);
  });
  std::vector<bool> used_left(left.size()), used_right(right.size());
  std::size_t matched = 0;
  for (const auto& c : candidates) {
    if (used_left[c.i] || used_right[c.j]) continue;
    used_left[c.i] = used_right[c.j] = true;
    ++matched;
  }
  return matched;
}

}  // namespace

double value_score(std::span<const std::string> left_values, std::span<const std::string> right_values) {
  std::vector<std::string> left, right;
  for (const auto& v : left_values)
    if (!v.empty()) left.push_back(v);
  for (const auto& v : right_values)
    if (!v.empty()) right.push_back(v);
  if (left.empty() || right.empty()) throw EmptyColumnError("value_score needs non-empty values on both sides");
  return mean_row_max(similarity_matrix(left, right), left.size(), right.size());
}

std::size_t greedy_match_count(std::span<const std::string> left_distinct,
                               std::span<const std::string> right_distinct, double row_threshold) {
  const auto left = distinct_nonempty(left_distinct);
  const auto right = distinct_nonempty(right_distinct);
  if (left.empty() || right.empty()) throw EmptyColumnError("fuzzy_jaccard needs non-empty sets");
  return greedy_count(similarity_matrix(left, right), left, right, row_threshold);
}

double fuzzy_jaccard(std::span<const std::string> left_distinct, std::span<const std::string> right_distinct,
                     double row_threshold) {
  const auto left = distinct_nonempty(left_distinct);
  const auto right = distinct_nonempty(right_distinct);
  if (left.empty() || right.empty()) throw EmptyColumnError("fuzzy_jaccard needs non-empty sets");
  const std::size_t m = greedy_count(similarity_matrix(left, right), left, right, row_threshold);
  return static_cast<double>(m) / static_cast<double>(left.size() + right.size() - m);
}

std::vector<std::string> sample_distinct(const Column& column, const ColumnRef& ref, std::size_t cap,
                                         std::uint64_t seed) {
  std::vector<std::string> values = column.distinct_values();
  if (values.size() <= cap) return values;
  Rng rng(seed ^ fnv1a64(ref.qualified()));
  for (std::size_t i = 0; i < cap; ++i) {
    const std::size_t pick = i + rng.index(values.size() - i);
    std::swap(values[i], values[pick]);
  }
  values.resize(cap);
  std::sort(values.begin(), values.end());
  return values;
}

Validation validate(const ColumnMatch& match, const Catalog& catalog, const MatchConfig& config) {
  const auto left = sample_distinct(catalog.column(match.left), match.left, config.sample_cap, config.seed);
  const auto right = sample_distinct(catalog.column(match.right), match.right, config.sample_cap, config.seed);
  if (left.empty() || right.empty()) return Rejection{match, "column has no non-empty values"};

  const auto sim = similarity_matrix(left, right);
  const double score = mean_row_max(sim, left.size(), right.size());
  if (!(score >= config.row_threshold)) return Rejection{match, "value_score below row_threshold", score};

  const std::size_t m = greedy_count(sim, left, right, config.row_threshold);
  ValidationResult result{match, score, static_cast<double>(m) / static_cast<double>(left.size() + right.size() - m),
                          left.size(), right.size()};
  return result;
}

std::vector<Validation> validate_all(std::span<const ColumnMatch> matches, const Catalog& catalog,
                                     const MatchConfig& config, std::size_t jobs) {
  std::vector<Validation> out(matches.size());
  parallel_for(matches.size(), jobs, [&](std::size_t i) { out[i] = validate(matches[i], catalog, config); });
  return out;
}

}  // namespace joinscout
