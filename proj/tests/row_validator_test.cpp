#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "joinscout/config.hpp"
#include "joinscout/errors.hpp"
#include "joinscout/fuzzgen.hpp"
#include "joinscout/rng.hpp"
#include "joinscout/row_validator.hpp"
#include "joinscout/similarity.hpp"
#include "test_support.hpp"

namespace joinscout {
namespace {

using Strings = std::vector<std::string>;

double brute_value_score(const Strings& left, const Strings& right) {
  double total = 0.0;
  for (const auto& x : left) {
    double best = 0.0;
    for (const auto& y : right) best = std::max(best, token_sort_ratio(x, y));
    total += best;
  }
  return total / static_cast<double>(left.size());
}

double classical_jaccard(const Strings& a, const Strings& b) {
  const std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::size_t inter = 0;
  for (const auto& v : sa) inter += sb.count(v);
  return static_cast<double>(inter) / static_cast<double>(sa.size() + sb.size() - inter);
}

// Maximum bipartite matching by augmenting paths.
std::size_t optimal_matching(const Strings& left, const Strings& right, double tau) {
  std::vector<int> owner(right.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (seen[j] || token_sort_ratio(left[i], right[j]) < tau) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  std::size_t m = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<bool> seen(right.size());
    if (augment(i, seen)) ++m;
  }
  return m;
}

Strings random_set(std::mt19937_64& rng, std::size_t n, std::string_view alphabet = "abcdef") {
  std::set<std::string> out;
  while (out.size() < n) out.insert(testing::random_word(rng, 2, 6, alphabet));
  return {out.begin(), out.end()};
}

TEST(ValueScore, Examples) {
  const Strings names{"John Smith", "Mary Jones", "Fox-Medina"};
  EXPECT_EQ(value_score(names, names), 1.0);
  const Strings l{"abc"}, r{"xyz"};
  EXPECT_EQ(value_score(l, r), token_sort_ratio("abc", "xyz"));
}

TEST(ValueScore, CharRemovalAgainstBruteForce) {
  const Strings names{"John Smith",    "Mary Jones",   "Reed, Blair and Allen", "Fox-Medina", "Amoxicillin",
                      "Patricia Hunt", "Daniel Floyd", "Westside Clinic",       "Ibuprofen",  "Linda Garcia"};
  Rng rng(42);
  Strings fuzzed;
  for (const auto& n : names) fuzzed.push_back(remove_chars(n, rng));
  const double expected = brute_value_score(names, fuzzed);
  EXPECT_EQ(value_score(names, fuzzed), expected);
  EXPECT_GT(expected, 0.5);
  EXPECT_LT(expected, 1.0);
}

TEST(ValueScore, IgnoresEmptyAndRejectsAllEmpty) {
  const Strings l{"abc", ""}, r{"abc"};
  EXPECT_EQ(value_score(l, r), 1.0);
  const Strings empty{"", ""};
  EXPECT_THROW(value_score(empty, r), EmptyColumnError);
  EXPECT_THROW(value_score(r, Strings{}), EmptyColumnError);
}

TEST(ValueScore, MonotoneUnderAddedCopies) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const Strings left = random_set(rng, 1 + rng() % 8);
    Strings right = random_set(rng, 1 + rng() % 8, "defghi");
    double prev = value_score(left, right);
    for (const auto& v : left) {
      right.push_back(v);
      const double next = value_score(left, right);
      EXPECT_GE(next, prev);
      prev = next;
    }
    EXPECT_DOUBLE_EQ(prev, 1.0);
  }
}

TEST(FuzzyJaccard, Examples) {
  const Strings same{"alpha", "beta", "gamma"};
  EXPECT_EQ(fuzzy_jaccard(same, same, 0.5), 1.0);
  const Strings a{"aaaa", "bbbb"}, b{"xxxx", "yyyy"};
  EXPECT_EQ(fuzzy_jaccard(a, b, 0.5), 0.0);
  const Strings l{"John Smith", "Amoxicillin"}, r{"Smith John", "Ibuprofen"};
  EXPECT_EQ(greedy_match_count(l, r, 0.5), 1u);
  EXPECT_DOUBLE_EQ(fuzzy_jaccard(l, r, 0.5), 1.0 / 3.0);
}

TEST(FuzzyJaccard, EmptySetThrows) {
  const Strings some{"a"};
  EXPECT_THROW(fuzzy_jaccard(Strings{}, some, 0.5), EmptyColumnError);
  EXPECT_THROW(fuzzy_jaccard(some, Strings{""}, 0.5), EmptyColumnError);
}

TEST(FuzzyJaccard, ReducesToClassicalJaccardAtThresholdOne) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    const Strings a = random_set(rng, 1 + rng() % 8, "abc");
    const Strings b = random_set(rng, 1 + rng() % 8, "abc");
    EXPECT_DOUBLE_EQ(fuzzy_jaccard(a, b, 1.0), classical_jaccard(a, b));
  }
}

TEST(FuzzyJaccard, SymmetricAndBoundedByOptimalMatching) {
  std::mt19937_64 rng(34);
  std::size_t unambiguous = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const Strings a = random_set(rng, 1 + rng() % 7, "abcd");
    const Strings b = random_set(rng, 1 + rng() % 7, "abcd");
    const double tau = 0.5;
    EXPECT_EQ(fuzzy_jaccard(a, b, tau), fuzzy_jaccard(b, a, tau));
    const std::size_t greedy = greedy_match_count(a, b, tau);
    const std::size_t best = optimal_matching(a, b, tau);
    EXPECT_LE(greedy, best);

    std::vector<std::size_t> deg_a(a.size()), deg_b(b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (token_sort_ratio(a[i], b[j]) >= tau) ++deg_a[i], ++deg_b[j];
    const bool simple = std::all_of(deg_a.begin(), deg_a.end(), [](auto d) { return d <= 1; }) &&
                        std::all_of(deg_b.begin(), deg_b.end(), [](auto d) { return d <= 1; });
    if (simple) {
      ++unambiguous;
      EXPECT_EQ(greedy, best);
    }
  }
  EXPECT_GT(unambiguous, 10u);
}

TEST(Sampling, CapDeterminismAndSubset) {
  Strings values;
  for (int i = 0; i < 60; ++i) values.push_back("v" + std::to_string(i));
  const Column col("c", values);
  const ColumnRef ref{"d", "t", "c"};
  const auto s1 = sample_distinct(col, ref, 10, 42);
  const auto s2 = sample_distinct(col, ref, 10, 42);
  EXPECT_EQ(s1, s2);
  ASSERT_EQ(s1.size(), 10u);
  EXPECT_TRUE(std::is_sorted(s1.begin(), s1.end()));
  for (const auto& v : s1) EXPECT_TRUE(std::binary_search(col.distinct_values().begin(), col.distinct_values().end(), v));
  EXPECT_NE(sample_distinct(col, ref, 10, 43), s1);
  EXPECT_EQ(sample_distinct(col, ref, 100, 42), col.distinct_values());
}

Catalog two_column_catalog(const Strings& left, const Strings& right) {
  std::vector<std::vector<std::string>> lrows, rrows;
  for (const auto& v : left) lrows.push_back({v});
  for (const auto& v : right) rrows.push_back({v});
  return Catalog({Database{"a", {testing::make_table("L", {"x"}, lrows)}},
                  Database{"b", {testing::make_table("R", {"y"}, rrows)}}});
}

ColumnMatch lr_match() {
  ColumnMatch m;
  m.left = {"a", "L", "x"};
  m.right = {"b", "R", "y"};
  return m;
}

TEST(Validate, IdenticalColumnsAccepted) {
  const Strings v{"alpha", "beta", "gamma", "beta"};
  const auto result = validate(lr_match(), two_column_catalog(v, v), MatchConfig{});
  ASSERT_TRUE(std::holds_alternative<ValidationResult>(result));
  const auto& ok = std::get<ValidationResult>(result);
  EXPECT_EQ(ok.value_score, 1.0);
  EXPECT_EQ(ok.overlap_s, 1.0);
  EXPECT_EQ(ok.sampled_left, 3u);
}

TEST(Validate, UuidsAgainstNamesRejected) {
  Rng rng(9);
  Strings ids, names;
  const char* hex = "0123456789abcdef";
  const char* words[] = {"Mary", "Jones", "Daniel", "Floyd", "Linda", "Garcia", "Patricia", "Hunt"};
  for (int i = 0; i < 40; ++i) {
    std::string id;
    for (int k = 0; k < 32; ++k) {
      if (k == 8 || k == 12 || k == 16 || k == 20) id += '-';
      id += hex[rng.index(16)];
    }
    ids.push_back(id);
    names.push_back(std::string(words[static_cast<std::size_t>(i) % 8]) + " " + words[static_cast<std::size_t>(i * 3 + 1) % 8]);
  }
  const auto result = validate(lr_match(), two_column_catalog(ids, names), MatchConfig{});
  ASSERT_TRUE(std::holds_alternative<Rejection>(result));
  EXPECT_LT(std::get<Rejection>(result).value_score, 0.5);
  const std::set<std::string> id_set(ids.begin(), ids.end()), name_set(names.begin(), names.end());
  EXPECT_EQ(std::get<Rejection>(result).value_score,
            brute_value_score({id_set.begin(), id_set.end()}, {name_set.begin(), name_set.end()}));
}

TEST(Validate, EmptyColumnRejected) {
  const auto result = validate(lr_match(), two_column_catalog({"", ""}, {"x"}), MatchConfig{});
  ASSERT_TRUE(std::holds_alternative<Rejection>(result));
}

TEST(Validate, ClinicNamesAgainstSurveyAccepted) {
  const auto generated = generate_catalog(FuzzConfig{}, 1);
  ColumnMatch m;
  m.left = {"hospital_db", "Clinics", "clinic_name"};
  m.right = {"public_info_db", "Hospital_Survey", "hospital_name"};
  const auto result = validate(m, generated.catalog, MatchConfig{});
  ASSERT_TRUE(std::holds_alternative<ValidationResult>(result));
  const auto& ok = std::get<ValidationResult>(result);
  EXPECT_GT(ok.overlap_s, 0.0);
  EXPECT_LE(ok.overlap_s, 1.0);
  EXPECT_GE(ok.value_score, 0.5);
}

TEST(Validate, ParallelMatchesSerial) {
  const auto generated = generate_catalog(FuzzConfig{}, 1);
  std::vector<ColumnMatch> matches;
  for (const auto& [l, r] : generated.truth.joinable_pairs) {
    ColumnMatch m;
    m.left = l;
    m.right = r;
    matches.push_back(m);
  }
  const auto serial = validate_all(matches, generated.catalog, MatchConfig{}, 1);
  const auto threaded = validate_all(matches, generated.catalog, MatchConfig{}, 3);
  ASSERT_EQ(serial.size(), threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    ASSERT_EQ(serial[i].index(), threaded[i].index());
    if (const auto* ok = std::get_if<ValidationResult>(&serial[i])) {
      EXPECT_EQ(ok->overlap_s, std::get<ValidationResult>(threaded[i]).overlap_s);
      EXPECT_EQ(ok->value_score, std::get<ValidationResult>(threaded[i]).value_score);
    }
  }
}

}  // namespace
}  // namespace joinscout
