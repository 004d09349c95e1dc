#pragma once

#include <cstddef>
#include <vector>

#include "joinscout/catalog.hpp"
#include "joinscout/config.hpp"
#include "joinscout/similarity.hpp"

namespace joinscout {

struct CandidatePair {
  ColumnRef left;
  ColumnRef right;
};

/// A scored pair of columns from different databases.
struct ColumnMatch {
  ColumnRef left;
  ColumnRef right;
  double name_sim = 0.0;
  double semantic_sim = 0.0;
  double token_overlap = 0.0;
  double total_score = 0.0;
};

/// Every unordered pair of columns whose tables live in different databases.
/// The left column always comes from the database listed first in the
/// catalog; order is catalog order (databases, tables, columns).
std::vector<CandidatePair> candidate_pairs(const Catalog& catalog);

/// Scores two columns by name. The total is
/// alpha*name_sim + beta*semantic_sim + gamma*token_overlap.
ColumnMatch score_pair(const ColumnRef& left, const ColumnRef& right, const MatchConfig& config,
                       const SemanticProvider& provider);

/// Keeps matches with total_score >= column_threshold, sorted by descending
/// total_score, ties broken by (left, right) refs.
std::vector<ColumnMatch> filter_candidates(std::vector<ColumnMatch> matches, const MatchConfig& config);

/// candidate_pairs -> score_pair on `jobs` threads -> filter_candidates.
std::vector<ColumnMatch> match_columns(const Catalog& catalog, const MatchConfig& config,
                                       const SemanticProvider& provider, std::size_t jobs = 1);

}  // namespace joinscout
