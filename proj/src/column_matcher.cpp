#include "joinscout/column_matcher.hpp"

#include <algorithm>
#include <tuple>

#include "joinscout/parallel.hpp"

namespace joinscout {

std::vector<CandidatePair> candidate_pairs(const Catalog& catalog) {
  std::vector<ColumnRef> columns;
  std::vector<std::size_t> db_index;
  const auto& dbs = catalog.databases();
  for (std::size_t d = 0; d < dbs.size(); ++d) {
    for (const auto& t : dbs[d].tables) {
      for (const auto& c : t.columns()) {
        columns.push_back({dbs[d].name, t.name(), c.name()});
        db_index.push_back(d);
      }
    }
  }
  std::vector<CandidatePair> pairs;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      if (db_index[i] != db_index[j]) pairs.push_back({columns[i], columns[j]});
    }
  }
  return pairs;
}

ColumnMatch score_pair(const ColumnRef& left, const ColumnRef& right, const MatchConfig& config,
                       const SemanticProvider& provider) {
  ColumnMatch m{left, right};
  m.name_sim = gestalt_ratio(left.column, right.column);
  m.semantic_sim = semantic_sim(left.column, right.column, provider);
  m.token_overlap = token_overlap(left.column, right.column);
  m.total_score = config.alpha * m.name_sim + config.beta * m.semantic_sim + config.gamma * m.token_overlap;
  return m;
}

std::vector<ColumnMatch> filter_candidates(std::vector<ColumnMatch> matches, const MatchConfig& config) {
  std::erase_if(matches, [&](const ColumnMatch& m) { return !(m.total_score >= config.column_threshold); });
  std::sort(matches.begin(), matches.end(), [](const ColumnMatch& a, const ColumnMatch& b) {
    if (a.total_score != b.total_score) return a.total_score > b.total_score;
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  });
  return matches;
}

std::vector<ColumnMatch> match_columns(const Catalog& catalog, const MatchConfig& config,
                                       const SemanticProvider& provider, std::size_t jobs) {
  const auto pairs = candidate_pairs(catalog);
  std::vector<ColumnMatch> scored(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    scored[i] = score_pair(pairs[i].left, pairs[i].right, config, provider);
  });
  return filter_candidates(std::move(scored), config);
}

}  // namespace joinscout
