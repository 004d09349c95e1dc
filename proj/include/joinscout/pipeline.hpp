#pragma once

#include <cstddef>
#include <vector>

#include "joinscout/catalog.hpp"
#include "joinscout/column_matcher.hpp"
#include "joinscout/config.hpp"
#include "joinscout/join_graph.hpp"
#include "joinscout/row_validator.hpp"
#include "joinscout/similarity.hpp"

namespace joinscout {

struct Discovery {
  std::vector<ColumnMatch> candidates;  // above column_threshold
  std::vector<Validation> validations;  // one per candidate, same order
  std::vector<ValidationResult> accepted;
  JoinGraph graph;
};

/// Column matching, row validation and graph construction in one pass.
Discovery discover(const Catalog& catalog, const MatchConfig& config, const SemanticProvider& provider,
                   std::size_t jobs = 1);

}  // namespace joinscout
