#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "joinscout/catalog.hpp"
#include "joinscout/config.hpp"
#include "joinscout/join_graph.hpp"

namespace joinscout {

/// Output column: either a source column (`origin` set) or the fuzzy score of
/// one hop (`fuzzy_hop` set, 1-based position of the edge in the path).
struct ResultColumn {
  std::optional<TableRef> origin;
  std::string name;
  std::optional<std::size_t> fuzzy_hop;
};

/// Text for data cells, a score in [0, 1] for fuzzy-score cells.
using Cell = std::variant<std::string, double>;

struct ResultTable {
  std::vector<ResultColumn> columns;
  std::vector<std::vector<Cell>> rows;

  /// CSV header names: `<table>.<column>` (or `<db>.<table>.<column>` when
  /// two tables share a name) and `_fuzzy_score_<hop>` for score columns.
  std::vector<std::string> header() const;
};

/// Folds the path left to right. FK hops are inner equi-joins on the edge
/// columns. Fuzzy hops keep, per accumulated row, the single right row whose
/// value has the highest token_sort_ratio (ties: smaller value, then earlier
/// row), and drop rows whose best score is below row_threshold. Output row
/// order follows the left input. Empty join values never match.
ResultTable execute_path(const JoinPath& path, const Catalog& catalog, const MatchConfig& config,
                         std::size_t jobs = 1);

/// RFC-4180 CSV with a header row; scores use 3 decimals. `limit` caps the
/// number of data rows.
void write_csv(const ResultTable& result, std::ostream& out, std::optional<std::size_t> limit = std::nullopt);
void write_csv(const ResultTable& result, const std::filesystem::path& path,
               std::optional<std::size_t> limit = std::nullopt);

}  // namespace joinscout
