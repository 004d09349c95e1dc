#include "joinscout/join_executor.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

#include "joinscout/csv.hpp"
#include "joinscout/errors.hpp"
#include "joinscout/parallel.hpp"
#include "joinscout/similarity.hpp"

namespace joinscout {

std::vector<std::string> ResultTable::header() const {
  std::map<std::string, std::set<std::string>> dbs_per_table;
  for (const auto& c : columns) {
    if (c.origin) dbs_per_table[c.origin->table].insert(c.origin->database);
  }
  std::vector<std::string> out;
  out.reserve(columns.size());
  for (const auto& c : columns) {
    if (c.fuzzy_hop) {
      out.push_back("_fuzzy_score_" + std::to_string(*c.fuzzy_hop));
    } else if (c.origin && dbs_per_table[c.origin->table].size() > 1) {
      out.push_back(c.origin->qualified() + "." + c.name);
    } else if (c.origin) {
      out.push_back(c.origin->table + "." + c.name);
    } else {
      out.push_back(c.name);
    }
  }
  return out;
}

namespace {

struct Accumulator {
  ResultTable result;
  std::map<TableRef, std::size_t> offsets;  // first column of each joined table

  std::size_t column_of(const TableRef& table, const std::string& column, const Catalog& catalog) const {
    auto it = offsets.find(table);
    if (it == offsets.end()) throw UnknownTableError("table '" + table.qualified() + "' is not joined yet");
    const auto idx = catalog.table(table).column_index(column);
    if (!idx) throw SchemaMismatchError("table '" + table.qualified() + "' has no column '" + column + "'");
    return it->second + *idx;
  }

  void append_table_columns(const TableRef& ref, const Table& table) {
    offsets[ref] = result.columns.size();
    for (const auto& c : table.columns()) result.columns.push_back({ref, c.name(), std::nullopt});
  }
};

const std::string& text(const Cell& cell) { return std::get<std::string>(cell); }

void join_fk(Accumulator& acc, const TableRef& from, const TableRef& to, const JoinEdge& edge,
             const Catalog& catalog) {
  const Table& right = catalog.table(to);
  std::vector<std::size_t> left_cols;
  std::vector<const Column*> right_cols;
  for (const auto& [l, r] : edge.columns_from(from)) {
    left_cols.push_back(acc.column_of(from, l, catalog));
    right_cols.push_back(&right.column(r));
  }

  std::unordered_map<std::string, std::vector<std::size_t>> index;
  for (std::size_t row = 0; row < right.row_count(); ++row) {
    std::string key;
    bool empty = false;
    for (std::size_t k = 0; k < right_cols.size(); ++k) {
      const auto& v = right_cols[k]->values()[row];
      empty = empty || v.empty();
      if (k) key.push_back('\x1f');
      key += v;
    }
    if (!empty) index[key].push_back(row);
  }

  std::vector<std::vector<Cell>> rows;
  for (auto& row : acc.result.rows) {
    std::string key;
    bool empty = false;
    for (std::size_t k = 0; k < left_cols.size(); ++k) {
      const auto& v = text(row[left_cols[k]]);
      empty = empty || v.empty();
      if (k) key.push_back('\x1f');
      key += v;
    }
    if (empty) continue;
    auto it = index.find(key);
    if (it == index.end()) continue;
    for (std::size_t r : it->second) {
      std::vector<Cell> out = row;
      for (const auto& c : right.columns()) out.emplace_back(c.values()[r]);
      rows.push_back(std::move(out));
    }
  }
  acc.result.rows = std::move(rows);
  acc.append_table_columns(to, right);
}

void join_fuzzy(Accumulator& acc, const TableRef& from, const TableRef& to, const JoinEdge& edge,
                std::size_t hop, const Catalog& catalog, const MatchConfig& config, std::size_t jobs) {
  const Table& right = catalog.table(to);
  const auto columns = edge.columns_from(from);
  if (columns.size() != 1) throw SchemaMismatchError("fuzzy edges join exactly one column pair");
  const std::size_t left_col = acc.column_of(from, columns.front().first, catalog);
  const Column& right_col = right.column(columns.front().second);

  // Sorted distinct right values with the first row holding each.
  std::map<std::string, std::size_t> first_row;
  for (std::size_t row = 0; row < right.row_count(); ++row) {
    const auto& v = right_col.values()[row];
    if (!v.empty()) first_row.emplace(v, row);
  }
  if (first_row.empty())
    throw EmptyColumnError("column '" + to.qualified() + "." + right_col.name() + "' has no values to match");
  std::vector<std::u32string> right_keys;
  std::vector<std::size_t> right_rows;
  for (const auto& [value, row] : first_row) {
    right_keys.push_back(token_sort_key(value));
    right_rows.push_back(row);
  }

  std::vector<std::string> probes;
  for (const auto& row : acc.result.rows) {
    const auto& v = text(row[left_col]);
    if (!v.empty()) probes.push_back(v);
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  struct Best {
    double score = -1.0;
    std::size_t row = 0;
  };
  std::vector<Best> best(probes.size());
  parallel_for(probes.size(), jobs, [&](std::size_t p) {
    const std::u32string key = token_sort_key(probes[p]);
    Best b;
    for (std::size_t k = 0; k < right_keys.size(); ++k) {
      const double s = indel_ratio(key, right_keys[k]);
      if (s > b.score) b = {s, right_rows[k]};
    }
    best[p] = b;
  });

  std::vector<std::vector<Cell>> rows;
  for (auto& row : acc.result.rows) {
    const auto& v = text(row[left_col]);
    if (v.empty()) continue;
    const auto p = static_cast<std::size_t>(std::lower_bound(probes.begin(), probes.end(), v) - probes.begin());
    const Best& b = best[p];
    if (!(b.score >= config.row_threshold)) continue;
    std::vector<Cell> out = std::move(row);
    for (const auto& c : right.columns()) out.emplace_back(c.values()[b.row]);
    out.emplace_back(b.score);
    rows.push_back(std::move(out));
  }
  acc.result.rows = std::move(rows);
  acc.append_table_columns(to, right);
  acc.result.columns.push_back({std::nullopt, "_fuzzy_score_" + std::to_string(hop), hop});
}

std::string format_score(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

ResultTable execute_path(const JoinPath& path, const Catalog& catalog, const MatchConfig& config,
                         std::size_t jobs) {
  if (path.tables.empty()) throw UnknownTableError("join path has no tables");
  if (path.tables.size() != path.edges.size() + 1)
    throw SchemaMismatchError("join path must have one more table than edges");

  Accumulator acc;
  const Table& source = catalog.table(path.tables.front());
  acc.append_table_columns(path.tables.front(), source);
  acc.result.rows.reserve(source.row_count());
  for (std::size_t r = 0; r < source.row_count(); ++r) {
    std::vector<Cell> row;
    row.reserve(source.columns().size());
    for (const auto& c : source.columns()) row.emplace_back(c.values()[r]);
    acc.result.rows.push_back(std::move(row));
  }

  for (std::size_t h = 0; h < path.edges.size(); ++h) {
    const TableRef& from = path.tables[h];
    const TableRef& to = path.tables[h + 1];
    const JoinEdge& edge = path.edges[h];
    if (!((edge.left == from && edge.right == to) || (edge.left == to && edge.right == from)))
      throw SchemaMismatchError("join path edge " + std::to_string(h + 1) + " does not connect its tables");
    if (acc.offsets.count(to))
      throw SchemaMismatchError("join path visits '" + to.qualified() + "' twice");
    if (edge.kind == EdgeKind::ForeignKey)
      join_fk(acc, from, to, edge, catalog);
    else
      join_fuzzy(acc, from, to, edge, h + 1, catalog, config, jobs);
  }
  return std::move(acc.result);
}

void write_csv(const ResultTable& result, std::ostream& out, std::optional<std::size_t> limit) {
  csv::write_record(out, result.header());
  const std::size_t n = std::min(result.rows.size(), limit.value_or(result.rows.size()));
  csv::Record record;
  for (std::size_t r = 0; r < n; ++r) {
    record.clear();
    for (const auto& cell : result.rows[r]) {
      if (const auto* s = std::get_if<std::string>(&cell))
        record.push_back(*s);
      else
        record.push_back(format_score(std::get<double>(cell)));
    }
    csv::write_record(out, record);
  }
  if (!out) throw IoError("failed writing csv output");
}

void write_csv(const ResultTable& result, const std::filesystem::path& path, std::optional<std::size_t> limit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(result, out, limit);
}

}  // namespace joinscout
