#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "joinscout/catalog.hpp"
#include "joinscout/config.hpp"
#include "joinscout/row_validator.hpp"

namespace joinscout {

enum class EdgeKind { ForeignKey, Fuzzy };

std::string_view to_string(EdgeKind kind);

using ColumnPairs = std::vector<std::pair<std::string, std::string>>;

/// A validated column pair that lost to a better one on the same table pair.
struct AlternateJoin {
  ColumnPairs columns;
  double overlap_s = 0.0;
  double value_score = 0.0;
};

/// Undirected edge. `columns` pair a column of `left` with a column of
/// `right`.
struct JoinEdge {
  TableRef left;
  TableRef right;
  EdgeKind kind = EdgeKind::ForeignKey;
  ColumnPairs columns;
  double overlap_s = 0.0;
  double weight = 0.0;
  std::optional<double> value_score;  // fuzzy edges only
  std::vector<AlternateJoin> alternates;

  /// The endpoint opposite `from`.
  const TableRef& other(const TableRef& from) const { return from == left ? right : left; }
  /// Column pairs oriented so that .first belongs to `from`.
  ColumnPairs columns_from(const TableRef& from) const;
};

/// max(0, -log2(min(s + epsilon, 1))).
double edge_weight(double s, double epsilon);

/// Classical Jaccard |A∩B| / |A∪B| of two sorted distinct sets; 0 when both
/// are empty.
double jaccard(std::span<const std::string> a, std::span<const std::string> b);

class JoinGraph {
 public:
  JoinGraph() = default;
  JoinGraph(std::vector<TableRef> nodes, std::vector<JoinEdge> edges);

  const std::vector<TableRef>& nodes() const { return nodes_; }
  const std::vector<JoinEdge>& edges() const { return edges_; }
  bool contains(const TableRef& node) const;
  /// Edge of the given kind between two tables, in either orientation.
  const JoinEdge* find_edge(const TableRef& a, const TableRef& b, EdgeKind kind) const;
  /// Resolves "db.table" or a bare table name unique in the graph.
  TableRef resolve(std::string_view name) const;

 private:
  std::vector<TableRef> nodes_;
  std::vector<JoinEdge> edges_;
};

/// Nodes for every catalog table, one FK edge per table pair (overlap is the
/// Jaccard of the key tuples), one fuzzy edge per table pair (the validated
/// pair with the largest overlap; others kept as alternates).
JoinGraph build_graph(const Catalog& catalog, std::span<const ValidationResult> validated,
                      const MatchConfig& config);

struct JoinPath {
  std::vector<TableRef> tables;
  std::vector<JoinEdge> edges;
  double total_weight = 0.0;
  double retained_percentage = 1.0;
};

/// 2^(-total_weight).
double retained(const JoinPath& path);

/// Minimum total weight path; ties go to fewer edges, then to the
/// lexicographically smaller sequence of qualified table names. Returns
/// nullopt when the tables are disconnected. Throws UnknownTableError.
std::optional<JoinPath> shortest_path(const JoinGraph& graph, const TableRef& source, const TableRef& target);

/// Graphviz text: one cluster per database, FK edges solid gray, fuzzy edges
/// dashed blue, labels carry the join columns and the overlap to 2 decimals.
std::string export_dot(const JoinGraph& graph);

nlohmann::json graph_to_json(const JoinGraph& graph);
JoinGraph graph_from_json(const nlohmann::json& node);
void save_graph(const JoinGraph& graph, const std::filesystem::path& path);
JoinGraph load_graph(const std::filesystem::path& path);

}  // namespace joinscout
