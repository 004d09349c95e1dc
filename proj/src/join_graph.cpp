#include "joinscout/join_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "joinscout/errors.hpp"

namespace joinscout {

using nlohmann::json;

std::string_view to_string(EdgeKind kind) { return kind == EdgeKind::ForeignKey ? "fk" : "fuzzy"; }

ColumnPairs JoinEdge::columns_from(const TableRef& from) const {
  if (from == left) return columns;
  ColumnPairs flipped;
  flipped.reserve(columns.size());
  for (const auto& [l, r] : columns) flipped.emplace_back(r, l);
  return flipped;
}

double edge_weight(double s, double epsilon) {
  const double x = std::min(s + epsilon, 1.0);
  return std::max(0.0, -std::log2(x));
}

double jaccard(std::span<const std::string> a, std::span<const std::string> b) {
  std::size_t common = 0;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end() && ib != b.end();) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

JoinGraph::JoinGraph(std::vector<TableRef> nodes, std::vector<JoinEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::set<TableRef> node_set(nodes_.begin(), nodes_.end());
  if (node_set.size() != nodes_.size()) throw SchemaMismatchError("join graph has duplicate nodes");
  std::set<std::tuple<TableRef, TableRef, EdgeKind>> seen;
  for (const auto& e : edges_) {
    if (!node_set.count(e.left) || !node_set.count(e.right))
      throw SchemaMismatchError("join graph edge endpoint is not a node: " + e.left.qualified() + " -- " +
                                e.right.qualified());
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw SchemaMismatchError("join graph edge weight must be finite and non-negative");
    const auto& [lo, hi] = std::minmax(e.left, e.right);
    if (!seen.emplace(lo, hi, e.kind).second)
      throw SchemaMismatchError("join graph has two " + std::string(to_string(e.kind)) + " edges between " +
                                lo.qualified() + " and " + hi.qualified());
  }
}

bool JoinGraph::contains(const TableRef& node) const {
  return std::find(nodes_.begin(), nodes_.end(), node) != nodes_.end();
}

const JoinEdge* JoinGraph::find_edge(const TableRef& a, const TableRef& b, EdgeKind kind) const {
  for (const auto& e : edges_) {
    if (e.kind == kind && ((e.left == a && e.right == b) || (e.left == b && e.right == a))) return &e;
  }
  return nullptr;
}

TableRef JoinGraph::resolve(std::string_view name) const {
  std::optional<TableRef> found;
  for (const auto& n : nodes_) {
    if (n.qualified() == name) return n;
  }
  for (const auto& n : nodes_) {
    if (n.table == name) {
      if (found)
        throw UnknownTableError("table name '" + std::string(name) +
                                "' is ambiguous; qualify it as <database>.<table>");
      found = n;
    }
  }
  if (!found) throw UnknownTableError("unknown table '" + std::string(name) + "'");
  return *found;
}

namespace {

std::vector<std::string> key_tuples(const Table& table, const std::vector<std::string>& columns) {
  std::vector<const Column*> cols;
  for (const auto& c : columns) cols.push_back(&table.column(c));
  std::vector<std::string> tuples;
  tuples.reserve(table.row_count());
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::string key;
    bool has_empty = false;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::string& v = cols[k]->values()[r];
      if (v.empty()) has_empty = true;
      if (k) key.push_back('\x1f');
      key += v;
    }
    if (!has_empty) tuples.push_back(std::move(key));
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return tuples;
}

std::pair<TableRef, TableRef> unordered(const TableRef& a, const TableRef& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

// Candidate `a` beats `b` for the same table pair.
bool better(double s_a, double v_a, const ColumnPairs& c_a, double s_b, double v_b, const ColumnPairs& c_b) {
  if (s_a != s_b) return s_a > s_b;
  if (v_a != v_b) return v_a > v_b;
  return c_a < c_b;
}

}  // namespace

JoinGraph build_graph(const Catalog& catalog, std::span<const ValidationResult> validated,
                      const MatchConfig& config) {
  std::vector<JoinEdge> edges;

  std::map<std::pair<TableRef, TableRef>, std::size_t> fk_slot;
  for (const auto& link : fk_edges(catalog)) {
    const Table& child = catalog.table(link.child);
    const Table& parent = catalog.table(link.parent);
    std::vector<std::string> child_cols, parent_cols;
    for (const auto& [c, p] : link.columns) {
      child_cols.push_back(c);
      parent_cols.push_back(p);
    }
    const double s = jaccard(key_tuples(child, child_cols), key_tuples(parent, parent_cols));
    JoinEdge edge{link.child, link.parent, EdgeKind::ForeignKey, link.columns, s, edge_weight(s, config.epsilon), std::nullopt, {}};

    const auto key = unordered(link.child, link.parent);
    auto it = fk_slot.find(key);
    if (it == fk_slot.end()) {
      fk_slot.emplace(key, edges.size());
      edges.push_back(std::move(edge));
      continue;
    }
    JoinEdge& current = edges[it->second];
    const ColumnPairs incoming = edge.columns_from(current.left);
    if (better(s, 0.0, incoming, current.overlap_s, 0.0, current.columns)) {
      current.alternates.push_back({current.columns, current.overlap_s, 0.0});
      current.columns = incoming;
      current.overlap_s = s;
      current.weight = edge.weight;
    } else {
      current.alternates.push_back({incoming, s, 0.0});
    }
  }

  std::map<std::pair<TableRef, TableRef>, JoinEdge> fuzzy;
  for (const auto& v : validated) {
    const TableRef l = v.match.left.table_ref();
    const TableRef r = v.match.right.table_ref();
    if (!catalog.find_table(l) || !catalog.find_table(r))
      throw UnknownTableError("validated pair references a table outside the catalog");
    const auto key = unordered(l, r);
    auto it = fuzzy.find(key);
    if (it == fuzzy.end()) {
      fuzzy.emplace(key, JoinEdge{l, r, EdgeKind::Fuzzy, {{v.match.left.column, v.match.right.column}},
                                  v.overlap_s, edge_weight(v.overlap_s, config.epsilon), v.value_score, {}});
      continue;
    }
    JoinEdge& current = it->second;
    JoinEdge probe{l, r, EdgeKind::Fuzzy, {{v.match.left.column, v.match.right.column}}, 0.0, 0.0, std::nullopt, {}};
    const ColumnPairs incoming = probe.columns_from(current.left);
    if (better(v.overlap_s, v.value_score, incoming, current.overlap_s, *current.value_score, current.columns)) {
      current.alternates.push_back({current.columns, current.overlap_s, *current.value_score});
      current.columns = incoming;
      current.overlap_s = v.overlap_s;
      current.weight = edge_weight(v.overlap_s, config.epsilon);
      current.value_score = v.value_score;
    } else {
      current.alternates.push_back({incoming, v.overlap_s, v.value_score});
    }
  }
  for (auto& [key, edge] : fuzzy) {
    std::sort(edge.alternates.begin(), edge.alternates.end(), [](const AlternateJoin& a, const AlternateJoin& b) {
      return better(a.overlap_s, a.value_score, a.columns, b.overlap_s, b.value_score, b.columns);
    });
    edges.push_back(std::move(edge));
  }
  return JoinGraph(catalog.table_refs(), std::move(edges));
}

double retained(const JoinPath& path) { return std::exp2(-path.total_weight); }

namespace {

struct Label {
  double weight = 0.0;
  std::vector<std::size_t> nodes;  // indices into the graph's node list
  std::vector<std::size_t> edges;
};

}  // namespace

std::optional<JoinPath> shortest_path(const JoinGraph& graph, const TableRef& source, const TableRef& target) {
  const auto& nodes = graph.nodes();
  const auto& edges = graph.edges();
  auto index_of = [&](const TableRef& t) {
    auto it = std::find(nodes.begin(), nodes.end(), t);
    if (it == nodes.end()) throw UnknownTableError("table '" + t.qualified() + "' is not in the join graph");
    return static_cast<std::size_t>(it - nodes.begin());
  };
  const std::size_t src = index_of(source);
  const std::size_t dst = index_of(target);

  std::vector<std::string> names;
  names.reserve(nodes.size());
  for (const auto& n : nodes) names.push_back(n.qualified());

  std::vector<std::vector<std::size_t>> adjacency(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adjacency[index_of(edges[e].left)].push_back(e);
    adjacency[index_of(edges[e].right)].push_back(e);
  }

  // Total order: weight, then hop count, then table names along the path,
  // then edge kinds (FK before fuzzy).
  auto less = [&](const Label& a, const Label& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
      if (names[a.nodes[i]] != names[b.nodes[i]]) return names[a.nodes[i]] < names[b.nodes[i]];
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
      if (edges[a.edges[i]].kind != edges[b.edges[i]].kind) return edges[a.edges[i]].kind < edges[b.edges[i]].kind;
    }
    return false;
  };

  std::vector<std::optional<Label>> best(nodes.size());
  std::vector<bool> done(nodes.size(), false);
  best[src] = Label{0.0, {src}, {}};
  while (true) {
    std::optional<std::size_t> u;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!done[i] && best[i] && (!u || less(*best[i], *best[*u]))) u = i;
    }
    if (!u) return std::nullopt;
    if (*u == dst) break;
    done[*u] = true;
    const Label& from = *best[*u];
    for (std::size_t e : adjacency[*u]) {
      const std::size_t v = index_of(edges[e].other(nodes[*u]));
      if (done[v]) continue;
      Label next{from.weight + edges[e].weight, from.nodes, from.edges};
      next.nodes.push_back(v);
      next.edges.push_back(e);
      if (!best[v] || less(next, *best[v])) best[v] = std::move(next);
    }
  }

  const Label& label = *best[dst];
  JoinPath path;
  for (std::size_t n : label.nodes) path.tables.push_back(nodes[n]);
  for (std::size_t e : label.edges) path.edges.push_back(edges[e]);
  path.total_weight = label.weight;
  path.retained_percentage = retained(path);
  return path;
}

namespace {

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string two_decimals(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                    "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

}  // namespace

std::string export_dot(const JoinGraph& graph) {
  std::ostringstream out;
  out << "graph join_graph {\n";
  out << "  node [shape=box, style=filled];\n";

  std::vector<std::string> databases;
  for (const auto& n : graph.nodes()) {
    if (std::find(databases.begin(), databases.end(), n.database) == databases.end())
      databases.push_back(n.database);
  }
  for (std::size_t d = 0; d < databases.size(); ++d) {
    const char* color = kPalette[d % std::size(kPalette)];
    out << "  subgraph " << dot_quote("cluster_" + databases[d]) << " {\n";
    out << "    label=" << dot_quote(databases[d]) << ";\n";
    for (const auto& n : graph.nodes()) {
      if (n.database != databases[d]) continue;
      out << "    " << dot_quote(n.qualified()) << " [label=" << dot_quote(n.table) << ", fillcolor=\"" << color
          << "\"];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : graph.edges()) {
    std::string label;
    for (const auto& [l, r] : e.columns) {
      if (!label.empty()) label += ", ";
      label += l + "=" + r;
    }
    label += "\\ns=" + two_decimals(e.overlap_s);
    const bool fk = e.kind == EdgeKind::ForeignKey;
    out << "  " << dot_quote(e.left.qualified()) << " -- " << dot_quote(e.right.qualified())
        << " [style=" << (fk ? "solid" : "dashed") << ", color=" << (fk ? "gray" : "blue") << ", label=\""
        << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

json ref_json(const TableRef& t) { return {{"db", t.database}, {"table", t.table}}; }

json columns_json(const ColumnPairs& columns) {
  json out = json::array();
  for (const auto& [l, r] : columns) out.push_back({l, r});
  return out;
}

TableRef ref_from(const json& node) {
  if (!node.is_object()) throw ManifestParseError("graph: table reference must be an object");
  return {node.at("db").get<std::string>(), node.at("table").get<std::string>()};
}

ColumnPairs columns_from_json(const json& node) {
  ColumnPairs out;
  for (const auto& pair : node) {
    if (!pair.is_array() || pair.size() != 2) throw ManifestParseError("graph: columns must be [left, right] pairs");
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

}  // namespace

json graph_to_json(const JoinGraph& graph) {
  json nodes = json::array();
  for (const auto& n : graph.nodes()) nodes.push_back(ref_json(n));
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    json edge = {{"left", ref_json(e.left)},
                 {"right", ref_json(e.right)},
                 {"kind", to_string(e.kind)},
                 {"columns", columns_json(e.columns)},
                 {"s", e.overlap_s},
                 {"weight", e.weight}};
    if (e.value_score) edge["value_score"] = *e.value_score;
    if (!e.alternates.empty()) {
      json alts = json::array();
      for (const auto& a : e.alternates) {
        json alt = {{"columns", columns_json(a.columns)}, {"s", a.overlap_s}};
        if (e.kind == EdgeKind::Fuzzy) alt["value_score"] = a.value_score;
        alts.push_back(std::move(alt));
      }
      edge["alternates"] = std::move(alts);
    }
    edges.push_back(std::move(edge));
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

JoinGraph graph_from_json(const json& node) {
  try {
    std::vector<TableRef> nodes;
    for (const auto& n : node.at("nodes")) nodes.push_back(ref_from(n));
    std::vector<JoinEdge> edges;
    for (const auto& e : node.at("edges")) {
      JoinEdge edge;
      edge.left = ref_from(e.at("left"));
      edge.right = ref_from(e.at("right"));
      const auto kind = e.at("kind").get<std::string>();
      if (kind == "fk") edge.kind = EdgeKind::ForeignKey;
      else if (kind == "fuzzy") edge.kind = EdgeKind::Fuzzy;
      else throw ManifestParseError("graph: unknown edge kind '" + kind + "'");
      edge.columns = columns_from_json(e.at("columns"));
      edge.overlap_s = e.at("s").get<double>();
      edge.weight = e.at("weight").get<double>();
      if (auto it = e.find("value_score"); it != e.end()) edge.value_score = it->get<double>();
      if (auto it = e.find("alternates"); it != e.end()) {
        for (const auto& a : *it) {
          AlternateJoin alt{columns_from_json(a.at("columns")), a.at("s").get<double>()};
          if (auto v = a.find("value_score"); v != a.end()) alt.value_score = v->get<double>();
          edge.alternates.push_back(std::move(alt));
        }
      }
      edges.push_back(std::move(edge));
    }
    return JoinGraph(std::move(nodes), std::move(edges));
  } catch (const json::exception& e) {
    throw ManifestParseError(std::string("graph JSON is malformed: ") + e.what());
  }
}

void save_graph(const JoinGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << graph_to_json(graph).dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

JoinGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("graph file not found: " + path.string());
  json node;
  try {
    node = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifestParseError(std::string("graph file is not valid JSON: ") + e.what());
  }
  return graph_from_json(node);
}

}  // namespace joinscout
