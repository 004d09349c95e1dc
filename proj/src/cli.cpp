#include "joinscout/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "joinscout/errors.hpp"
#include "joinscout/fuzzgen.hpp"
#include "joinscout/join_executor.hpp"
#include "joinscout/join_graph.hpp"
#include "joinscout/pipeline.hpp"

namespace joinscout::cli {

namespace {

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

std::string join_columns(const ColumnPairs& columns) {
  std::string out;
  for (const auto& [l, r] : columns) {
    if (!out.empty()) out += ",";
    out += l + "=" + r;
  }
  return out;
}

struct Options {
  // shared
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  // generate
  std::size_t scale = 1;
  double fuzzify_fraction = 0.3;
  std::string out_dir;
  // discover / join
  std::string catalog_path;
  std::string graph_path = "graph.json";
  std::string ground_truth_path;
  std::string out_path;
  // path / join
  std::string source;
  std::string target;
  std::optional<std::size_t> limit;
};

MatchConfig resolve_config(const Options& o) {
  MatchConfig cfg = o.config_path.empty() ? MatchConfig{} : load_config(o.config_path);
  if (o.seed) cfg.seed = *o.seed;
  cfg.validate();
  return cfg;
}

int cmd_generate(const Options& o, std::ostream& out) {
  FuzzConfig fc;
  fc.seed = o.seed.value_or(42);
  fc.fuzzify_fraction = o.fuzzify_fraction;
  const auto generated = generate_catalog(fc, o.scale);
  write_generated(generated, o.out_dir);
  std::size_t tables = 0;
  for (const auto& db : generated.catalog.databases()) tables += db.tables.size();
  out << "wrote " << generated.catalog.databases().size() << " databases, " << tables << " tables, "
      << generated.truth.fuzzified.size() << " fuzzified values to " << o.out_dir << "\n";
  return kSuccess;
}

void print_edges(const JoinGraph& graph, std::ostream& out) {
  char line[512];
  std::snprintf(line, sizeof line, "%-6s %-34s %-34s %-36s %8s %8s\n", "kind", "left", "right", "columns", "s",
                "weight");
  out << line;
  for (const auto& e : graph.edges()) {
    std::snprintf(line, sizeof line, "%-6s %-34s %-34s %-36s %8.4f %8.4f\n", std::string(to_string(e.kind)).c_str(),
                  e.left.qualified().c_str(), e.right.qualified().c_str(), join_columns(e.columns).c_str(), e.overlap_s,
                  e.weight);
    out << line;
  }
}

int cmd_discover(const Options& o, std::ostream& out) {
  const MatchConfig cfg = resolve_config(o);
  const Catalog catalog = load_catalog(o.catalog_path);
  const auto provider = make_provider(cfg.semantic_provider);
  const Discovery d = discover(catalog, cfg, *provider, o.jobs);
  save_graph(d.graph, o.graph_path);

  print_edges(d.graph, out);
  std::size_t fk = 0;
  for (const auto& e : d.graph.edges()) fk += e.kind == EdgeKind::ForeignKey;
  out << "candidates: " << d.candidates.size() << ", validated: " << d.accepted.size() << ", fk edges: " << fk
      << ", fuzzy edges: " << d.graph.edges().size() - fk << "\n";
  if (!o.ground_truth_path.empty()) {
    const auto ev = evaluate_fuzzy_edges(d.graph, load_ground_truth(o.ground_truth_path));
    out << "precision: " << fmt("%.3f", ev.precision) << ", recall: " << fmt("%.3f", ev.recall) << "\n";
  }
  out << "graph written to " << o.graph_path << "\n";
  return kSuccess;
}

int cmd_path(const Options& o, std::ostream& out, std::ostream& err) {
  const JoinGraph graph = load_graph(o.graph_path);
  const TableRef source = graph.resolve(o.source);
  const TableRef target = graph.resolve(o.target);
  const auto path = shortest_path(graph, source, target);
  if (!path) {
    err << "no join path between " << source.qualified() << " and " << target.qualified() << "\n";
    return kNoPath;
  }
  out << "path:";
  for (std::size_t i = 0; i < path->tables.size(); ++i) out << (i ? " -> " : " ") << path->tables[i].qualified();
  out << "\n";
  for (std::size_t h = 0; h < path->edges.size(); ++h) {
    const auto& e = path->edges[h];
    out << "hop " << h + 1 << ": " << path->tables[h].qualified() << " -> " << path->tables[h + 1].qualified() << " ["
        << to_string(e.kind) << "] " << join_columns(e.columns_from(path->tables[h])) << " s=" << fmt("%.4f", e.overlap_s)
        << " weight=" << fmt("%.4f", e.weight) << "\n";
  }
  out << "total_weight: " << fmt("%.6f", path->total_weight) << "\n";
  out << "retained_percentage: " << fmt("%.6f", path->retained_percentage) << "\n";
  return kSuccess;
}

int cmd_join(const Options& o, std::ostream& out, std::ostream& err) {
  const MatchConfig cfg = resolve_config(o);
  const JoinGraph graph = load_graph(o.graph_path);
  const Catalog catalog = load_catalog(o.catalog_path);
  const TableRef source = graph.resolve(o.source);
  const TableRef target = graph.resolve(o.target);
  const auto path = shortest_path(graph, source, target);
  if (!path) {
    err << "no join path between " << source.qualified() << " and " << target.qualified() << "\n";
    return kNoPath;
  }
  const ResultTable result = execute_path(*path, catalog, cfg, o.jobs);
  if (o.out_path.empty() || o.out_path == "-") {
    write_csv(result, out, o.limit);
  } else {
    write_csv(result, std::filesystem::path(o.out_path), o.limit);
    const std::size_t written = std::min(result.rows.size(), o.limit.value_or(result.rows.size()));
    out << "wrote " << written << " rows to " << o.out_path << "\n";
  }
  return kSuccess;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const std::string dot = export_dot(load_graph(o.graph_path));
  if (o.out_path.empty() || o.out_path == "-") {
    out << dot;
    return kSuccess;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write " + o.out_path);
  file << dot;
  if (!file) throw IoError("failed writing " + o.out_path);
  out << "wrote " << o.out_path << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discover joinable columns across databases and execute multi-hop join paths", "joinscout"};
  app.require_subcommand(1);

  auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", o.seed, "random seed (overrides the config)"); };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
  };

  auto* generate = app.add_subcommand("generate", "write the synthetic four-database catalog");
  add_seed(generate);
  generate->add_option("--scale", o.scale, "row-count multiplier")->check(CLI::PositiveNumber);
  generate->add_option("--fuzzify-fraction", o.fuzzify_fraction, "share of copied values to fuzzify")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--out", o.out_dir, "output directory")->required();

  auto* disc = app.add_subcommand("discover", "match columns, validate values and write the join graph");
  disc->add_option("--catalog", o.catalog_path, "catalog manifest")->required();
  disc->add_option("--out", o.graph_path, "graph JSON output");
  disc->add_option("--ground-truth", o.ground_truth_path, "generator ground truth for precision/recall");
  add_config(disc);
  add_seed(disc);
  add_jobs(disc);

  auto* path = app.add_subcommand("path", "print the best join path between two tables");
  path->add_option("--graph", o.graph_path, "graph JSON");
  path->add_option("source", o.source, "source table")->required();
  path->add_option("target", o.target, "target table")->required();

  auto* join = app.add_subcommand("join", "execute the best join path and write CSV");
  join->add_option("--graph", o.graph_path, "graph JSON");
  join->add_option("--catalog", o.catalog_path, "catalog manifest")->required();
  join->add_option("source", o.source, "source table")->required();
  join->add_option("target", o.target, "target table")->required();
  join->add_option("--out", o.out_path, "CSV output (stdout when omitted)");
  join->add_option("--limit", o.limit, "maximum number of data rows");
  add_config(join);
  add_seed(join);
  add_jobs(join);

  auto* graph = app.add_subcommand("graph", "export the join graph as Graphviz DOT");
  graph->add_option("--graph", o.graph_path, "graph JSON");
  graph->add_option("--out", o.out_path, "DOT output (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*disc) return cmd_discover(o, out);
    if (*path) return cmd_path(o, out, err);
    if (*join) return cmd_join(o, out, err);
    if (*graph) return cmd_graph(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace joinscout::cli
