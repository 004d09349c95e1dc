#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "joinscout/catalog.hpp"
#include "joinscout/cli.hpp"
#include "joinscout/csv.hpp"
#include "test_support.hpp"

namespace joinscout {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    cat_ = (dir_ / "cat").string();
    graph_ = (dir_ / "graph.json").string();
    ASSERT_EQ(run({"generate", "--seed", "42", "--out", cat_}).code, 0);
    manifest_ = cat_ + "/manifest.json";
  }
  testing::TempDir dir_;
  std::string cat_, graph_, manifest_;
};

TEST_F(CliTest, GenerateIsDeterministicAndLoads) {
  const std::string again = (dir_ / "again").string();
  ASSERT_EQ(run({"generate", "--seed", "42", "--out", again}).code, 0);
  for (const char* f : {"manifest.json", "ground_truth.json", "hospital_db/Clinics.csv", "public_info_db/Hospital_Survey.csv"})
    EXPECT_EQ(testing::read_text(cat_ + "/" + f), testing::read_text(again + "/" + f)) << f;
  EXPECT_NO_THROW(load_catalog(manifest_));
}

TEST_F(CliTest, GenerateMissingParentFails) {
  const Outcome r = run({"generate", "--out", (dir_ / "no" / "parent" / "here").string()});
  EXPECT_EQ(r.code, cli::kDataError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliTest, DiscoverReportsTruthAndIsRepeatable) {
  const Outcome r = run({"discover", "--catalog", manifest_, "--out", graph_, "--ground-truth", cat_ + "/ground_truth.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fuzzy edges: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("precision: 1.000, recall: 1.000"), std::string::npos) << r.out;
  const std::string first = testing::read_text(graph_);
  ASSERT_EQ(run({"discover", "--catalog", manifest_, "--out", graph_, "--jobs", "4"}).code, 0);
  EXPECT_EQ(testing::read_text(graph_), first);
}

TEST_F(CliTest, DiscoverSingleDatabaseHasOnlyForeignKeys) {
  auto manifest = nlohmann::json::parse(testing::read_text(manifest_));
  auto& dbs = manifest["databases"];
  dbs.erase(dbs.begin() + 1, dbs.end());
  testing::write_text(cat_ + "/single.json", manifest.dump());
  ASSERT_EQ(run({"discover", "--catalog", cat_ + "/single.json", "--out", graph_}).code, 0);
  const auto graph = nlohmann::json::parse(testing::read_text(graph_));
  EXPECT_EQ(graph["nodes"].size(), 5u);
  for (const auto& e : graph["edges"]) EXPECT_EQ(e["kind"], "fk");
  EXPECT_EQ(graph["edges"].size(), 5u);
}

TEST_F(CliTest, DiscoverBadCatalogFails) {
  EXPECT_EQ(run({"discover", "--catalog", (dir_ / "missing.json").string()}).code, cli::kDataError);
  testing::write_text(dir_ / "bad.json", "{");
  EXPECT_EQ(run({"discover", "--catalog", (dir_ / "bad.json").string()}).code, cli::kDataError);
}

TEST_F(CliTest, PathCommand) {
  ASSERT_EQ(run({"discover", "--catalog", manifest_, "--out", graph_}).code, 0);
  const Outcome r = run({"path", "--graph", graph_, "Doctors", "Hospital_Survey"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("path: hospital_db.Doctors -> hospital_db.Clinics -> public_info_db.Hospital_Survey\n"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("hop 1: hospital_db.Doctors -> hospital_db.Clinics [fk] clinic_id=clinic_id"), std::string::npos);
  EXPECT_NE(r.out.find("hop 2: hospital_db.Clinics -> public_info_db.Hospital_Survey [fuzzy] clinic_name=hospital_name"),
            std::string::npos);
  EXPECT_EQ(r.out.find("hop 3"), std::string::npos);

  const Outcome self = run({"path", "--graph", graph_, "Clinics", "hospital_db.Clinics"});
  EXPECT_EQ(self.code, 0);
  EXPECT_NE(self.out.find("retained_percentage: 1.000000"), std::string::npos);

  EXPECT_EQ(run({"path", "--graph", graph_, "Doctors", "Nowhere"}).code, cli::kDataError);
}

TEST_F(CliTest, NoPathHasItsOwnExitCode) {
  const nlohmann::json g = {{"nodes", {{{"db", "a"}, {"table", "T"}}, {{"db", "b"}, {"table", "U"}}}},
                            {"edges", nlohmann::json::array()}};
  testing::write_text(dir_ / "split.json", g.dump());
  const Outcome r = run({"path", "--graph", (dir_ / "split.json").string(), "T", "U"});
  EXPECT_EQ(r.code, cli::kNoPath);
  EXPECT_NE(r.err.find("no join path"), std::string::npos);
}

TEST_F(CliTest, JoinWritesCsvAndHonoursLimit) {
  ASSERT_EQ(run({"discover", "--catalog", manifest_, "--out", graph_}).code, 0);
  const std::string out_csv = (dir_ / "join.csv").string();
  const Outcome r = run({"join", "--graph", graph_, "--catalog", manifest_, "Doctors", "Hospital_Survey", "--out", out_csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv::read_file(out_csv);
  ASSERT_GT(rows.size(), 6u);
  EXPECT_EQ(rows[0].back(), "_fuzzy_score_2");

  const Outcome limited = run({"join", "--graph", graph_, "--catalog", manifest_, "Doctors", "Hospital_Survey", "--limit", "5"});
  ASSERT_EQ(limited.code, 0);
  EXPECT_EQ(csv::parse(limited.out).size(), 6u);

  const std::string again = (dir_ / "again.csv").string();
  ASSERT_EQ(run({"join", "--graph", graph_, "--catalog", manifest_, "Doctors", "Hospital_Survey", "--out", again,
                 "--jobs", "3"})
                .code,
            0);
  EXPECT_EQ(testing::read_text(again), testing::read_text(out_csv));
}

TEST_F(CliTest, GraphExport) {
  ASSERT_EQ(run({"discover", "--catalog", manifest_, "--out", graph_}).code, 0);
  const Outcome r = run({"graph", "--graph", graph_});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph join_graph {", 0), 0u);
  EXPECT_NE(r.out.find("style=dashed, color=blue"), std::string::npos);
  const std::string dot = (dir_ / "g.dot").string();
  ASSERT_EQ(run({"graph", "--graph", graph_, "--out", dot}).code, 0);
  EXPECT_EQ(testing::read_text(dot), r.out);
}

TEST_F(CliTest, ConfigFile) {
  testing::write_text(dir_ / "strict.json", R"({"column_threshold": 1.0})");
  const Outcome r = run({"discover", "--catalog", manifest_, "--out", graph_, "--config", (dir_ / "strict.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("candidates: 1, validated: 1, fk edges: 9, fuzzy edges: 1"), std::string::npos);
  testing::write_text(dir_ / "bad.json", R"({"alpha": 2})");
  EXPECT_EQ(run({"discover", "--catalog", manifest_, "--config", (dir_ / "bad.json").string()}).code, cli::kDataError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"generate"}).code, cli::kUsage);
  EXPECT_EQ(run({"path", "OnlyOne"}).code, cli::kUsage);
  EXPECT_EQ(run({"discover", "--catalog", "x", "--jobs", "0"}).code, cli::kUsage);
  const Outcome help = run({"--help"});
  EXPECT_EQ(help.code, cli::kSuccess);
  EXPECT_NE(help.out.find("discover"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = JOINSCOUT_CLI_PATH;
  EXPECT_EQ(std::system((bin + " > /dev/null 2>&1").c_str()), 1 << 8);
  EXPECT_EQ(std::system((bin + " --help > /dev/null 2>&1").c_str()), 0);
}

}  // namespace
}  // namespace joinscout
