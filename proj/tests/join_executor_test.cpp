#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "joinscout/config.hpp"
#include "joinscout/csv.hpp"
#include "joinscout/errors.hpp"
#include "joinscout/fuzzgen.hpp"
#include "joinscout/join_executor.hpp"
#include "joinscout/pipeline.hpp"
#include "joinscout/similarity.hpp"
#include "test_support.hpp"

namespace joinscout {
namespace {

using Rows = std::vector<std::vector<std::string>>;

JoinEdge edge(const TableRef& a, const TableRef& b, ColumnPairs columns, EdgeKind kind) {
  JoinEdge e;
  e.left = a;
  e.right = b;
  e.kind = kind;
  e.columns = std::move(columns);
  e.overlap_s = 1.0;
  return e;
}

JoinPath path_of(std::vector<TableRef> tables, std::vector<JoinEdge> edges) {
  JoinPath p;
  p.tables = std::move(tables);
  p.edges = std::move(edges);
  return p;
}

Rows as_text(const ResultTable& t) {
  Rows out;
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (const auto& c : row) {
      if (const auto* s = std::get_if<std::string>(&c)) r.push_back(*s);
      else r.push_back(std::to_string(std::get<double>(c)));
    }
    out.push_back(r);
  }
  return out;
}

std::string to_csv(const ResultTable& t, std::optional<std::size_t> limit = std::nullopt) {
  std::ostringstream out;
  write_csv(t, out, limit);
  return out.str();
}

TEST(Execute, ZeroEdgePathCopiesSource) {
  const Catalog cat({Database{"d", {testing::make_table("T", {"a", "b"}, {{"1", "x"}, {"2", ""}})}}});
  const ResultTable r = execute_path(path_of({{"d", "T"}}, {}), cat, MatchConfig{});
  EXPECT_EQ(r.header(), (std::vector<std::string>{"T.a", "T.b"}));
  EXPECT_EQ(as_text(r), (Rows{{"1", "x"}, {"2", ""}}));
}

TEST(Execute, ForeignKeyOneToOneKeepsRowCount) {
  const Catalog cat({Database{
      "h",
      {testing::make_table("Clinics", {"clinic_id", "clinic_name"}, {{"c1", "North"}, {"c2", "South"}}),
       testing::make_table("Doctors", {"doctor_id", "clinic_id"}, {{"d1", "c2"}, {"d2", "c1"}, {"d3", "c1"}},
                           {{{"clinic_id"}, "Clinics", {"clinic_id"}}})}}});
  const TableRef doctors{"h", "Doctors"}, clinics{"h", "Clinics"};
  const auto r = execute_path(
      path_of({doctors, clinics}, {edge(doctors, clinics, {{"clinic_id", "clinic_id"}}, EdgeKind::ForeignKey)}), cat,
      MatchConfig{});
  EXPECT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(as_text(r)[0], (std::vector<std::string>{"d1", "c2", "c2", "South"}));
  // Reverse orientation uses the flipped column pairs.
  const auto back = execute_path(
      path_of({clinics, doctors}, {edge(doctors, clinics, {{"clinic_id", "clinic_id"}}, EdgeKind::ForeignKey)}), cat,
      MatchConfig{});
  EXPECT_EQ(back.rows.size(), 3u);
}

TEST(Execute, ForeignKeyChainMatchesNestedLoopOracle) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 50; ++iter) {
    auto key = [&] { return rng() % 6 == 0 ? std::string() : std::to_string(rng() % 5); };
    Rows a, b, c;
    for (std::size_t i = 0; i < 1 + rng() % 8; ++i) a.push_back({"a" + std::to_string(i), key()});
    for (std::size_t i = 0; i < 1 + rng() % 8; ++i) b.push_back({key(), key()});
    for (std::size_t i = 0; i < 1 + rng() % 8; ++i) c.push_back({key(), "c" + std::to_string(i)});
    const Catalog cat({Database{"d",
                                {testing::make_table("A", {"id", "k"}, a), testing::make_table("B", {"k", "k2"}, b),
                                 testing::make_table("C", {"k2", "v"}, c)}}});
    const TableRef ta{"d", "A"}, tb{"d", "B"}, tc{"d", "C"};
    const auto got = execute_path(path_of({ta, tb, tc}, {edge(tb, ta, {{"k", "k"}}, EdgeKind::ForeignKey),
                                                         edge(tb, tc, {{"k2", "k2"}}, EdgeKind::ForeignKey)}),
                                  cat, MatchConfig{});
    Rows want;
    for (const auto& ra : a)
      for (const auto& rb : b)
        for (const auto& rc : c)
          if (!ra[1].empty() && ra[1] == rb[0] && !rb[1].empty() && rb[1] == rc[0])
            want.push_back({ra[0], ra[1], rb[0], rb[1], rc[0], rc[1]});
    Rows have = as_text(got);
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(have, want);
  }
}

TEST(Execute, FuzzyHopIsTopOneAboveThreshold) {
  std::mt19937_64 rng(5);
  const MatchConfig cfg;
  for (int iter = 0; iter < 40; ++iter) {
    Rows left, right;
    for (std::size_t i = 0; i < 1 + rng() % 10; ++i) left.push_back({testing::random_word(rng, 2, 6, "abc ")});
    for (std::size_t i = 0; i < 1 + rng() % 10; ++i) right.push_back({testing::random_word(rng, 2, 6, "abc "), std::to_string(i)});
    if (std::all_of(right.begin(), right.end(), [](const auto& r) { return r[0].empty(); })) continue;
    const Catalog cat({Database{"x", {testing::make_table("L", {"name"}, left)}},
                       Database{"y", {testing::make_table("R", {"label", "row"}, right)}}});
    const TableRef tl{"x", "L"}, tr{"y", "R"};
    const auto got = execute_path(path_of({tl, tr}, {edge(tl, tr, {{"name", "label"}}, EdgeKind::Fuzzy)}), cat, cfg);
    EXPECT_LE(got.rows.size(), left.size());
    EXPECT_EQ(got.header().back(), "_fuzzy_score_1");

    std::size_t expected_rows = 0;
    for (const auto& l : left) {
      if (l[0].empty()) continue;
      double best = -1.0;
      std::string best_value;
      std::size_t best_row = 0;
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (right[j][0].empty()) continue;
        const double s = token_sort_ratio(l[0], right[j][0]);
        if (s > best || (s == best && right[j][0] < best_value)) best = s, best_value = right[j][0], best_row = j;
      }
      if (best >= cfg.row_threshold) {
        const auto& row = got.rows.at(expected_rows++);
        EXPECT_EQ(std::get<std::string>(row[0]), l[0]);
        EXPECT_EQ(std::get<std::string>(row[2]), std::to_string(best_row));
        EXPECT_EQ(std::get<double>(row[3]), best);
      }
    }
    EXPECT_EQ(got.rows.size(), expected_rows);
    for (const auto& row : got.rows) EXPECT_GE(std::get<double>(row.back()), cfg.row_threshold);
  }
}

TEST(Execute, FuzzyTieGoesToSmallerValueThenFirstRow) {
  const Catalog cat({Database{"x", {testing::make_table("L", {"name"}, {{"abcd"}})}},
                     Database{"y", {testing::make_table("R", {"label", "row"},
                                                        {{"abcz", "0"}, {"abcy", "1"}, {"abcy", "2"}})}}});
  const TableRef tl{"x", "L"}, tr{"y", "R"};
  const auto got = execute_path(path_of({tl, tr}, {edge(tl, tr, {{"name", "label"}}, EdgeKind::Fuzzy)}), cat,
                                MatchConfig{});
  ASSERT_EQ(got.rows.size(), 1u);
  EXPECT_EQ(std::get<std::string>(got.rows[0][2]), "1");
}

TEST(Execute, EmptyRightColumnThrows) {
  const Catalog cat({Database{"x", {testing::make_table("L", {"name"}, {{"abcd"}})}},
                     Database{"y", {testing::make_table("R", {"label"}, {{""}})}}});
  const TableRef tl{"x", "L"}, tr{"y", "R"};
  EXPECT_THROW(execute_path(path_of({tl, tr}, {edge(tl, tr, {{"name", "label"}}, EdgeKind::Fuzzy)}), cat,
                            MatchConfig{}),
               EmptyColumnError);
}

TEST(Execute, MalformedPaths) {
  const Catalog cat({Database{"d", {testing::make_table("T", {"a"}, {{"1"}}), testing::make_table("U", {"a"}, {{"1"}})}}});
  const TableRef t{"d", "T"}, u{"d", "U"}, missing{"d", "Nope"};
  EXPECT_THROW(execute_path(JoinPath{}, cat, MatchConfig{}), UnknownTableError);
  EXPECT_THROW(execute_path(path_of({missing}, {}), cat, MatchConfig{}), UnknownTableError);
  EXPECT_THROW(execute_path(path_of({t, u}, {}), cat, MatchConfig{}), SchemaMismatchError);
  EXPECT_THROW(execute_path(path_of({t, t}, {edge(u, u, {{"a", "a"}}, EdgeKind::ForeignKey)}), cat, MatchConfig{}),
               SchemaMismatchError);
}

TEST(WriteCsv, EmptyAndSingleRow) {
  ResultTable t;
  t.columns = {{TableRef{"d", "T"}, "a", std::nullopt}, {std::nullopt, "_fuzzy_score_1", 1}};
  EXPECT_EQ(to_csv(t), "T.a,_fuzzy_score_1\r\n");
  t.rows.push_back({std::string("x,y"), 0.8099999});
  EXPECT_EQ(to_csv(t), "T.a,_fuzzy_score_1\r\n\"x,y\",0.810\r\n");
  EXPECT_EQ(to_csv(t, 0), "T.a,_fuzzy_score_1\r\n");
}

TEST(WriteCsv, QualifiesSharedTableNames) {
  ResultTable t;
  t.columns = {{TableRef{"a", "T"}, "x", std::nullopt}, {TableRef{"b", "T"}, "x", std::nullopt}};
  EXPECT_EQ(t.header(), (std::vector<std::string>{"a.T.x", "b.T.x"}));
}

TEST(WriteCsv, FileDestination) {
  testing::TempDir dir;
  ResultTable t;
  t.columns = {{TableRef{"d", "T"}, "a", std::nullopt}};
  t.rows.push_back({std::string("v")});
  write_csv(t, dir / "out.csv");
  EXPECT_EQ(testing::read_text(dir / "out.csv"), "T.a\r\nv\r\n");
  EXPECT_THROW(write_csv(t, dir / "missing" / "out.csv"), IoError);
}

class Scenario : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    generated_ = new GeneratedCatalog(generate_catalog(FuzzConfig{}, 1));
    const MatchConfig cfg;
    const auto provider = make_provider(cfg.semantic_provider);
    graph_ = new JoinGraph(discover(generated_->catalog, cfg, *provider).graph);
  }
  static void TearDownTestSuite() {
    delete generated_;
    delete graph_;
  }
  static GeneratedCatalog* generated_;
  static JoinGraph* graph_;
};
GeneratedCatalog* Scenario::generated_ = nullptr;
JoinGraph* Scenario::graph_ = nullptr;

TEST_F(Scenario, DoctorsToHospitalSurvey) {
  const auto path = shortest_path(*graph_, {"hospital_db", "Doctors"}, {"public_info_db", "Hospital_Survey"});
  ASSERT_TRUE(path);
  const MatchConfig cfg;
  const ResultTable r = execute_path(*path, generated_->catalog, cfg);
  const auto header = r.header();
  for (const char* col : {"Doctors.doctor_name", "Clinics.clinic_name", "Hospital_Survey.satisfaction_score",
                          "_fuzzy_score_2"})
    EXPECT_NE(std::find(header.begin(), header.end(), col), header.end()) << col;
  const auto name_col = std::find(header.begin(), header.end(), "Clinics.clinic_name") - header.begin();
  const auto survey_col = std::find(header.begin(), header.end(), "Hospital_Survey.hospital_name") - header.begin();
  ASSERT_FALSE(r.rows.empty());
  for (const auto& row : r.rows) {
    const double score = std::get<double>(row.back());
    EXPECT_GE(score, cfg.row_threshold);
    const bool same = std::get<std::string>(row[name_col]) == std::get<std::string>(row[survey_col]);
    EXPECT_EQ(same, score == 1.0);
  }

  const std::string csv_text = to_csv(r);
  const auto parsed = csv::parse(csv_text);
  ASSERT_EQ(parsed.size(), r.rows.size() + 1);
  EXPECT_EQ(parsed[0], header);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (std::size_t c = 0; c + 1 < header.size(); ++c)
      EXPECT_EQ(parsed[i + 1][c], std::get<std::string>(r.rows[i][c]));
  }

  EXPECT_EQ(to_csv(execute_path(*path, generated_->catalog, cfg, 4)), csv_text);
  const auto limited = csv::parse(to_csv(r, 5));
  EXPECT_EQ(limited.size(), 6u);
}

TEST_F(Scenario, RowCountNeverGrowsAcrossFuzzyHop) {
  const TableRef clinics{"hospital_db", "Clinics"}, survey{"public_info_db", "Hospital_Survey"};
  const JoinEdge* e = graph_->find_edge(clinics, survey, EdgeKind::Fuzzy);
  ASSERT_NE(e, nullptr);
  const auto r = execute_path(path_of({clinics, survey}, {*e}), generated_->catalog, MatchConfig{});
  EXPECT_LE(r.rows.size(), generated_->catalog.table(clinics).row_count());
}

}  // namespace
}  // namespace joinscout
