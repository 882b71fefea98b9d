#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "thickening/closed_forms.hpp"
#include "thickening/json.hpp"
#include "thickening/report.hpp"

namespace thickening {
namespace {

using nlohmann::ordered_json;

TEST(Table, CsvExample) {
  const auto csv = report::render_csv(report::table_rows(3, 3, 1, 3));
  EXPECT_EQ(csv, "m,t,layer,cumulative\n3,1,0,0\n3,2,1,1\n3,3,9,10\n");
}

TEST(Table, JsonExample) {
  const auto doc = ordered_json::parse(report::render_json(report::table_rows(3, 3, 1, 3)));
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[2].dump(), R"({"m":3,"t":3,"layer":"9","cumulative":"10"})");
}

TEST(Table, FirstPowerIsAllZeros) {
  for (const auto& row : report::table_rows(3, 4, 1, 1)) {
    EXPECT_EQ(row.layer, 0);
    EXPECT_EQ(row.cumulative, 0);
  }
}

TEST(Table, RowOrderAndErrors) {
  const auto rows = report::table_rows(3, 5, 2, 4);
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_TRUE(rows[i - 1].m < rows[i].m || (rows[i - 1].m == rows[i].m && rows[i - 1].t < rows[i].t));
  }
  EXPECT_THROW(report::table_rows(4, 3, 1, 2), std::invalid_argument);
  EXPECT_THROW(report::table_rows(3, 3, 2, 1), std::invalid_argument);
  EXPECT_THROW(report::table_rows(2, 3, 1, 2), std::invalid_argument);
}

TEST(Table, CsvRoundTripsOnRandomRanges) {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<std::int64_t> m_dist(3, 14), t_dist(1, 60), span(0, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::int64_t m0 = m_dist(rng), t0 = t_dist(rng);
    const std::string csv = report::render_csv(report::table_rows(m0, m0 + span(rng), t0, t0 + span(rng)));
    const auto parsed = report::parse_csv(csv);
    for (const auto& row : parsed) {
      EXPECT_EQ(row.layer, layer_length_closed(row.m, row.t));
      EXPECT_EQ(row.cumulative, cumulative_length(row.m, row.t));
    }
    EXPECT_EQ(report::render_csv(parsed), csv);
  }
}

TEST(Table, ParseCsvRejectsGarbage) {
  EXPECT_THROW(report::parse_csv("a,b\n"), std::runtime_error);
  EXPECT_THROW(report::parse_csv("m,t,layer,cumulative\n3,1,0\n"), std::runtime_error);
  EXPECT_THROW(report::parse_csv("m,t,layer,cumulative\n3,x,0,0\n"), std::runtime_error);
}

TEST(Decompose, TextListing) {
  const auto text = report::render_decomposition_text(3, 3);
  EXPECT_EQ(text,
            "epsilon=0 lambda=(-4,-4) lambda_s=(-2,-3,-3) dim=3\n"
            "epsilon=1 lambda=(-3,-4) lambda_s=(-2,-2,-3) dim=6\n"
            "total=9 closed_form=9 match\n");
  EXPECT_EQ(report::render_decomposition_text(3, 1), "total=0 closed_form=0 match\n");
}

TEST(Decompose, JsonListing) {
  const auto doc = ordered_json::parse(report::render_decomposition_json(4, 2));
  ASSERT_EQ(doc["summands"].size(), 1u);
  EXPECT_EQ(doc["summands"][0].dump(), R"({"epsilon":0,"lambda":[-4,-4],"lambda_s":[-2,-2,-2,-2],"dim":"1"})");
  EXPECT_EQ(doc["total"], "1");
  EXPECT_TRUE(doc["match"].get<bool>());
}

TEST(Json, Encodings) {
  EXPECT_EQ(ordered_json(Partition({3, 2, 1, 0, 0})).dump(), "[3,2,1]");
  EXPECT_EQ(ordered_json(Partition{}).dump(), "[]");
  EXPECT_EQ(ordered_json::parse("[4,1,0]").get<Partition>(), Partition({4, 1}));

  EXPECT_EQ(ordered_json(LengthValue::zero()).dump(), R"({"kind":"zero"})");
  EXPECT_EQ(ordered_json(LengthValue::infinite()).dump(), R"({"kind":"infinite"})");
  const BigInt big = cumulative_length(12, 200);
  const ordered_json finite = LengthValue::finite(big);
  EXPECT_EQ(finite["value"], big.str());
  EXPECT_EQ(length_value_from_json(finite), LengthValue::finite(big));

  const ordered_json ratio = ratio_to_json(epsilon3(4));
  EXPECT_EQ(ratio.dump(), R"({"num":"1","den":"2880"})");
  EXPECT_EQ(ratio_from_json(ratio), epsilon3(4));
  EXPECT_EQ(ratio_to_json(ExactRatio(-6, 4)).dump(), R"({"num":"-3","den":"2"})");
}

TEST(Verify, SuitesPassAtSmallBounds) {
  const report::VerifyBounds bounds{4, 5, 10};
  const auto checks = report::run_suite(report::Suite::All, bounds);
  EXPECT_TRUE(report::all_passed(checks)) << report::render_checks(checks);
  EXPECT_GE(checks.size(), 12u);
}

TEST(Verify, CaseCounts) {
  const auto identities = report::run_suite(report::Suite::Identities, {std::nullopt, std::nullopt, 40});
  EXPECT_EQ(identities.front().cases, 861);
  const auto catalan = report::run_suite(report::Suite::Catalan, {20, std::nullopt, std::nullopt});
  EXPECT_EQ(catalan.front().cases, 18);
}

TEST(Verify, SuiteNames) {
  EXPECT_EQ(report::parse_suite("zset"), report::Suite::Zset);
  EXPECT_EQ(report::parse_suite("all"), report::Suite::All);
  EXPECT_FALSE(report::parse_suite("bogus").has_value());
}

TEST(Verify, RenderMarksFailures) {
  report::CheckResult bad{"demo", 3, 1, {"case 2"}};
  EXPECT_EQ(report::render_checks({bad}), "FAIL demo: 3 cases, 1 failures\n  failed at case 2\n");
  EXPECT_FALSE(report::all_passed({bad}));
}

TEST(AtomicWrite, ReplacesTarget) {
  const auto dir = std::filesystem::temp_directory_path() / "thickening_report_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.csv").string();
  report::write_file_atomically(path, "old\n");
  report::write_file_atomically(path, "new\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "new\n");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace thickening
