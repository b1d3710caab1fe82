#include "kheight/error.hpp"
#include "kheight/tables.hpp"

#include <gtest/gtest.h>

using namespace kheight;

TEST(Tables, GoldenRowsAreComplete) {
  EXPECT_EQ(golden_rows(TableId::hex, 2).size(), 1u);
  EXPECT_EQ(golden_rows(TableId::rect, 4).size(), 1u);
  EXPECT_TRUE(golden_rows(TableId::rect, 4).front().lower_bound);
  EXPECT_EQ(case_catalog(CaseType::type1).size(), golden_rows(TableId::type1, 2).size());
  EXPECT_EQ(case_catalog(CaseType::type2).size(), golden_rows(TableId::type2, 2).size());
  EXPECT_EQ(golden_rows(TableId::type1, 2).size(), golden_rows(TableId::type1, 3).size());
  auto row = golden_row(TableId::type1, 3, "1_3[1,2,3]");
  ASSERT_TRUE(row.has_value());
  EXPECT_EQ(row->e_max, "3.000000");
}

TEST(Tables, MatchRules) {
  DivergenceReport r;
  r.k = 2;
  r.case_id = "hex";
  r.omega_B = 199;
  r.omega_boundary = 729;
  r.e_max = Rational(119, 149);
  GoldenRow g{TableId::hex, 2, "hex", BigInt(199), BigInt(729), "0.798658", false};
  EXPECT_TRUE(matches_golden(r, g));
  g.e_max = "0.798660";
  std::string why;
  EXPECT_FALSE(matches_golden(r, g, &why));
  EXPECT_FALSE(why.empty());
  g.e_max = "0.798658";
  g.omega_B = BigInt(200);
  EXPECT_FALSE(matches_golden(r, g));
  GoldenRow lb{TableId::rect, 4, "rect", std::nullopt, std::nullopt, "0.79", true};
  EXPECT_TRUE(matches_golden(r, lb));
}

TEST(Tables, HexTableReproduces) {
  for (int k = 2; k <= 6; ++k)
    for (const auto& row : reproduce_table(TableId::hex, k)) EXPECT_TRUE(row.matches) << row.mismatch;
}

TEST(Tables, SpotRows) {
  TableOptions o;
  o.cases = {"1_3[1,2,3]", "1_6[1,3]"};
  for (const auto& row : reproduce_table(TableId::type1, 3, o)) EXPECT_TRUE(row.matches) << row.mismatch;
  o.cases = {"2[1]"};
  EXPECT_THROW(reproduce_table(TableId::type1, 2, o), InvalidInput);
  auto zero = reproduce_table(TableId::rect, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.front().report.e_max, 0);
}

TEST(Tables, Admissibility) {
  EXPECT_TRUE(admissible(CaseTag::parse("1_6[1]"), Connectivity::dual4));
  EXPECT_FALSE(admissible(CaseTag::parse("1_6[1,2]"), Connectivity::dual4));
  EXPECT_TRUE(admissible(CaseTag::parse("1_6[1,2]"), Connectivity::three));
  EXPECT_FALSE(admissible(CaseTag::parse("1_6[1,3]"), Connectivity::three));
  EXPECT_TRUE(admissible(CaseTag::parse("1_6[1,3]"), Connectivity::two));
  EXPECT_EQ(printed_upper_bound(Rational(3847, 2100)), parse_rational("1.831906"));
}
