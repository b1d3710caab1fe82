#include "kheight/divergence.hpp"
#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"

#include <gtest/gtest.h>

using namespace kheight;

namespace {

// Max expected gap by enumerating fillings of every cover pair.
Rational brute_divergence(const Graph& g, const Block& b, int k) {
  BoundaryConstraints cs(g, b, k);
  Rational best = 0;
  cs.for_each([&](const Values& v) {
    BoundaryConstraint low{k, cs.vertices(), v};
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (v[p] == k) continue;
      auto pair = raise(low, p);
      if (!pair.high.valid_on(g)) continue;
      auto lo = enumerate_fillings(g, b, pair.low), hi = enumerate_fillings(g, b, pair.high);
      if (lo.empty() || hi.empty()) continue;
      Rational wl = 0, wh = 0;
      for (const auto& f : lo) wl += static_cast<unsigned long>(weight(f));
      for (const auto& f : hi) wh += static_cast<unsigned long>(weight(f));
      Rational gap = wh / Rational(static_cast<unsigned long>(hi.size())) -
                     wl / Rational(static_cast<unsigned long>(lo.size()));
      if (gap > best) best = gap;
    }
    return true;
  });
  return best;
}

}  // namespace

TEST(Divergence, HexMatchesBruteForce) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(max_block_divergence(g, b, k).e_max, brute_divergence(g, b, k)) << "k=" << k;
}

TEST(Divergence, HexTable) {
  auto r2 = hex_divergence(2);
  EXPECT_EQ(r2.omega_B, 199);
  EXPECT_EQ(r2.omega_boundary, 729);
  EXPECT_EQ(r2.e_max, Rational(119, 149));
  auto r3 = hex_divergence(3);
  EXPECT_EQ(r3.e_max, Rational(3847, 2100));
  EXPECT_EQ(to_fixed(hex_divergence(4).e_max, 6), "2.892857");
  EXPECT_EQ(hex_divergence(0).e_max, 0);
}

TEST(Divergence, WitnessReproducesGap) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  auto r = max_block_divergence(g, b, 3);
  BoundaryConstraint low{3, r.boundary, r.witness_low};
  auto gap = expected_gap(g, b, raise(low, r.pivot_position));
  ASSERT_TRUE(gap.has_value());
  EXPECT_EQ(*gap, r.e_max);
}

TEST(Divergence, CaseGraphsMatchBruteForce) {
  for (const char* id : {"1_3[1]", "1_4[1,3]", "1_5[1,2,4]", "2[2,5]"}) {
    auto cg = make_case_graph(CaseTag::parse(id));
    auto r = case_divergence(CaseTag::parse(id), 2);
    EXPECT_EQ(r.e_max, block_divergence(cg.graph, cg.block, cg.external, 2).e_max) << id;
  }
  EXPECT_EQ(case_divergence(CaseTag::parse("1_3[1]"), 2).e_max, Rational(8, 11));
  EXPECT_EQ(to_fixed(case_divergence(CaseTag::parse("1_3[1]"), 3).e_max, 6), "1.600000");
  EXPECT_EQ(to_fixed(case_divergence(CaseTag::parse("2[1]"), 2).e_max, 10), "0.7065989848");
}

TEST(Divergence, RectEngineAgreesWithGenericSolver) {
  auto res = rect_divergence(2);
  EXPECT_EQ(to_fixed(res.best.e_max, 10), "1.2250916827");
  Graph g = rect_reference_graph();
  Block b = rect_reference_block(g);
  BoundaryConstraint low{2, res.best.boundary, res.best.witness_low};
  auto gap = expected_gap(g, b, raise(low, res.best.pivot_position));
  ASSERT_TRUE(gap.has_value());
  EXPECT_EQ(*gap, res.best.e_max);
  RectDivergenceOptions all;
  all.pivot_offsets = {0, 1, 2, 3};
  auto every = rect_divergence(2, all);
  EXPECT_EQ(every.per_pivot[0].e_max, every.per_pivot[3].e_max);
  EXPECT_EQ(every.per_pivot[1].e_max, every.per_pivot[2].e_max);
  EXPECT_EQ(rect_divergence(0).best.e_max, 0);
}

TEST(Divergence, RectStopsAboveThreshold) {
  RectDivergenceOptions o;
  o.stop_above = Rational(1);
  auto r = rect_divergence(2, o).best;
  EXPECT_GT(r.e_max, 1);
  EXPECT_FALSE(r.complete);
}

TEST(Divergence, ExpectedGapRejectsNonExtensible) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s(g, b, 4);
  BoundaryConstraints cs(g, b, 4);
  bool found = false;
  cs.for_each([&](const Values& v) {
    if (s.extensible(v) || v[0] == 4) return true;
    found = true;
    EXPECT_FALSE(expected_gap(s, raise(BoundaryConstraint{4, cs.vertices(), v}, 0)).has_value());
    return false;
  });
  EXPECT_TRUE(found);
}
