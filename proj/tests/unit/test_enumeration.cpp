#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"
#include "kheight/rng.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kheight;

namespace {

// Brute force over all (k+1)^n assignments.
std::uint64_t brute_count(const Graph& g, int k) {
  std::uint64_t count = 0;
  Values v(g.size(), 0);
  while (true) {
    if (is_valid(g, k, v)) ++count;
    std::size_t i = 0;
    while (i < v.size() && v[i] == k) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  return count;
}

Graph random_graph(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      if (rng.below(2)) edges.emplace_back(u, w);
  return Graph(n, edges);
}

}  // namespace

TEST(Enumeration, TransferMatrixShape) {
  TransferMatrices m(3);
  ASSERT_EQ(m.P.size(), 4u);
  ASSERT_EQ(m.Q.size(), 4u);
  EXPECT_EQ(m.P[0][1], 1);
  EXPECT_EQ(m.P[0][2], 0);
  EXPECT_EQ(m.Q[0][2], 1);
  EXPECT_EQ(m.Q[0][3], 0);
}

TEST(Enumeration, TraceCounts) {
  EXPECT_EQ(count_rect_extensible(2), BigInt(2825761));
  EXPECT_EQ(count_rect_extensible(3), BigInt(15784802));
  EXPECT_EQ(count_rect_extensible(0), BigInt(1));
}

TEST(Enumeration, CycleCountsMatchBruteForce) {
  for (int k = 0; k <= 3; ++k)
    for (unsigned len = 3; len <= 7; ++len)
      EXPECT_EQ(count_cycle_heights(k, len), BigInt(static_cast<unsigned long>(brute_count(make_cycle(len), k))));
}

TEST(Enumeration, RandomGraphsMatchBruteForce) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(1 + rng.below(7), rng);
    int k = static_cast<int>(rng.below(4));
    auto all = enumerate_heights(g, k);
    EXPECT_EQ(all.size(), brute_count(g, k));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Enumeration, CapIsEnforced) {
  EXPECT_THROW(enumerate_heights(make_path(20), 3, 1000), CapExceeded);
}

TEST(Enumeration, BoundaryConstraintsRankAndCount) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  BoundaryConstraints cs(g, b, 2);
  EXPECT_EQ(cs.raw_count(), BigInt(729));
  EXPECT_EQ(cs.count(), BigInt(729));  // boundary vertices are pairwise non-adjacent
  std::uint64_t seen = 0;
  cs.for_each([&](const Values& v) {
    EXPECT_EQ(cs.unrank(cs.rank(v)), v);
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, 729u);
  // shards partition the stream
  std::uint64_t sharded = 0;
  for (unsigned s = 0; s < 3; ++s) cs.for_each([&](const Values&) { return ++sharded, true; }, s, 3);
  EXPECT_EQ(sharded, 729u);
}

TEST(Enumeration, FillingsAgreeWithStats) {
  Graph g = make_toroidal_rect(8, 8);
  Block b = rect_block(g, 2, 2);
  auto bv = boundary(g, b);
  BoundaryConstraint c{2, bv, Values(bv.size(), 1)};
  auto fs = enumerate_fillings(g, b, c);
  auto st = filling_stats(g, b, c);
  EXPECT_EQ(st.count, BigInt(static_cast<unsigned long>(fs.size())));
  BigInt total = 0;
  for (const auto& f : fs) total += static_cast<unsigned long>(weight(f));
  EXPECT_EQ(st.total_weight, total);
  EXPECT_TRUE(is_extensible(g, b, c));
  BoundaryConstraint wrong{2, {0}, {1}};
  EXPECT_THROW(enumerate_fillings(g, b, wrong), InvalidInput);
}
