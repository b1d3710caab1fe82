#include "kheight/enumeration.hpp"
#include "kheight/filling_solver.hpp"
#include "kheight/rng.hpp"

#include <gtest/gtest.h>

using namespace kheight;

namespace {

// Fillings by brute force over (k+1)^|B| assignments of the block.
std::vector<Values> brute_fillings(const Graph& g, const Block& b, int k, const Values& bvals) {
  auto bd = boundary(g, b);
  std::vector<int> full(g.size(), -1);
  for (std::size_t i = 0; i < bd.size(); ++i) full[bd[i]] = bvals[i];
  std::vector<Values> out;
  Values f(b.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < b.size(); ++i) full[b.vertices[i]] = f[i];
    bool ok = true;
    for (auto [u, w] : g.edges())
      if (full[u] >= 0 && full[w] >= 0 && std::abs(full[u] - full[w]) > 1) ok = false;
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && f[i] == k) f[i++] = 0;
    if (i == f.size()) break;
    ++f[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Values random_boundary(const Graph& g, const Block& b, int k, Rng& rng) {
  BoundaryConstraints cs(g, b, k);
  while (true) {
    Values v(cs.vertices().size());
    for (auto& x : v) x = static_cast<Value>(rng.below(k + 1));
    if (BoundaryConstraint{k, cs.vertices(), v}.valid_on(g)) return v;
  }
}

void cross_check(const Graph& g, const Block& b, int k, int trials, std::uint64_t seed) {
  FillingSolver s(g, b, k);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Values bv = random_boundary(g, b, k, rng);
    auto expect = brute_fillings(g, b, k, bv);
    auto got = s.fillings(bv);
    ASSERT_EQ(got, expect);
    auto st = s.stats(bv);
    ASSERT_EQ(st.count, BigInt(static_cast<unsigned long>(expect.size())));
    BigInt w = 0;
    for (const auto& f : expect) w += static_cast<unsigned long>(weight(f));
    ASSERT_EQ(st.total_weight, w);
    ASSERT_EQ(s.extensible(bv), !expect.empty());
    for (std::size_t i = 0; i < expect.size(); i += 1 + expect.size() / 7)
      ASSERT_EQ(s.unrank(bv, i), expect[i]);
  }
}

}  // namespace

TEST(Filling, HexBlockAgainstBruteForce) {
  Graph g = make_toroidal_hex(4, 4);
  for (int k = 1; k <= 3; ++k) cross_check(g, hex_block(g, 1, 1), k, 40, 100 + k);
}

TEST(Filling, RectBlockAgainstBruteForce) {
  Graph g = make_toroidal_rect(8, 8);
  cross_check(g, rect_block(g, 2, 2), 1, 20, 7);
}

TEST(Filling, CaseBlocksAgainstBruteForce) {
  for (const char* id : {"1_5[1,3]", "1_6[1]", "2[1]", "2[2,5]"}) {
    auto cg = make_case_graph(CaseTag::parse(id));
    cross_check(cg.graph, cg.block, 2, 25, 3);
  }
}

TEST(Filling, GenericBlockAgainstBruteForce) {
  // a triangle with a pendant, not a path, cycle or grid
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {0, 5}});
  Block b = classify_block(g, Block{{0, 1, 2, 3}});
  EXPECT_EQ(b.shape, BlockShape::generic);
  cross_check(g, b, 3, 30, 5);
}

TEST(Filling, HexAllZeroBoundary) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s(g, b, 2);
  Values zero(6, 0);
  EXPECT_EQ(s.stats(zero).count, BigInt(64));
  EXPECT_EQ(brute_fillings(g, b, 2, zero).size(), 64u);
}

TEST(Filling, HexExtensibility) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s4(g, b, 4);
  BoundaryConstraints c4(g, b, 4);
  std::uint64_t blocked = 0;
  c4.for_each([&](const Values& v) {
    if (!s4.extensible(v)) {
      ++blocked;
      EXPECT_TRUE(brute_fillings(g, b, 4, v).empty());
    }
    return true;
  });
  EXPECT_GT(blocked, 0u);
  for (int k = 1; k <= 3; ++k) {
    FillingSolver s(g, b, k);
    BoundaryConstraints cs(g, b, k);
    cs.for_each([&](const Values& v) {
      EXPECT_TRUE(s.extensible(v));
      return true;
    });
  }
}

TEST(Filling, UnconstrainedAndSymmetry) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s(g, b, 2);
  EXPECT_EQ(s.unconstrained_count(), BigInt(199));
  // value reversal x -> k - x
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    Values bv = random_boundary(g, b, 2, rng), rev = bv;
    for (auto& x : rev) x = static_cast<Value>(2 - x);
    auto a = s.stats(bv), r = s.stats(rev);
    EXPECT_EQ(a.count, r.count);
    EXPECT_EQ(a.total_weight + r.total_weight, BigInt(2 * 6) * a.count);
  }
}

TEST(Filling, QuantileFillingIsMonotoneAndExact) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s(g, b, 2);
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    Values lo = random_boundary(g, b, 2, rng), hi = random_boundary(g, b, 2, rng);
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] > hi[i]) std::swap(lo[i], hi[i]);
    std::vector<std::uint64_t> u(6);
    for (auto& x : u) x = rng.next();
    Values a = s.quantile_filling(lo, u), c = s.quantile_filling(hi, u);
    ASSERT_TRUE(leq(a, c));
  }
  // u in equal slices of [0, 2^64) hits every filling equally often when
  // there are few fillings: check the extremes map to first and last
  Values bv(6, 1);
  auto all = s.fillings(bv);
  EXPECT_EQ(s.quantile_filling(bv, std::vector<std::uint64_t>(6, 0)), all.front());
  EXPECT_EQ(s.quantile_filling(bv, std::vector<std::uint64_t>(6, ~std::uint64_t{0})), all.back());
}
