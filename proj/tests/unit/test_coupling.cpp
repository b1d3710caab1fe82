#include "kheight/coupling.hpp"
#include "kheight/divergence.hpp"
#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"
#include "kheight/verify.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace kheight;

namespace {

void expect_marginals(const JointCoupling& c) {
  std::vector<Rational> rows(c.low_set.size(), Rational(0)), cols(c.high_set.size(), Rational(0));
  for (const auto& e : c.support) {
    rows[e.low] += c.probability(e);
    cols[e.high] += c.probability(e);
    EXPECT_TRUE(leq(c.low_set[e.low], c.high_set[e.high]));
  }
  for (const auto& r : rows) EXPECT_EQ(r, Rational(1, static_cast<long>(c.low_set.size())));
  for (const auto& r : cols) EXPECT_EQ(r, Rational(1, static_cast<long>(c.high_set.size())));
}

}  // namespace

TEST(Coupling, StrassenOnHexCoverPairs) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s(g, b, 2);
  BoundaryConstraints cs(g, b, 2);
  int checked = 0;
  cs.for_each([&](const Values& v) {
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (v[p] == 2) continue;
      auto pair = raise(BoundaryConstraint{2, cs.vertices(), v}, p);
      auto c = strassen_joint(s.fillings(pair.low.values), s.fillings(pair.high.values));
      expect_marginals(c);
      EXPECT_EQ(c.expected_distance(), *expected_gap(s, pair));
      ++checked;
    }
    return checked < 300;
  });
}

TEST(Coupling, StrassenRejectsNonDominatedSets) {
  std::vector<Values> low{{1, 1}}, high{{0, 0}, {2, 2}};
  EXPECT_THROW(strassen_joint(low, high), DominanceViolation);
  std::vector<Values> low2{{0, 0}, {2, 0}}, high2{{1, 1}, {0, 2}};
  EXPECT_THROW(strassen_joint(low2, high2), DominanceViolation);
  EXPECT_THROW(strassen_joint({}, high), InvalidInput);
}

TEST(Coupling, SingletonShortCircuit) {
  auto c = strassen_joint({{0, 1}}, {{1, 1}, {1, 2}});
  EXPECT_EQ(c.support.size(), 2u);
  EXPECT_EQ(c.expected_distance(), Rational(3, 2));
  expect_marginals(c);
}

TEST(Coupling, ConditionalSamplingFollowsRows) {
  // low {0} < {1}; high {1} < {2}: {1} can only pair with {1} or {2}
  auto c = strassen_joint({{0}, {1}}, {{1}, {2}});
  Rng rng(1);
  std::vector<int> hits(2);
  for (int i = 0; i < 4000; ++i) {
    std::size_t j = c.sample_high_given_low(1, rng);
    ASSERT_TRUE(leq(c.low_set[1], c.high_set[j]));
    ++hits[j];
    std::size_t back = c.sample_low_given_high(0, rng);
    ASSERT_TRUE(leq(c.low_set[back], c.high_set[0]));
  }
  // the row's conditional law is reproduced
  for (std::size_t j = 0; j < 2; ++j) {
    Rational mass = 0;
    for (std::size_t id : c.rows[1])
      if (c.support[id].high == j) mass += c.probability(c.support[id]) * 2;
    EXPECT_NEAR(hits[j] / 4000.0, to_double(mass), 0.05);
  }
}

TEST(Coupling, LatticePath) {
  Graph g = make_cycle(6);
  auto all = enumerate_heights(g, 2);
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto& x = all[rng.below(all.size())];
    const auto& y = all[rng.below(all.size())];
    auto path = lattice_path(g, x, y);
    ASSERT_EQ(path.size(), delta(x, y) + 1);
    EXPECT_EQ(path.front(), x);
    EXPECT_EQ(path.back(), y);
    for (const auto& h : path) EXPECT_TRUE(is_valid(g, 2, h.values()));
    for (const auto& pair : path_decompose(g, x, y)) {
      EXPECT_EQ(delta(pair.low, pair.high), 1u);
      EXPECT_EQ(pair.high[pair.pivot], pair.low[pair.pivot] + 1);
    }
  }
}

TEST(Coupling, NonContractionExample) {
  Graph g = make_path(3);
  for (int k : {2, 3}) {
    KHeight x(g, k, {1, 0, 1}), y(g, k, {1, 2, 1});
    EXPECT_EQ(expected_updown_distance(g, x, y), Rational(13, 6)) << "k=" << k;
  }
}

TEST(Coupling, UpDownCouplingIsMonotoneExhaustively) {
  // every comparable pair, every (v, delta), accepted and rejected
  for (const Graph& g : {make_path(3), make_cycle(4), make_complete(4)}) {
    auto all = enumerate_heights(g, 2);
    for (const auto& x : all)
      for (const auto& y : all) {
        if (!leq(x, y)) continue;
        for (Vertex v = 0; v < g.size(); ++v)
          for (int d : {-1, 1}) {
            KHeight a = x, b = y;
            UpDownMove m{v, d, 0.25};
            apply_updown(g, a, m);
            apply_updown(g, b, m);
            ASSERT_TRUE(leq(a, b));
          }
      }
  }
}

TEST(Coupling, SingleVertexCoalescenceTime) {
  // from (0, 1) every accepted move coalesces: geometric with success 1/2
  Graph g = make_path(1);
  auto s = coupling_time_estimate(g, 1, ChainKind::updown, nullptr, 20000, 7);
  EXPECT_NEAR(s.mean, 2.0, 0.05);
  EXPECT_GE(*std::min_element(s.times.begin(), s.times.end()), 1u);
}

TEST(Coupling, BlockCouplingStaysOrdered) {
  Graph g = make_toroidal_hex(4, 4);
  BlockSampler sampler(g, hex_block_family(g), 2);
  JointCache cache;
  CoupledState st{KHeight::bottom(g, 2), KHeight::top(g, 2), 0, Rng(3)};
  for (int i = 0; i < 3000 && st.low != st.high; ++i) {
    coupled_block_step(sampler, st, &cache);
    ASSERT_TRUE(leq(st.low, st.high));
    ASSERT_TRUE(is_valid(g, 2, st.low.values()));
    ASSERT_TRUE(is_valid(g, 2, st.high.values()));
  }
  EXPECT_EQ(st.low, st.high);
}

TEST(Coupling, BlockCouplingOnLargeBlocks) {
  Graph g = make_toroidal_rect(8, 8);
  BlockSampler sampler(g, rect_block_family(g), 2);
  CoupledState st{KHeight::bottom(g, 2), KHeight::top(g, 2), 0, Rng(4)};
  for (int i = 0; i < 2000 && st.low != st.high; ++i) {
    coupled_block_step(sampler, st);
    ASSERT_TRUE(leq(st.low, st.high));
  }
  EXPECT_EQ(st.low, st.high);
}

TEST(Coupling, CftpIsDeterministicAndUniform) {
  Graph g = make_complete(4);
  EXPECT_EQ(cftp_sample(g, 2, 99), cftp_sample(g, 2, 99));
  EXPECT_EQ(cftp_sample(g, 0, 1), KHeight::bottom(g, 0));
  auto all = enumerate_heights(g, 2);
  std::map<Values, std::size_t> idx;
  for (std::size_t i = 0; i < all.size(); ++i) idx[all[i].values()] = i;
  std::vector<std::uint64_t> counts(all.size());
  for (std::uint64_t i = 0; i < 20000; ++i) ++counts[idx.at(cftp_sample(g, 2, Rng::derive(8, i)).values())];
  EXPECT_GT(chi_square_uniform(counts).p_value, 0.001);
  CftpOptions tight;
  tight.max_epochs = 1;
  EXPECT_THROW(cftp_sample(make_toroidal_rect(8, 8), 3, 1, tight), EpochCapExceeded);
}

TEST(Coupling, TimeSummary) {
  auto s = summarize_times({5, 1, 3, 2, 4});
  EXPECT_DOUBLE_EQ(s.mean, 3.0);
  EXPECT_DOUBLE_EQ(s.median, 3.0);
  EXPECT_DOUBLE_EQ(s.q10, 1.4);
  EXPECT_DOUBLE_EQ(s.q90, 4.6);
}
