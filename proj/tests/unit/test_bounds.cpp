#include "kheight/bounds.hpp"
#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace kheight;

TEST(Bounds, ConstantsFromPublishedDenominators) {
  struct Case {
    std::uint64_t b, m;
    int k;
    const char* denominator;
    const char* published;
  };
  for (const auto& c : {Case{6, 3, 3, "0.252141", "7.017788e6"},
                        Case{16, 16, 3, "1.978568", "1.333706e13"},
                        Case{16, 16, 2, "6.199256", "2.844202e10"},
                        Case{10, 24, 2, "5.163775", "4.391132e7"},
                        Case{10, 24, 2, "10.329756", "2.195097e7"},
                        Case{10, 24, 3, "1.244799", "4.852027e9"},
                        Case{10, 24, 2, "15.2256", "1.489256e7"}}) {
    Rational value = c_constant(c.b, c.m, c.k, parse_rational(c.denominator));
    EXPECT_TRUE(published_constant_matches(value, c.published))
        << c.published << " vs " << to_scientific(value, 10);
  }
}

TEST(Bounds, GridFamilies) {
  auto hex2 = family_bound(Family::hex, 2);
  ASSERT_TRUE(hex2.c.has_value());
  EXPECT_EQ(format_constant(*hex2.c), "1.165099e5");
  auto hex3 = family_bound(Family::hex, 3);
  EXPECT_EQ(hex3.denominator, parse_rational("0.252141"));
  EXPECT_EQ(format_constant(*hex3.c), "7.017788e6");
  EXPECT_FALSE(family_bound(Family::hex, 4).certificate);
  auto rect3 = family_bound(Family::rect, 3);
  EXPECT_EQ(rect3.denominator, parse_rational("1.978568"));
  EXPECT_TRUE(published_constant_matches(*rect3.c, "1.333706e13"));
  auto rect2 = family_bound(Family::rect, 2);
  EXPECT_TRUE(published_constant_matches(*rect2.c, "2.844202e10"));
}

TEST(Bounds, RegularFamilies) {
  auto r3 = family_bound(Family::regular3, 3);
  EXPECT_EQ(to_fixed(r3.input, 6), "2.489598");
  EXPECT_EQ(format_constant(*r3.c), "4.852027e9");
  EXPECT_FALSE(family_bound(Family::regular2, 3).certificate);
}

TEST(Bounds, RelaxedBetaBoundsExactBeta) {
  // hex torus membership and boundary sums from fresh per-block values
  Graph g = make_toroidal_hex(4, 4);
  auto fam = hex_block_family(g);
  auto mem = membership_counts(g, fam);
  auto bnd = boundary_counts(g, fam);
  Rational e = Rational(119, 149);
  std::vector<Rational> sums;
  for (auto s : bnd) sums.push_back(Rational(static_cast<long>(s)) * (e - 1));
  Rational exact = beta_exact(mem, sums, fam.total_count());
  auto cor = beta_relaxed(3, 3, e, fam.total_count());
  EXPECT_GE(cor.beta, exact);
  EXPECT_TRUE(cor.certificate);
  EXPECT_FALSE(beta_relaxed(3, 3, Rational(3), 16).certificate);
}

TEST(Bounds, TauBound) {
  double a = tau_bound(1e5, 100, 2, 0.25), b = tau_bound(1e5, 200, 2, 0.25);
  EXPECT_GT(b, a);
  EXPECT_THROW(tau_bound(1e5, 100, 2, 0.5), InvalidInput);
  EXPECT_THROW(tau_bound(1e5, 100, 2, 0.0), InvalidInput);
  EXPECT_GT(tau_bound(1e5, 100, 2, 0.4999), tau_bound(1e5, 100, 2, 0.49));
  // quadratic-times-log growth
  double r = tau_bound(1, 20000, 2, 0.25) / tau_bound(1, 10000, 2, 0.25);
  EXPECT_NEAR(r, 4 * std::log(2 * 20000 / 0.25) / std::log(2 * 10000 / 0.25), 0.01);
}

TEST(Bounds, MarginalBound) {
  EXPECT_EQ(marginal_bound(1, 5), Rational(1, 2));
  EXPECT_EQ(marginal_bound(2, 3), Rational(1, 9));
  // every realizable single-site conditional probability is at least the bound
  Graph g = make_cycle(5);
  auto all = enumerate_heights(g, 2);
  Rational b = marginal_bound(2, 2);
  for (Vertex v = 0; v < g.size(); ++v) {
    std::map<Values, std::map<int, int>> by_rest;
    for (const auto& x : all) {
      Values rest = x.values();
      rest[v] = 0;
      ++by_rest[rest][x[v]];
    }
    for (const auto& [rest, values] : by_rest) {
      int total = 0;
      for (auto [val, n] : values) total += n;
      for (auto [val, n] : values) EXPECT_GE(Rational(n, total), b);
    }
  }
}

TEST(Bounds, FamilyNames) {
  EXPECT_EQ(parse_family("dual4"), Family::dual4);
  EXPECT_THROW(parse_family("square"), InvalidInput);
  EXPECT_EQ(family_parameters(Family::hex).b, 6u);
}
