#include "kheight/verify.hpp"

#include <gtest/gtest.h>

using namespace kheight;

TEST(Verify, SuitePasses) {
  VerifyOptions o;
  o.cftp_samples = 5000;
  auto r = run_verify(o);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
  EXPECT_TRUE(r.passed());
  auto json = render_verify_json(r);
  EXPECT_NE(json.find("13/6 ~ 2.166667"), std::string::npos);
}

TEST(Verify, FlippedQEntryIsCaught) {
  VerifyOptions o;
  o.cftp_samples = 500;
  o.mutate_matrices = [](TransferMatrices& m) { m.Q[0][2] = m.Q[0][2] == 0 ? 1 : 0; };
  auto r = run_verify(o);
  EXPECT_FALSE(r.passed());
  for (const auto& c : r.checks) {
    if (c.id == "enumeration.trace_count")
      EXPECT_FALSE(c.passed);
    else
      EXPECT_TRUE(c.passed) << c.id;
  }
}

TEST(Verify, BfsDistanceIsTheL1Distance) {
  Graph g = make_cycle(4);
  auto d = updown_bfs_distances(g, 2);
  auto all = enumerate_heights(g, 2);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) ASSERT_EQ(d[i][j], delta(all[i], all[j]));
}

TEST(Verify, ChiSquare) {
  auto flat = chi_square_uniform({100, 100, 100, 100});
  EXPECT_DOUBLE_EQ(flat.statistic, 0);
  EXPECT_DOUBLE_EQ(flat.p_value, 1);
  auto skew = chi_square_uniform({400, 0, 0, 0});
  EXPECT_LT(skew.p_value, 1e-10);
}
