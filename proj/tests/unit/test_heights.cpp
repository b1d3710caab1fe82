#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"
#include "kheight/heights.hpp"

#include <gtest/gtest.h>

using namespace kheight;

TEST(Heights, Validation) {
  Graph g = make_path(3);
  EXPECT_TRUE(is_valid(g, 2, {0, 1, 2}));
  EXPECT_FALSE(is_valid(g, 2, {0, 2, 2}));
  EXPECT_THROW(is_valid(g, 2, {0, 1}), InvalidInput);
  EXPECT_THROW(is_valid(g, 2, {0, 1, 3}), InvalidInput);
  EXPECT_THROW(KHeight(g, 2, {2, 0, 0}), InvalidInput);
}

TEST(Heights, CompleteGraphCount) {
  // values in {0,1} or in {1,2}
  for (std::size_t n = 1; n <= 7; ++n)
    EXPECT_EQ(enumerate_heights(make_complete(n), 2).size(), (std::size_t{1} << (n + 1)) - 1);
}

TEST(Heights, PathOfThree) { EXPECT_EQ(enumerate_heights(make_path(3), 2).size(), 17u); }

TEST(Heights, LatticeOperations) {
  Graph g = make_cycle(5);
  auto all = enumerate_heights(g, 2);
  for (const auto& x : all)
    for (const auto& y : all) {
      KHeight m = meet(x, y), j = join(x, y);
      ASSERT_TRUE(is_valid(g, 2, m.values()));
      ASSERT_TRUE(is_valid(g, 2, j.values()));
      ASSERT_TRUE(leq(m, x) && leq(x, j));
      ASSERT_EQ(delta(x, y), delta(m, j));
      ASSERT_EQ(weight(x) + weight(y), weight(m) + weight(j));
    }
}

TEST(Heights, RaiseBuildsCoverPair) {
  BoundaryConstraint low{2, {3, 5, 7}, {0, 1, 2}};
  auto pair = raise(low, 1);
  EXPECT_EQ(pair.high.values, (Values{0, 2, 2}));
  EXPECT_EQ(pair.pivot, 1u);
  EXPECT_THROW(raise(low, 2), InvalidInput);
}
