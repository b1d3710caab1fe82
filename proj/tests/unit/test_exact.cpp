#include "kheight/error.hpp"
#include "kheight/exact.hpp"

#include <gtest/gtest.h>

using namespace kheight;

TEST(Exact, FixedRoundsHalfToEven) {
  EXPECT_EQ(to_fixed(Rational(1, 2000000), 6), "0.000000");
  EXPECT_EQ(to_fixed(Rational(3, 2000000), 6), "0.000002");
  EXPECT_EQ(to_fixed(Rational(119, 149), 6), "0.798658");
  EXPECT_EQ(to_fixed(Rational(-1, 3), 3), "-0.333");
  EXPECT_EQ(to_fixed(Rational(3), 0), "3");
}

TEST(Exact, DecimalHelpersAreCanonical) {
  Rational c = ceil_decimals(Rational(119, 149), 6);
  EXPECT_EQ(c, parse_rational("0.798658"));
  EXPECT_EQ(ceil_decimals(Rational(1, 3), 6), parse_rational("0.333334"));
  EXPECT_EQ(to_string(c), "399329/500000");
  EXPECT_EQ(floor_decimals(Rational(119, 149), 6), parse_rational("0.798657"));
  EXPECT_EQ(round_decimals(Rational(5, 10), 0), Rational(0));
  EXPECT_EQ(to_string(round_decimals(Rational(1, 4), 1)), "1/5");
}

TEST(Exact, ParsesDecimalsInBaseTen) {
  // a leading zero must not switch to octal
  EXPECT_EQ(parse_rational("0.10"), Rational(1, 10));
  EXPECT_EQ(parse_rational("0.798658"), Rational(399329, 500000));
  EXPECT_EQ(parse_rational("-17.0172"), Rational(-42543, 2500));
  EXPECT_EQ(parse_rational("8/11"), Rational(8, 11));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Exact, ScientificNotation) {
  EXPECT_EQ(to_scientific(Rational(46656000000, 400447), 7), "1.165098e5");
  EXPECT_EQ(to_scientific(Rational(46656000000, 400447), 7, Rounding::ceiling), "1.165099e5");
  EXPECT_EQ(to_scientific(Rational(1, 8), 3), "1.25e-1");
  EXPECT_EQ(to_scientific(Rational(999999, 100000), 3), "1.00e1");
  EXPECT_EQ(round_significant(Rational(12345), 2), Rational(12000));
}
