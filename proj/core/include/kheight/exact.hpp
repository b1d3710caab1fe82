#pragma once

#include <gmpxx.h>

#include <string>

namespace kheight {

using BigInt = mpz_class;
using Rational = mpq_class;

// Decimal rendering of exact rationals. Rounding is half-to-even on the
// exact value, never on a floating-point approximation.
std::string to_fixed(const Rational& value, int decimals);

// Smallest multiple of 10^-decimals that is >= value.
Rational ceil_decimals(const Rational& value, int decimals);
// Largest multiple of 10^-decimals that is <= value.
Rational floor_decimals(const Rational& value, int decimals);
// Nearest multiple of 10^-decimals, ties to even.
Rational round_decimals(const Rational& value, int decimals);

enum class Rounding { half_even, ceiling };

// "1.165099e5" style with `significant` digits.
std::string to_scientific(const Rational& value, int significant,
                          Rounding mode = Rounding::half_even);
// Rounds to `significant` digits and returns the result as an exact rational.
Rational round_significant(const Rational& value, int significant,
                           Rounding mode = Rounding::half_even);

// Parses "0.798658", "-17.0172", "8/11" or "3" exactly.
Rational parse_rational(const std::string& text);

double to_double(const Rational& value);
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);  // "p/q" or "p"

BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace kheight
