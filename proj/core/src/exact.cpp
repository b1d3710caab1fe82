#include "kheight/exact.hpp"

#include "kheight/error.hpp"

#include <cstdlib>

namespace kheight {
namespace {

BigInt pow10(int exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return r;
}

// floor(num/den) for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt round_half_even(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  BigInt fl = floor_div(v.get_num(), v.get_den());
  Rational frac = v - Rational(fl);
  int cmp = ::cmp(frac, Rational(1, 2));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
  return fl;
}

}  // namespace

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational round_decimals(const Rational& value, int decimals) {
  BigInt scale = pow10(decimals);
  Rational r(round_half_even(value * scale), scale);
  r.canonicalize();
  return r;
}

Rational ceil_decimals(const Rational& value, int decimals) {
  BigInt scale = pow10(decimals);
  Rational scaled = value * scale;
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(c, scale);
  r.canonicalize();
  return r;
}

Rational floor_decimals(const Rational& value, int decimals) {
  BigInt scale = pow10(decimals);
  Rational scaled = value * scale;
  Rational r(floor_div(scaled.get_num(), scaled.get_den()), scale);
  r.canonicalize();
  return r;
}

std::string to_fixed(const Rational& value, int decimals) {
  BigInt scaled = round_half_even(value * Rational(pow10(decimals)));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals))
      digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
  }
  return negative ? "-" + digits : digits;
}

Rational round_significant(const Rational& value, int significant, Rounding mode) {
  if (value == 0) return Rational(0);
  Rational mag = abs(value);
  // exponent e with 10^e <= mag < 10^(e+1)
  long e = static_cast<long>(mag.get_num().get_str().size()) -
           static_cast<long>(mag.get_den().get_str().size());
  auto p10 = [](long x) {
    return x >= 0 ? Rational(pow10(static_cast<int>(x)))
                  : Rational(BigInt(1), pow10(static_cast<int>(-x)));
  };
  while (mag >= p10(e + 1)) ++e;
  while (mag < p10(e)) --e;
  Rational unit = p10(e - significant + 1);
  Rational scaled = value / unit;
  BigInt q;
  if (mode == Rounding::ceiling)
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  else
    q = round_half_even(scaled);
  Rational rounded = Rational(q) * unit;
  rounded.canonicalize();
  return rounded;
}

std::string to_scientific(const Rational& value, int significant, Rounding mode) {
  if (value == 0) return "0";
  Rational r = round_significant(value, significant, mode);
  Rational mag = abs(r);
  long e = 0;
  auto p10 = [](long x) {
    return x >= 0 ? Rational(pow10(static_cast<int>(x)))
                  : Rational(BigInt(1), pow10(static_cast<int>(-x)));
  };
  e = static_cast<long>(mag.get_num().get_str().size()) -
      static_cast<long>(mag.get_den().get_str().size());
  while (mag >= p10(e + 1)) ++e;
  while (mag < p10(e)) --e;
  std::string mantissa = to_fixed(r / p10(e), significant - 1);
  return mantissa + "e" + std::to_string(e);
}

namespace {

Rational parse_rational_unchecked(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt den(text.substr(slash + 1), 10);
    if (den == 0) throw InvalidInput("zero denominator: " + text);
    Rational r(BigInt(text.substr(0, slash), 10), den);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text, 10));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  int decimals = static_cast<int>(text.size() - dot - 1);
  if (digits == "-" || digits.empty()) throw InvalidInput("bad decimal: " + text);
  Rational r(BigInt(digits, 10), pow10(decimals));
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  try {
    return parse_rational_unchecked(text);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("bad rational literal: " + text);
  }
}

double to_double(const Rational& value) { return value.get_d(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

}  // namespace kheight
