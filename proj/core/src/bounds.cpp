#include "kheight/bounds.hpp"

#include "kheight/divergence.hpp"
#include "kheight/error.hpp"

#include <cmath>

namespace kheight {

Rational beta_exact(const std::vector<std::uint64_t>& membership,
                    const std::vector<Rational>& divergence_sum,
                    std::uint64_t family_size) {
  if (membership.size() != divergence_sum.size() || membership.empty())
    throw InvalidInput("need membership and divergence data for every vertex");
  if (family_size == 0) throw InvalidInput("empty block family");
  Rational best;
  for (std::size_t v = 0; v < membership.size(); ++v) {
    Rational b = 1 - (Rational(static_cast<unsigned long>(membership[v])) - divergence_sum[v]) /
                         Rational(static_cast<unsigned long>(2 * family_size));
    if (v == 0 || b > best) best = b;
  }
  return best;
}

RelaxedBeta beta_relaxed(std::uint64_t m_min, std::uint64_t s,
                              const Rational& e_max, std::uint64_t family_size) {
  if (family_size == 0) throw InvalidInput("empty block family");
  RelaxedBeta out;
  Rational margin = Rational(static_cast<unsigned long>(m_min)) -
                    Rational(static_cast<unsigned long>(s)) * (e_max - 1);
  out.beta = 1 - margin / Rational(static_cast<unsigned long>(2 * family_size));
  out.certificate = out.beta < 1;
  return out;
}

Rational c_constant(std::uint64_t b, std::uint64_t m, int k,
                    const Rational& denominator) {
  if (b == 0 || m == 0 || k <= 0 || denominator <= 0)
    throw InvalidInput("c_constant needs positive inputs");
  BigInt num = BigInt(8) * BigInt(static_cast<unsigned long>(b)) *
               BigInt(static_cast<unsigned long>(m)) * BigInt(k) * pow(BigInt(k + 1), b);
  Rational c = Rational(num) / denominator;
  c.canonicalize();
  return c;
}

std::string format_constant(const Rational& c) {
  return to_scientific(c, 7, Rounding::ceiling);
}

bool published_constant_matches(const Rational& c, const std::string& published) {
  return to_scientific(c, 7) == published || to_scientific(c, 7, Rounding::ceiling) == published;
}

double tau_bound(double c, std::uint64_t n, int k, double eps) {
  if (!(eps > 0 && eps < 0.5)) throw InvalidInput("eps must lie in (0, 1/2)");
  if (n == 0 || k <= 0) throw InvalidInput("tau_bound needs n >= 1 and k >= 1");
  const double nn = static_cast<double>(n);
  return c * (std::log(1 / eps) * nn + nn * nn * std::log(k + 1.0)) *
         std::log(k * nn / eps) / std::log(1 / (2 * eps));
}

Rational marginal_bound(int k, int max_degree) {
  if (k < 1 || max_degree < 2) throw InvalidInput("marginal_bound needs k >= 1, degree >= 2");
  BigInt exponent = pow(BigInt(max_degree - 1), static_cast<unsigned long>(k - 1));
  if (!exponent.fits_ulong_p()) throw InvalidInput("exponent too large");
  Rational r(BigInt(1), pow(BigInt(k + 1), exponent.get_ui()));
  r.canonicalize();
  return r;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::rect: return "rect";
    case Family::hex: return "hex";
    case Family::regular2: return "regular2";
    case Family::regular3: return "regular3";
    case Family::dual4: return "dual4";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (auto f : {Family::rect, Family::hex, Family::regular2, Family::regular3, Family::dual4})
    if (to_string(f) == text) return f;
  throw InvalidInput("unknown family: " + text);
}

FamilyParameters family_parameters(Family f) {
  switch (f) {
    case Family::rect: return {16, 16, 16, 16};
    case Family::hex: return {6, 3, 3, 3};
    default: return {10, 24, 24, 30};
  }
}

FamilyBound family_bound(Family family, int k, unsigned threads) {
  FamilyBound out;
  out.family = family;
  out.k = k;
  out.params = family_parameters(family);
  const auto& p = out.params;
  if (family == Family::rect || family == Family::hex) {
    if (k < 1) throw InvalidInput("k must be >= 1");
    DivergenceReport r;
    if (family == Family::rect) {
      RectDivergenceOptions o;
      o.threads = threads;
      r = rect_divergence(k, o).best;
    } else {
      DivergenceOptions o;
      o.threads = threads;
      r = hex_divergence(k, o);
    }
    out.input_exact = r.e_max;
    out.input = printed_upper_bound(r.e_max);
    auto half_margin = [&](const Rational& e) {
      Rational d = (Rational(static_cast<unsigned long>(p.m_min)) -
                    Rational(static_cast<unsigned long>(p.s)) * (e - 1)) / 2;
      d.canonicalize();
      return d;
    };
    out.denominator_exact = half_margin(out.input_exact);
    out.denominator = half_margin(out.input);
    if (family == Family::hex)
      out.notes.push_back(
          "the introduction's hexagonal constants 1.747648e5 / 1.052669e7 disagree "
          "with the section's own arithmetic; these values follow the latter");
  } else {
    Connectivity conn = family == Family::regular2   ? Connectivity::two
                        : family == Family::regular3 ? Connectivity::three
                                                     : Connectivity::dual4;
    DivergenceOptions o;
    o.threads = threads;
    auto agg = regular_aggregates(conn, k, o);
    out.input_exact = agg.margin_exact;
    out.input = agg.margin;
    out.denominator_exact = agg.margin_exact / 2;
    out.denominator = agg.margin / 2;
    out.notes.push_back("extremal case " + agg.extremal_case);
  }
  out.certificate = out.denominator > 0;
  if (out.certificate) {
    out.c = c_constant(p.b, p.m, k, out.denominator);
    if (out.denominator_exact > 0) out.c_exact = c_constant(p.b, p.m, k, out.denominator_exact);
  }
  return out;
}

}  // namespace kheight
