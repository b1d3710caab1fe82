#pragma once

#include "kheight/exact.hpp"
#include "kheight/tables.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kheight {

// max over v of 1 - (membership[v] - divergence_sum[v]) / (2 |family|),
// where divergence_sum[v] sums E_{B,v} - 1 over blocks with v on the boundary.
Rational beta_exact(const std::vector<std::uint64_t>& membership,
                    const std::vector<Rational>& divergence_sum,
                    std::uint64_t family_size);

struct RelaxedBeta {
  Rational beta;
  bool certificate = false;  // beta < 1
};

// 1 - (m_min - s (E_max - 1)) / (2 |family|).
RelaxedBeta beta_relaxed(std::uint64_t m_min, std::uint64_t s,
                              const Rational& e_max, std::uint64_t family_size);

// 8 b m k (k+1)^b / ((1 - beta) |family|).
Rational c_constant(std::uint64_t b, std::uint64_t m, int k,
                    const Rational& one_minus_beta_times_family);
// Seven significant digits rounded up, "1.165099e5".
std::string format_constant(const Rational& c);

// Whether a constant printed to seven significant digits ("2.844202e10")
// is the nearest or the rounded-up rendering of c.
bool published_constant_matches(const Rational& c, const std::string& published);

// c ((log(1/eps) n) + n^2 log(k+1)) log(k n / eps) / log(1/(2 eps)), natural
// logarithms. Throws InvalidInput unless 0 < eps < 1/2.
double tau_bound(double c, std::uint64_t n, int k, double eps);

// 1 / (k+1)^((max_degree - 1)^(k - 1)).
Rational marginal_bound(int k, int max_degree);

// ---------------------------------------------------------------------------
// Constants of the block families, recomputed from fresh divergence data.

enum class Family { rect, hex, regular2, regular3, dual4 };

std::string to_string(Family f);
Family parse_family(const std::string& text);

struct FamilyParameters {
  std::uint64_t b = 0;      // largest block
  std::uint64_t m = 0;      // largest per-vertex membership
  std::uint64_t m_min = 0;  // smallest per-vertex membership
  std::uint64_t s = 0;      // largest per-vertex boundary membership
};

FamilyParameters family_parameters(Family f);

struct FamilyBound {
  Family family;
  int k = 0;
  FamilyParameters params;
  // Grid families: the divergence used (exact and the printed-value bound).
  // Regular families: the per-vertex margin from the aggregates.
  Rational input_exact;
  Rational input;
  // (1 - beta) |family|, i.e. beta = 1 - denominator / |family|.
  Rational denominator_exact;
  Rational denominator;
  bool certificate = false;
  std::optional<Rational> c_exact;
  std::optional<Rational> c;
  std::vector<std::string> notes;
};

FamilyBound family_bound(Family family, int k, unsigned threads = 0);

}  // namespace kheight
