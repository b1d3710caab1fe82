#pragma once

#include "kheight/divergence.hpp"
#include "kheight/exact.hpp"
#include "kheight/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kheight {

enum class TableId { rect, hex, type1, type2 };

std::string to_string(TableId id);
TableId parse_table_id(const std::string& text);

// Published block divergence data. e_max is kept as the printed decimal;
// lower_bound marks a row that only claims "> e_max".
struct GoldenRow {
  TableId table;
  int k;
  std::string case_id;
  std::optional<BigInt> omega_B;
  std::optional<BigInt> omega_boundary;
  std::string e_max;
  bool lower_bound = false;
};

const std::vector<GoldenRow>& golden_rows();
std::vector<GoldenRow> golden_rows(TableId table, int k);
std::optional<GoldenRow> golden_row(TableId table, int k, const std::string& case_id);

// Block cases of a 3-regular face, one representative per symmetry class.
std::vector<CaseTag> case_catalog(CaseType type);

struct TableOptions {
  // Restrict type1/type2 tables to these case ids.
  std::vector<std::string> cases;
  // Full maximization for the rect k=4 row instead of the witness search.
  bool full_rect = false;
  unsigned threads = 0;
};

struct TableRow {
  DivergenceReport report;
  std::optional<GoldenRow> golden;
  bool matches = true;  // true when there is nothing to compare against
  std::string mismatch;
};

// Counts must be equal; e_max must round (half to even, 6 decimals) to
// within one unit of the printed value.
bool matches_golden(const DivergenceReport& report, const GoldenRow& golden,
                    std::string* why = nullptr);

std::vector<TableRow> reproduce_table(TableId table, int k,
                                      const TableOptions& options = {});

// ---------------------------------------------------------------------------
// Per-vertex aggregates for the face-block family of 3-regular planar graphs.

enum class Connectivity { two, three, dual4 };

std::string to_string(Connectivity c);

// Upper bound implied by a value printed to 6 decimals: the rounded value
// plus one unit in the last place.
Rational printed_upper_bound(const Rational& exact);

struct AggregateReport {
  Connectivity connectivity;
  int k = 0;
  std::string extremal_case;
  Rational e_star_exact;  // max (E - 1) / #neighbours over admissible cases
  Rational e_star;        // bound used in the arithmetic
  // E of case 2[1] (same as 2[8]); unused for two-connected graphs
  Rational h_exact;
  Rational h_bound;
  Rational sum_exact;  // bound on the divergence sum over blocks with v on the boundary
  Rational sum;
  // 24 minus the divergence sum: lower bound on the per-vertex margin
  Rational margin_exact;
  Rational margin;
};

// Computes every admissible case afresh.
AggregateReport regular_aggregates(Connectivity connectivity, int k,
                                   const DivergenceOptions& options = {});

// Whether a case can occur next to a vertex of the given connectivity.
bool admissible(const CaseTag& tag, Connectivity connectivity);

}  // namespace kheight
