#pragma once

#include "kheight/exact.hpp"
#include "kheight/filling_solver.hpp"
#include "kheight/graph.hpp"
#include "kheight/heights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kheight {

struct DivergenceReport {
  int k = 0;
  std::string case_id;
  BigInt omega_B;         // heights of G[B]
  BigInt omega_boundary;  // boundary assignments valid on G[boundary]
  Rational e_max;
  // Witness cover pair: low constraint on `boundary`, raised at
  // boundary[pivot_position].
  std::vector<Vertex> boundary;
  Values witness_low;
  std::size_t pivot_position = 0;
  // false when the search stopped at a threshold instead of maximizing
  bool complete = true;

  Vertex pivot() const { return boundary.at(pivot_position); }
};

// E[w | high] - E[w | low] for uniformly drawn admissible fillings, or
// nullopt when either side is not extensible.
std::optional<Rational> expected_gap(const FillingSolver& solver,
                                     const CoverPair<BoundaryConstraint>& pair);
std::optional<Rational> expected_gap(const Graph& graph, const Block& block,
                                     const CoverPair<BoundaryConstraint>& pair);

struct DivergenceOptions {
  // 0 picks KHEIGHT_THREADS or the hardware concurrency.
  unsigned threads = 0;
  // Tables of per-constraint statistics above this many entries are not
  // materialized; pairs are then evaluated on the fly.
  std::uint64_t table_limit = std::uint64_t{1} << 24;
};

unsigned default_threads();

// Maximum expected gap over extensible cover pairs raised at boundary
// vertex v. Ties go to the lexicographically smallest low constraint.
DivergenceReport block_divergence(const Graph& graph, const Block& block,
                                  Vertex v, int k,
                                  const DivergenceOptions& options = {});
// Maximum over every boundary vertex; ties go to the earliest pivot.
DivergenceReport max_block_divergence(const Graph& graph, const Block& block,
                                      int k,
                                      const DivergenceOptions& options = {});

// ---------------------------------------------------------------------------
// 4x4 blocks of the rect torus, computed side by side: three sides are
// enumerated as paths and the fourth is folded in through a row DP, so
// 3^16 (k=2) or 4^16 (k=3) constraints never have to be visited one at a
// time. Pivots sit on the top side at offsets 0..3 from the left corner.
//
// The witness is expressed on the block at (2,2) of an 8x8 torus, whose
// sorted boundary lists top, then left/right interleaved by row, then bottom.

struct RectDivergenceOptions {
  std::vector<int> pivot_offsets = {0, 1};
  // Stop at the first cover pair whose gap exceeds this value.
  std::optional<Rational> stop_above;
  unsigned threads = 0;
};

struct RectDivergenceResult {
  std::vector<DivergenceReport> per_pivot;  // one per requested offset
  DivergenceReport best;
};

RectDivergenceResult rect_divergence(int k, const RectDivergenceOptions& options = {});

// The canonical 8x8 torus and block used by rect_divergence.
Graph rect_reference_graph();
Block rect_reference_block(const Graph& graph);

// Side offsets (0-based from the corner) that represent all 16 boundary
// vertices under the dihedral symmetry of the block.
std::vector<int> rect_symmetry_distinct_pivots();

// ---------------------------------------------------------------------------
// Case graphs of 3-regular blocks.

DivergenceReport case_divergence(const CaseTag& tag, int k,
                                 const DivergenceOptions& options = {});

// Hex block of a 4x4 hex torus.
DivergenceReport hex_divergence(int k, const DivergenceOptions& options = {});

}  // namespace kheight
