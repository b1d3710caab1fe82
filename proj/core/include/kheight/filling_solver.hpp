#pragma once

#include "kheight/exact.hpp"
#include "kheight/graph.hpp"
#include "kheight/heights.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace kheight {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

// Number and total weight of the admissible fillings of a block.
struct FillingStats {
  BigInt count;
  BigInt total_weight;

  // total_weight / count; throws InvalidInput when count is zero.
  Rational expected_weight() const;
  friend bool operator==(const FillingStats&, const FillingStats&) = default;
};

// Same as FillingStats in machine words, for inner loops where
// FillingSolver::fits_u64() holds.
struct FillingStats64 {
  std::uint64_t count = 0;
  std::uint64_t total_weight = 0;
};

// Closed value range allowed at one block vertex. Empty when lo > hi.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo > hi; }
};

// Counting, weighing, enumerating and unranking the fillings of one block
// for arbitrary values on its boundary. Boundary values are given in the
// order of boundary() (sorted vertex ids); fillings are given in the
// block's vertex order and enumerated lexicographically in that order.
//
// Paths and cycles sweep vertex by vertex with every boundary pin folded
// into a per-vertex interval; cycles close by conditioning on the first
// value. Grids sweep row by row over within-row-valid vectors. Anything
// else is backtracked, subject to the raw-assignment cap.
class FillingSolver {
 public:
  FillingSolver(const Graph& graph, const Block& block, int k,
                std::uint64_t cap = kDefaultEnumerationCap);

  int k() const noexcept { return k_; }
  const Block& block() const noexcept { return block_; }
  const std::vector<Vertex>& boundary() const noexcept { return boundary_; }
  // True when every count and total weight of this block fits in 63 bits.
  bool fits_u64() const noexcept { return fits_u64_; }

  // Per-vertex admissible values implied by the boundary alone.
  std::vector<Interval> intervals(const Values& boundary_values) const;

  FillingStats stats(const Values& boundary_values) const;
  FillingStats stats(const std::vector<Interval>& intervals) const;
  FillingStats64 stats64(const Values& boundary_values) const;
  FillingStats64 stats64(const std::vector<Interval>& intervals) const;
  bool extensible(const Values& boundary_values) const;

  // Number of valid heights of G[B] without any boundary.
  BigInt unconstrained_count() const;

  void for_each_filling(const Values& boundary_values,
                        const std::function<void(const Values&)>& fn) const;
  std::vector<Values> fillings(const Values& boundary_values) const;
  // The filling with lexicographic rank `index`; requires fits_u64() and
  // index < count.
  Values unrank(const Values& boundary_values, std::uint64_t index) const;
  // Sequential inverse-CDF draw: position i takes the smallest value whose
  // conditional cumulative share exceeds u[i] / 2^64. Feeding the same u to
  // two comparable boundaries gives comparable fillings. Requires fits_u64().
  Values quantile_filling(const Values& boundary_values,
                          const std::vector<std::uint64_t>& u) const;

 private:
  template <class T>
  void run(const std::vector<Interval>& iv, T& count, T& weight) const;
  template <class T>
  void run_path(const std::vector<Interval>& iv, T& count, T& weight) const;
  template <class T>
  void run_cycle(const std::vector<Interval>& iv, T& count, T& weight) const;
  template <class T>
  void run_grid(const std::vector<Interval>& iv, T& count, T& weight) const;
  template <class T>
  void run_generic(const std::vector<Interval>& iv, T& count, T& weight) const;

  void backtrack(const std::vector<Interval>& iv,
                 const std::function<void(const Values&)>& fn) const;

  int k_;
  Block block_;
  std::vector<Vertex> boundary_;
  // pins_[i]: positions in boundary_ adjacent to block position i.
  std::vector<std::vector<std::size_t>> pins_;
  // earlier_[i]: block positions j < i adjacent to position i.
  std::vector<std::vector<std::size_t>> earlier_;
  bool fits_u64_ = false;
  std::uint64_t cap_;

  // Grid rows: every valid row vector, its weight, and compatible pairs.
  std::vector<Values> rows_;
  std::vector<std::uint32_t> row_weight_;
  std::vector<std::vector<std::uint32_t>> row_compat_;
};

}  // namespace kheight
