#pragma once

#include "kheight/exact.hpp"
#include "kheight/filling_solver.hpp"
#include "kheight/graph.hpp"
#include "kheight/heights.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace kheight {

using Matrix = std::vector<std::vector<BigInt>>;

// 0/1 transfer matrices over values 0..k: P allows steps of at most 1,
// Q steps of at most 2 (two boundary vertices around a block corner).
struct TransferMatrices {
  int k = 0;
  Matrix P;
  Matrix Q;

  explicit TransferMatrices(int k);
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned exponent);
BigInt trace(const Matrix& a);

// tr((Q P^3)^4): the extensible boundary constraints of a 4x4 block.
BigInt count_rect_extensible(int k);
BigInt count_rect_extensible(const TransferMatrices& m);
// tr(P^L): heights of an L-cycle.
BigInt count_cycle_heights(int k, unsigned length);

// All k-heights of the graph in lexicographic order. Throws CapExceeded when
// (k+1)^n exceeds `cap`.
std::vector<KHeight> enumerate_heights(const Graph& graph, int k,
                                       std::uint64_t cap = kDefaultEnumerationCap);
void for_each_height(const Graph& graph, int k,
                     const std::function<void(const Values&)>& fn,
                     std::uint64_t cap = kDefaultEnumerationCap);

// Fillings in block order, lexicographic. The constraint must be given on
// exactly the sorted boundary of the block.
std::vector<Values> enumerate_fillings(const Graph& graph, const Block& block,
                                       const BoundaryConstraint& constraint);
bool is_extensible(const Graph& graph, const Block& block,
                   const BoundaryConstraint& constraint);
FillingStats filling_stats(const Graph& graph, const Block& block,
                           const BoundaryConstraint& constraint);

// Assignments of the block boundary that are valid on G[boundary], in
// lexicographic order (first boundary vertex most significant).
class BoundaryConstraints {
 public:
  BoundaryConstraints(const Graph& graph, const Block& block, int k);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int k() const noexcept { return k_; }
  // (k+1)^|boundary|, valid or not.
  BigInt raw_count() const;
  // Number of assignments valid on G[boundary].
  BigInt count() const;

  // Streams constraints; shard `s` of `shards` gets those whose mixed-radix
  // rank is congruent to s, so shards partition the stream. Returning false
  // from fn stops the iteration.
  void for_each(const std::function<bool(const Values&)>& fn,
                unsigned shard = 0, unsigned shards = 1) const;

  // Mixed-radix rank, first boundary vertex most significant.
  std::uint64_t rank(const Values& values) const;
  Values unrank(std::uint64_t rank) const;

 private:
  int k_;
  std::vector<Vertex> vertices_;
  // edges_[i]: earlier boundary positions adjacent to position i.
  std::vector<std::vector<std::size_t>> edges_;
};

}  // namespace kheight
