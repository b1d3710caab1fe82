#pragma once

#include "kheight/graph.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace kheight {

using Value = std::uint8_t;
using Values = std::vector<Value>;

// True iff every edge satisfies |values[v] - values[w]| <= 1. Throws
// InvalidInput if the length is wrong or a value exceeds k.
bool is_valid(const Graph& graph, int k, const Values& values);

// A k-height of a fixed graph. The graph is not stored; operations that
// combine two heights only check that k and the length agree.
class KHeight {
 public:
  KHeight() = default;
  // Validates against the graph; throws InvalidInput if not a k-height.
  KHeight(const Graph& graph, int k, Values values);

  static KHeight bottom(const Graph& graph, int k);
  static KHeight top(const Graph& graph, int k);
  // No validation. Used by chains, which only ever apply checked moves.
  static KHeight unchecked(int k, Values values);

  int k() const noexcept { return k_; }
  const Values& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Value operator[](std::size_t v) const { return values_[v]; }
  void set(std::size_t v, Value x) { values_[v] = x; }

  friend bool operator==(const KHeight&, const KHeight&) = default;
  friend auto operator<=>(const KHeight&, const KHeight&) = default;

 private:
  int k_ = 0;
  Values values_;
};

KHeight meet(const KHeight& x, const KHeight& y);
KHeight join(const KHeight& x, const KHeight& y);
// Pointwise order.
bool leq(const KHeight& x, const KHeight& y);
// L1 distance.
std::uint64_t delta(const KHeight& x, const KHeight& y);
std::uint64_t weight(const KHeight& x);

std::uint64_t delta(const Values& x, const Values& y);
std::uint64_t weight(const Values& x);
bool leq(const Values& x, const Values& y);

// Values on the sorted boundary of a block. Validity only concerns edges
// with both ends on the boundary.
struct BoundaryConstraint {
  int k = 0;
  std::vector<Vertex> vertices;
  Values values;

  bool valid_on(const Graph& graph) const;
  friend bool operator==(const BoundaryConstraint&,
                         const BoundaryConstraint&) = default;
};

// high equals low except high at `pivot` is one larger. For boundary
// constraints the pivot is a position in the boundary list.
template <class T>
struct CoverPair {
  T low;
  T high;
  std::size_t pivot = 0;
};

// Builds the cover pair raising `pivot`; throws InvalidInput if low is
// already at k there.
CoverPair<BoundaryConstraint> raise(const BoundaryConstraint& low,
                                    std::size_t pivot);

}  // namespace kheight
