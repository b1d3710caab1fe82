#include "kheight/heights.hpp"

#include "kheight/error.hpp"

#include <algorithm>

namespace kheight {

namespace {

void require_compatible(const KHeight& x, const KHeight& y) {
  if (x.k() != y.k() || x.size() != y.size())
    throw InvalidInput("heights belong to different graphs or k");
}

}  // namespace

bool is_valid(const Graph& graph, int k, const Values& values) {
  if (k < 0 || k > 255) throw InvalidInput("k must be in 0..255");
  if (values.size() != graph.size())
    throw InvalidInput("height has " + std::to_string(values.size()) +
                       " values for " + std::to_string(graph.size()) +
                       " vertices");
  for (Value x : values)
    if (x > k)
      throw InvalidInput("value " + std::to_string(x) + " exceeds k=" +
                         std::to_string(k));
  for (auto [u, v] : graph.edges()) {
    int d = int(values[u]) - int(values[v]);
    if (d > 1 || d < -1) return false;
  }
  return true;
}

KHeight::KHeight(const Graph& graph, int k, Values values)
    : k_(k), values_(std::move(values)) {
  if (!is_valid(graph, k, values_))
    throw InvalidInput("values violate the edge constraint");
}

KHeight KHeight::bottom(const Graph& graph, int k) {
  return KHeight(graph, k, Values(graph.size(), 0));
}

KHeight KHeight::top(const Graph& graph, int k) {
  return KHeight(graph, k, Values(graph.size(), static_cast<Value>(k)));
}

KHeight KHeight::unchecked(int k, Values values) {
  KHeight h;
  h.k_ = k;
  h.values_ = std::move(values);
  return h;
}

KHeight meet(const KHeight& x, const KHeight& y) {
  require_compatible(x, y);
  Values out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(x[i], y[i]);
  return KHeight::unchecked(x.k(), std::move(out));
}

KHeight join(const KHeight& x, const KHeight& y) {
  require_compatible(x, y);
  Values out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(x[i], y[i]);
  return KHeight::unchecked(x.k(), std::move(out));
}

bool leq(const Values& x, const Values& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::uint64_t delta(const Values& x, const Values& y) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    d += x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
  return d;
}

std::uint64_t weight(const Values& x) {
  std::uint64_t w = 0;
  for (Value v : x) w += v;
  return w;
}

bool leq(const KHeight& x, const KHeight& y) {
  require_compatible(x, y);
  return leq(x.values(), y.values());
}

std::uint64_t delta(const KHeight& x, const KHeight& y) {
  require_compatible(x, y);
  return delta(x.values(), y.values());
}

std::uint64_t weight(const KHeight& x) { return weight(x.values()); }

bool BoundaryConstraint::valid_on(const Graph& graph) const {
  if (values.size() != vertices.size())
    throw InvalidInput("boundary constraint has mismatched lengths");
  for (Value x : values)
    if (x > k) throw InvalidInput("boundary value exceeds k");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (graph.adjacent(vertices[i], vertices[j])) {
        int d = int(values[i]) - int(values[j]);
        if (d > 1 || d < -1) return false;
      }
  return true;
}

CoverPair<BoundaryConstraint> raise(const BoundaryConstraint& low,
                                    std::size_t pivot) {
  if (pivot >= low.values.size()) throw InvalidInput("pivot out of range");
  if (low.values[pivot] >= low.k)
    throw InvalidInput("pivot value already at k");
  CoverPair<BoundaryConstraint> pair{low, low, pivot};
  ++pair.high.values[pivot];
  return pair;
}

}  // namespace kheight
