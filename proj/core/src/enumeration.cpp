#include "kheight/enumeration.hpp"

#include "kheight/error.hpp"

#include <algorithm>

namespace kheight {

TransferMatrices::TransferMatrices(int k_) : k(k_) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  const std::size_t d = k + 1;
  P.assign(d, std::vector<BigInt>(d, 0));
  Q.assign(d, std::vector<BigInt>(d, 0));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      if (std::abs(i - j) <= 1) P[i][j] = 1;
      if (std::abs(i - j) <= 2) Q[i][j] = 1;
    }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Matrix power(const Matrix& a, unsigned exponent) {
  Matrix result(a.size(), std::vector<BigInt>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) result[i][i] = 1;
  Matrix base = a;
  while (exponent) {
    if (exponent & 1) result = multiply(result, base);
    base = multiply(base, base);
    exponent >>= 1;
  }
  return result;
}

BigInt trace(const Matrix& a) {
  BigInt t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

BigInt count_rect_extensible(const TransferMatrices& m) {
  return trace(power(multiply(m.Q, power(m.P, 3)), 4));
}

BigInt count_rect_extensible(int k) {
  return count_rect_extensible(TransferMatrices(k));
}

BigInt count_cycle_heights(int k, unsigned length) {
  if (length < 3) throw InvalidInput("cycle length must be >= 3");
  return trace(power(TransferMatrices(k).P, length));
}

void for_each_height(const Graph& graph, int k,
                     const std::function<void(const Values&)>& fn,
                     std::uint64_t cap) {
  if (k < 0 || k > 255) throw InvalidInput("k must be in 0..255");
  const std::size_t n = graph.size();
  if (pow(BigInt(k + 1), n) > BigInt(static_cast<unsigned long>(cap)))
    throw CapExceeded("(k+1)^n = " + std::to_string(k + 1) + "^" +
                      std::to_string(n) +
                      " exceeds the enumeration cap; use the counting operations");
  if (n == 0) {
    fn(Values{});
    return;
  }
  std::vector<std::vector<Vertex>> earlier(n);
  for (auto [u, v] : graph.edges()) earlier[std::max(u, v)].push_back(std::min(u, v));
  Values f(n, 0);
  std::vector<int> next(n, 0);
  std::size_t pos = 0;
  while (true) {
    if (next[pos] > k) {
      if (pos == 0) return;
      --pos;
      continue;
    }
    int x = next[pos]++;
    bool ok = true;
    for (Vertex j : earlier[pos])
      if (std::abs(int(f[j]) - x) > 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    f[pos] = static_cast<Value>(x);
    if (pos + 1 == n) {
      fn(f);
    } else {
      next[++pos] = 0;
    }
  }
}

std::vector<KHeight> enumerate_heights(const Graph& graph, int k,
                                       std::uint64_t cap) {
  std::vector<KHeight> out;
  for_each_height(graph, k,
                  [&](const Values& f) { out.push_back(KHeight::unchecked(k, f)); },
                  cap);
  return out;
}

namespace {

FillingSolver solver_for(const Graph& graph, const Block& block,
                         const BoundaryConstraint& c) {
  FillingSolver solver(graph, block, c.k);
  if (c.vertices != solver.boundary())
    throw InvalidInput("constraint is not given on the block boundary");
  return solver;
}

}  // namespace

std::vector<Values> enumerate_fillings(const Graph& graph, const Block& block,
                                       const BoundaryConstraint& constraint) {
  return solver_for(graph, block, constraint).fillings(constraint.values);
}

bool is_extensible(const Graph& graph, const Block& block,
                   const BoundaryConstraint& constraint) {
  return solver_for(graph, block, constraint).extensible(constraint.values);
}

FillingStats filling_stats(const Graph& graph, const Block& block,
                           const BoundaryConstraint& constraint) {
  return solver_for(graph, block, constraint).stats(constraint.values);
}

BoundaryConstraints::BoundaryConstraints(const Graph& graph, const Block& block,
                                         int k)
    : k_(k), vertices_(boundary(graph, block)) {
  if (k < 0 || k > 255) throw InvalidInput("k must be in 0..255");
  edges_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (graph.adjacent(vertices_[i], vertices_[j])) edges_[i].push_back(j);
}

BigInt BoundaryConstraints::raw_count() const {
  return pow(BigInt(k_ + 1), vertices_.size());
}

BigInt BoundaryConstraints::count() const {
  bool independent = std::all_of(edges_.begin(), edges_.end(),
                                 [](const auto& e) { return e.empty(); });
  if (independent) return raw_count();
  BigInt total = 0;
  for_each([&](const Values&) {
    ++total;
    return true;
  });
  return total;
}

std::uint64_t BoundaryConstraints::rank(const Values& values) const {
  std::uint64_t r = 0;
  for (Value x : values) r = r * (k_ + 1) + x;
  return r;
}

Values BoundaryConstraints::unrank(std::uint64_t r) const {
  Values v(vertices_.size());
  for (std::size_t i = v.size(); i-- > 0;) {
    v[i] = static_cast<Value>(r % (k_ + 1));
    r /= (k_ + 1);
  }
  return v;
}

void BoundaryConstraints::for_each(const std::function<bool(const Values&)>& fn,
                                   unsigned shard, unsigned shards) const {
  if (shards == 0 || shard >= shards) throw InvalidInput("bad shard index");
  const std::size_t n = vertices_.size();
  Values v(n, 0);
  std::uint64_t r = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j : edges_[i])
        if (std::abs(int(v[i]) - int(v[j])) > 1) {
          ok = false;
          break;
        }
    if (ok && r % shards == shard && !fn(v)) return;
    // odometer, last position fastest
    std::size_t i = n;
    while (i > 0 && v[i - 1] == k_) v[--i] = 0;
    if (i == 0) return;
    ++v[i - 1];
    ++r;
  }
}

}  // namespace kheight
