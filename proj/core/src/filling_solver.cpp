#include "kheight/filling_solver.hpp"

#include "kheight/error.hpp"

#include <algorithm>

namespace kheight {

Rational FillingStats::expected_weight() const {
  if (count == 0) throw InvalidInput("no admissible filling");
  Rational r(total_weight, count);
  r.canonicalize();
  return r;
}

namespace {

template <class T>
T to_t(std::uint64_t x) {
  if constexpr (std::is_same_v<T, BigInt>)
    return BigInt(static_cast<unsigned long>(x));
  else
    return static_cast<T>(x);
}

void enumerate_rows(int k, std::size_t width, Values& cur,
                    std::vector<Values>& out) {
  if (cur.size() == width) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= k; ++x) {
    if (!cur.empty() && std::abs(int(cur.back()) - x) > 1) continue;
    cur.push_back(static_cast<Value>(x));
    enumerate_rows(k, width, cur, out);
    cur.pop_back();
  }
}

bool rows_compatible(const Values& a, const Values& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (std::abs(int(a[c]) - int(b[c])) > 1) return false;
  return true;
}

}  // namespace

FillingSolver::FillingSolver(const Graph& graph, const Block& block, int k,
                             std::uint64_t cap)
    : k_(k), block_(classify_block(graph, block)), cap_(cap) {
  if (k < 0 || k > 255) throw InvalidInput("k must be in 0..255");
  boundary_ = kheight::boundary(graph, block_);
  const std::size_t n = block_.size();
  pins_.resize(n);
  earlier_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = block_.vertices[i];
    for (std::size_t p = 0; p < boundary_.size(); ++p)
      if (graph.adjacent(v, boundary_[p])) pins_[i].push_back(p);
    for (std::size_t j = 0; j < i; ++j)
      if (graph.adjacent(v, block_.vertices[j])) earlier_[i].push_back(j);
  }
  BigInt bound = pow(BigInt(k + 1), n) * BigInt(static_cast<unsigned long>(k * n + 1));
  fits_u64_ = bound < pow(BigInt(2), 63);

  if (block_.shape == BlockShape::grid) {
    Values cur;
    enumerate_rows(k, block_.row_width, cur, rows_);
    for (const auto& r : rows_) row_weight_.push_back(static_cast<std::uint32_t>(weight(r)));
    row_compat_.resize(rows_.size());
    for (std::size_t a = 0; a < rows_.size(); ++a)
      for (std::size_t b = 0; b < rows_.size(); ++b)
        if (rows_compatible(rows_[a], rows_[b]))
          row_compat_[a].push_back(static_cast<std::uint32_t>(b));
  }
}

std::vector<Interval> FillingSolver::intervals(const Values& b) const {
  if (b.size() != boundary_.size())
    throw InvalidInput("expected " + std::to_string(boundary_.size()) +
                       " boundary values, got " + std::to_string(b.size()));
  std::vector<Interval> iv(block_.size(), Interval{0, k_});
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t p : pins_[i]) {
      if (b[p] > k_) throw InvalidInput("boundary value exceeds k");
      iv[i].lo = std::max(iv[i].lo, int(b[p]) - 1);
      iv[i].hi = std::min(iv[i].hi, int(b[p]) + 1);
    }
  return iv;
}

template <class T>
void FillingSolver::run(const std::vector<Interval>& iv, T& count,
                        T& weight) const {
  count = 0;
  weight = 0;
  for (const auto& i : iv)
    if (i.empty()) return;
  switch (block_.shape) {
    case BlockShape::path: run_path(iv, count, weight); break;
    case BlockShape::cycle: run_cycle(iv, count, weight); break;
    case BlockShape::grid: run_grid(iv, count, weight); break;
    case BlockShape::generic: run_generic(iv, count, weight); break;
  }
}

template <class T>
void FillingSolver::run_path(const std::vector<Interval>& iv, T& count,
                             T& weight) const {
  const std::size_t n = iv.size();
  if (n == 0) {
    count = 1;
    return;
  }
  std::vector<T> c(k_ + 1), w(k_ + 1), nc(k_ + 1), nw(k_ + 1);
  for (int x = iv[0].lo; x <= iv[0].hi; ++x) {
    c[x] = 1;
    w[x] = x;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (int y = 0; y <= k_; ++y) {
      nc[y] = 0;
      nw[y] = 0;
    }
    for (int y = iv[i].lo; y <= iv[i].hi; ++y) {
      for (int x = std::max(0, y - 1); x <= std::min(k_, y + 1); ++x) {
        nc[y] += c[x];
        nw[y] += w[x];
      }
      nw[y] += nc[y] * to_t<T>(y);
    }
    std::swap(c, nc);
    std::swap(w, nw);
  }
  for (int x = 0; x <= k_; ++x) {
    count += c[x];
    weight += w[x];
  }
}

template <class T>
void FillingSolver::run_cycle(const std::vector<Interval>& iv, T& count,
                              T& weight) const {
  const std::size_t n = iv.size();
  std::vector<T> c(k_ + 1), w(k_ + 1), nc(k_ + 1), nw(k_ + 1);
  for (int a = iv[0].lo; a <= iv[0].hi; ++a) {
    for (int x = 0; x <= k_; ++x) {
      c[x] = 0;
      w[x] = 0;
    }
    c[a] = 1;
    w[a] = a;
    for (std::size_t i = 1; i < n; ++i) {
      for (int y = 0; y <= k_; ++y) {
        nc[y] = 0;
        nw[y] = 0;
      }
      for (int y = iv[i].lo; y <= iv[i].hi; ++y) {
        for (int x = std::max(0, y - 1); x <= std::min(k_, y + 1); ++x) {
          nc[y] += c[x];
          nw[y] += w[x];
        }
        nw[y] += nc[y] * to_t<T>(y);
      }
      std::swap(c, nc);
      std::swap(w, nw);
    }
    for (int x = std::max(0, a - 1); x <= std::min(k_, a + 1); ++x) {
      count += c[x];
      weight += w[x];
    }
  }
}

template <class T>
void FillingSolver::run_grid(const std::vector<Interval>& iv, T& count,
                             T& weight) const {
  const std::size_t width = block_.row_width;
  const std::size_t height = block_.size() / width;
  const std::size_t R = rows_.size();
  auto allowed = [&](std::size_t row, std::size_t r) {
    for (std::size_t c = 0; c < width; ++c) {
      const auto& i = iv[row * width + c];
      if (rows_[r][c] < i.lo || rows_[r][c] > i.hi) return false;
    }
    return true;
  };
  std::vector<T> c(R), w(R), nc(R), nw(R);
  for (std::size_t r = 0; r < R; ++r)
    if (allowed(0, r)) {
      c[r] = 1;
      w[r] = row_weight_[r];
    }
  for (std::size_t row = 1; row < height; ++row) {
    for (std::size_t r = 0; r < R; ++r) {
      nc[r] = 0;
      nw[r] = 0;
      if (!allowed(row, r)) continue;
      for (std::uint32_t q : row_compat_[r]) {
        nc[r] += c[q];
        nw[r] += w[q];
      }
      nw[r] += nc[r] * to_t<T>(row_weight_[r]);
    }
    std::swap(c, nc);
    std::swap(w, nw);
  }
  for (std::size_t r = 0; r < R; ++r) {
    count += c[r];
    weight += w[r];
  }
}

template <class T>
void FillingSolver::run_generic(const std::vector<Interval>& iv, T& count,
                                T& weight) const {
  BigInt raw = pow(BigInt(k_ + 1), block_.size());
  if (raw > BigInt(static_cast<unsigned long>(cap_)))
    throw CapExceeded("generic block of " + std::to_string(block_.size()) +
                      " vertices exceeds the enumeration cap");
  backtrack(iv, [&](const Values& f) {
    count += 1;
    weight += to_t<T>(kheight::weight(f));
  });
}

void FillingSolver::backtrack(const std::vector<Interval>& iv,
                              const std::function<void(const Values&)>& fn) const {
  const std::size_t n = block_.size();
  for (const auto& i : iv)
    if (i.empty()) return;
  Values f(n, 0);
  std::vector<int> next(n + 1, 0);
  // iterative depth-first search in lexicographic order
  std::size_t pos = 0;
  if (n == 0) {
    fn(f);
    return;
  }
  next[0] = iv[0].lo;
  while (true) {
    if (next[pos] > iv[pos].hi) {
      if (pos == 0) return;
      --pos;
      continue;
    }
    int x = next[pos]++;
    bool ok = true;
    for (std::size_t j : earlier_[pos])
      if (std::abs(int(f[j]) - x) > 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    f[pos] = static_cast<Value>(x);
    if (pos + 1 == n) {
      fn(f);
    } else {
      ++pos;
      next[pos] = iv[pos].lo;
    }
  }
}

FillingStats FillingSolver::stats(const std::vector<Interval>& iv) const {
  FillingStats s;
  if (fits_u64_) {
    std::uint64_t c = 0, w = 0;
    run(iv, c, w);
    s.count = BigInt(static_cast<unsigned long>(c));
    s.total_weight = BigInt(static_cast<unsigned long>(w));
  } else {
    run(iv, s.count, s.total_weight);
  }
  return s;
}

FillingStats FillingSolver::stats(const Values& b) const {
  return stats(intervals(b));
}

FillingStats64 FillingSolver::stats64(const std::vector<Interval>& iv) const {
  if (!fits_u64_) throw CapExceeded("filling counts exceed 64 bits");
  FillingStats64 s;
  run(iv, s.count, s.total_weight);
  return s;
}

FillingStats64 FillingSolver::stats64(const Values& b) const {
  return stats64(intervals(b));
}

bool FillingSolver::extensible(const Values& b) const {
  auto iv = intervals(b);
  for (const auto& i : iv)
    if (i.empty()) return false;
  if (block_.shape == BlockShape::generic) {
    // stop at the first filling
    struct Found {};
    try {
      backtrack(iv, [](const Values&) { throw Found{}; });
    } catch (const Found&) {
      return true;
    }
    return false;
  }
  return stats(iv).count != 0;
}

BigInt FillingSolver::unconstrained_count() const {
  std::vector<Interval> iv(block_.size(), Interval{0, k_});
  return stats(iv).count;
}

void FillingSolver::for_each_filling(
    const Values& b, const std::function<void(const Values&)>& fn) const {
  auto iv = intervals(b);
  if (stats(iv).count > BigInt(static_cast<unsigned long>(cap_)))
    throw CapExceeded("more admissible fillings than the enumeration cap");
  backtrack(iv, fn);
}

std::vector<Values> FillingSolver::fillings(const Values& b) const {
  std::vector<Values> out;
  for_each_filling(b, [&](const Values& f) { out.push_back(f); });
  return out;
}

Values FillingSolver::unrank(const Values& b, std::uint64_t index) const {
  auto iv = intervals(b);
  Values f(block_.size());
  for (std::size_t pos = 0; pos < f.size(); ++pos) {
    const Interval full = iv[pos];
    bool placed = false;
    for (int x = full.lo; x <= full.hi; ++x) {
      iv[pos] = Interval{x, x};
      std::uint64_t c = stats64(iv).count;
      if (index < c) {
        f[pos] = static_cast<Value>(x);
        placed = true;
        break;
      }
      index -= c;
    }
    if (!placed) throw InvalidInput("filling rank out of range");
  }
  return f;
}

Values FillingSolver::quantile_filling(const Values& b,
                                      const std::vector<std::uint64_t>& u) const {
  if (u.size() != block_.size()) throw InvalidInput("one uniform per block vertex");
  auto iv = intervals(b);
  Values f(block_.size());
  std::vector<std::uint64_t> counts;
  for (std::size_t pos = 0; pos < f.size(); ++pos) {
    const Interval full = iv[pos];
    counts.clear();
    unsigned __int128 total = 0;
    for (int x = full.lo; x <= full.hi; ++x) {
      iv[pos] = Interval{x, x};
      counts.push_back(stats64(iv).count);
      total += counts.back();
    }
    if (total == 0) throw InvalidInput("boundary is not extensible");
    // smallest x with cum(x) * 2^64 > u * total
    const unsigned __int128 target = static_cast<unsigned __int128>(u[pos]) * total;
    unsigned __int128 cum = 0;
    int chosen = full.hi;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      cum += counts[i];
      if ((cum << 64) > target) {
        chosen = full.lo + static_cast<int>(i);
        break;
      }
    }
    f[pos] = static_cast<Value>(chosen);
    iv[pos] = Interval{chosen, chosen};
  }
  return f;
}

}  // namespace kheight
