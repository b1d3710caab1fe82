#include "kheight/divergence.hpp"

#include "kheight/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>

namespace kheight {

Graph rect_reference_graph() { return make_toroidal_rect(8, 8); }

Block rect_reference_block(const Graph& graph) { return rect_block(graph, 2, 2); }

std::vector<int> rect_symmetry_distinct_pivots() { return {0, 1}; }

namespace {

using Row = std::array<Value, 4>;

struct Layout {
  // positions of each side's vertices in the sorted boundary
  std::array<std::size_t, 4> top, left, right, bottom;
};

Layout reference_layout(const std::vector<Vertex>& boundary) {
  auto pos = [&](std::size_t x, std::size_t y) {
    Vertex v = static_cast<Vertex>(y * 8 + x);
    auto it = std::find(boundary.begin(), boundary.end(), v);
    if (it == boundary.end()) throw std::logic_error("rect layout mismatch");
    return std::size_t(it - boundary.begin());
  };
  Layout l;
  for (std::size_t i = 0; i < 4; ++i) {
    l.top[i] = pos(2 + i, 1);
    l.bottom[i] = pos(2 + i, 6);
    l.left[i] = pos(1, 2 + i);
    l.right[i] = pos(6, 2 + i);
  }
  return l;
}

struct Candidate {
  bool found = false;
  double approx = -std::numeric_limits<double>::infinity();
  Rational gap;
  Values witness;

  bool offer(double a, const std::function<Rational()>& exact,
             const std::function<Values()>& witness_fn) {
    if (found && a < approx - 1e-9) return false;
    Rational g = exact();
    Values w;
    if (found) {
      int c = cmp(g, gap);
      if (c < 0) return false;
      if (c == 0) {
        w = witness_fn();
        if (!(w < witness)) return false;
      }
    }
    if (w.empty()) w = witness_fn();
    found = true;
    approx = to_double(g);
    gap = g;
    witness = std::move(w);
    return true;
  }
};

}  // namespace

RectDivergenceResult rect_divergence(int k, const RectDivergenceOptions& options) {
  if (k < 0 || k > 15) throw InvalidInput("rect divergence supports k in 0..15");
  for (int c : options.pivot_offsets)
    if (c < 0 || c > 3) throw InvalidInput("pivot offset must be in 0..3");
  if (options.pivot_offsets.empty()) throw InvalidInput("no pivot offsets given");

  Graph graph = rect_reference_graph();
  Block block = rect_reference_block(graph);
  FillingSolver solver(graph, block, k);
  const Layout layout = reference_layout(solver.boundary());

  std::vector<Row> rows;
  for (int a = 0; a <= k; ++a)
    for (int b = std::max(0, a - 1); b <= std::min(k, a + 1); ++b)
      for (int c = std::max(0, b - 1); c <= std::min(k, b + 1); ++c)
        for (int d = std::max(0, c - 1); d <= std::min(k, c + 1); ++d)
          rows.push_back({Value(a), Value(b), Value(c), Value(d)});
  const std::size_t R = rows.size();
  std::vector<std::uint64_t> row_w(R);
  for (std::size_t i = 0; i < R; ++i)
    row_w[i] = rows[i][0] + rows[i][1] + rows[i][2] + rows[i][3];
  auto close = [](int x, int y) { return x - y <= 1 && y - x <= 1; };
  std::vector<std::vector<std::uint32_t>> compat(R);
  for (std::size_t a = 0; a < R; ++a)
    for (std::size_t b = 0; b < R; ++b)
      if (close(rows[a][0], rows[b][0]) && close(rows[a][1], rows[b][1]) &&
          close(rows[a][2], rows[b][2]) && close(rows[a][3], rows[b][3]))
        compat[a].push_back(static_cast<std::uint32_t>(b));
  // raised[t][c]: t with entry c increased by one, if still a valid row
  std::vector<std::array<int, 4>> raised(R);
  for (std::size_t t = 0; t < R; ++t)
    for (int c = 0; c < 4; ++c) {
      raised[t][c] = -1;
      Row up = rows[t];
      if (up[c] == k) continue;
      ++up[c];
      auto it = std::find(rows.begin(), rows.end(), up);
      if (it != rows.end()) raised[t][c] = int(it - rows.begin());
    }
  // side_ok[l][r][a]: row a next to left value l and right value r
  const int V = k + 1;
  std::vector<char> side_ok(std::size_t(V) * V * R);
  for (int l = 0; l < V; ++l)
    for (int r = 0; r < V; ++r)
      for (std::size_t a = 0; a < R; ++a)
        side_ok[(std::size_t(l) * V + r) * R + a] =
            close(rows[a][0], l) && close(rows[a][3], r);

  const std::size_t P = options.pivot_offsets.size();
  unsigned threads = options.threads ? options.threads : default_threads();
  std::vector<std::vector<Candidate>> partial(threads, std::vector<Candidate>(P));
  std::atomic<bool> stop{false};
  const bool stopping = options.stop_above.has_value();
  const double stop_approx = stopping ? to_double(*options.stop_above) : 0.0;

  auto witness_of = [&](std::size_t t, std::size_t il, std::size_t ir,
                        std::size_t ib) {
    Values w(16);
    for (std::size_t i = 0; i < 4; ++i) {
      w[layout.top[i]] = rows[t][i];
      w[layout.left[i]] = rows[il][i];
      w[layout.right[i]] = rows[ir][i];
      w[layout.bottom[i]] = rows[ib][i];
    }
    return w;
  };

  detail::parallel_slices(threads, R, [&](unsigned th, std::uint64_t b, std::uint64_t e) {
    auto& best = partial[th];
    std::vector<std::uint64_t> gc(R), gw(R), nc(R), nw(R), sc(R), sw(R);
    for (std::size_t il = b; il < e && !stop; ++il)
      for (std::size_t ir = 0; ir < R && !stop; ++ir)
        for (std::size_t ib = 0; ib < R && !stop; ++ib) {
          const Row& L = rows[il];
          const Row& Rt = rows[ir];
          // row 3 touches the bottom side
          std::fill(gc.begin(), gc.end(), 0);
          std::fill(gw.begin(), gw.end(), 0);
          const char* ok3 = &side_ok[(std::size_t(L[3]) * V + Rt[3]) * R];
          for (std::uint32_t a : compat[ib])
            if (ok3[a]) {
              gc[a] = 1;
              gw[a] = row_w[a];
            }
          // rows 2, 1, 0
          for (int row = 2; row >= 0; --row) {
            const char* ok = &side_ok[(std::size_t(L[row]) * V + Rt[row]) * R];
            for (std::size_t a = 0; a < R; ++a) {
              std::uint64_t c = 0, w = 0;
              if (ok[a])
                for (std::uint32_t q : compat[a]) {
                  c += gc[q];
                  w += gw[q];
                }
              nc[a] = c;
              nw[a] = w + c * row_w[a];
            }
            std::swap(gc, nc);
            std::swap(gw, nw);
          }
          // fold in the top side
          for (std::size_t t = 0; t < R; ++t) {
            std::uint64_t c = 0, w = 0;
            for (std::uint32_t a : compat[t]) {
              c += gc[a];
              w += gw[a];
            }
            sc[t] = c;
            sw[t] = w;
          }
          for (std::size_t pi = 0; pi < P; ++pi) {
            const int off = options.pivot_offsets[pi];
            for (std::size_t t = 0; t < R; ++t) {
              const int h = raised[t][off];
              if (h < 0 || sc[t] == 0 || sc[h] == 0) continue;
              const double approx =
                  double(sw[h]) / double(sc[h]) - double(sw[t]) / double(sc[t]);
              if (best[pi].found && approx < best[pi].approx - 1e-9) continue;
              bool improved = best[pi].offer(
                  approx,
                  [&] {
                    Rational hi(BigInt(static_cast<unsigned long>(sw[h])),
                                BigInt(static_cast<unsigned long>(sc[h])));
                    Rational lo(BigInt(static_cast<unsigned long>(sw[t])),
                                BigInt(static_cast<unsigned long>(sc[t])));
                    hi.canonicalize();
                    lo.canonicalize();
                    return Rational(hi - lo);
                  },
                  [&] { return witness_of(t, il, ir, ib); });
              if (improved && stopping && approx > stop_approx &&
                  best[pi].gap > *options.stop_above)
                stop = true;
            }
          }
        }
  });

  RectDivergenceResult result;
  const BigInt omega_B = solver.unconstrained_count();
  const BigInt omega_boundary = pow(BigInt(static_cast<unsigned long>(R)), 4);
  for (std::size_t pi = 0; pi < P; ++pi) {
    Candidate merged;
    for (const auto& part : partial) {
      const auto& c = part[pi];
      if (c.found)
        merged.offer(c.approx, [&] { return c.gap; }, [&] { return c.witness; });
    }
    if (!merged.found && k != 0) throw InvalidInput("no extensible cover pair");
    DivergenceReport r;
    r.k = k;
    r.case_id = "rect";
    r.omega_B = omega_B;
    r.omega_boundary = omega_boundary;
    r.e_max = merged.found ? merged.gap : Rational(0);
    r.boundary = solver.boundary();
    r.witness_low = merged.witness;
    r.pivot_position = layout.top[options.pivot_offsets[pi]];
    r.complete = !stop;
    result.per_pivot.push_back(std::move(r));
  }
  result.best = result.per_pivot.front();
  for (const auto& r : result.per_pivot)
    if (r.e_max > result.best.e_max) result.best = r;
  return result;
}

}  // namespace kheight
