#include "kheight/divergence.hpp"

#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

namespace kheight {

unsigned default_threads() {
  if (const char* env = std::getenv("KHEIGHT_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return static_cast<unsigned>(t);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::optional<Rational> expected_gap(const FillingSolver& solver,
                                     const CoverPair<BoundaryConstraint>& pair) {
  if (pair.low.vertices != solver.boundary() ||
      pair.high.vertices != solver.boundary())
    throw InvalidInput("cover pair is not given on the block boundary");
  auto lo = solver.stats(pair.low.values);
  auto hi = solver.stats(pair.high.values);
  if (lo.count == 0 || hi.count == 0) return std::nullopt;
  return Rational(hi.expected_weight() - lo.expected_weight());
}

std::optional<Rational> expected_gap(const Graph& graph, const Block& block,
                                     const CoverPair<BoundaryConstraint>& pair) {
  return expected_gap(FillingSolver(graph, block, pair.low.k), pair);
}

namespace {

struct Best {
  bool found = false;
  double approx = -std::numeric_limits<double>::infinity();
  Rational gap;
  std::size_t pivot_index = 0;  // index into the requested pivot list
  std::uint64_t rank = 0;
  Values low;

  // Candidate order: larger gap, then smaller pivot index, then smaller rank.
  bool offer(double approx_gap, const std::function<Rational()>& exact,
             std::size_t pivot, std::uint64_t r,
             const std::function<Values()>& values) {
    if (found && approx_gap < approx - 1e-9) return false;
    Rational g = exact();
    if (found) {
      int c = cmp(g, gap);
      if (c < 0) return false;
      if (c == 0 && std::make_pair(pivot, r) >= std::make_pair(pivot_index, rank))
        return false;
    }
    found = true;
    approx = to_double(g);
    gap = g;
    pivot_index = pivot;
    rank = r;
    low = values();
    return true;
  }

  void merge(const Best& other) {
    if (!other.found) return;
    offer(other.approx, [&] { return other.gap; }, other.pivot_index, other.rank,
          [&] { return other.low; });
  }
};

Rational gap_of(std::uint64_t cl, std::uint64_t wl, std::uint64_t ch,
                std::uint64_t wh) {
  Rational hi(BigInt(static_cast<unsigned long>(wh)),
              BigInt(static_cast<unsigned long>(ch)));
  Rational lo(BigInt(static_cast<unsigned long>(wl)),
              BigInt(static_cast<unsigned long>(cl)));
  hi.canonicalize();
  lo.canonicalize();
  return hi - lo;
}

bool valid_on_boundary(const std::vector<std::vector<std::size_t>>& edges,
                       const Values& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j : edges[i])
      if (std::abs(int(v[i]) - int(v[j])) > 1) return false;
  return true;
}

// Maximizes over all pivots in `pivots` (boundary positions).
Best maximize(const Graph& graph, const FillingSolver& solver,
              const std::vector<std::size_t>& pivots,
              const DivergenceOptions& options) {
  const int k = solver.k();
  const auto& bnd = solver.boundary();
  const std::size_t n = bnd.size();
  std::vector<std::vector<std::size_t>> edges(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (graph.adjacent(bnd[i], bnd[j])) edges[i].push_back(j);
  unsigned threads = options.threads ? options.threads : default_threads();

  BigInt raw = pow(BigInt(k + 1), n);
  const bool table = solver.fits_u64() &&
                     raw <= BigInt(static_cast<unsigned long>(options.table_limit));
  BoundaryConstraints constraints(graph, solver.block(), k);

  std::vector<Best> partial(std::max(threads, 1u));
  if (table) {
    const std::uint64_t N = raw.get_ui();
    std::vector<std::uint64_t> cnt(N), wt(N);
    detail::parallel_slices(threads, N, [&](unsigned, std::uint64_t b, std::uint64_t e) {
      Values v = constraints.unrank(b);
      for (std::uint64_t r = b; r < e; ++r) {
        if (valid_on_boundary(edges, v)) {
          auto s = solver.stats64(v);
          cnt[r] = s.count;
          wt[r] = s.total_weight;
        }
        for (std::size_t i = n; i-- > 0;) {
          if (v[i] < k) {
            ++v[i];
            break;
          }
          v[i] = 0;
        }
      }
    });
    std::vector<std::uint64_t> stride(n, 1);
    for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * (k + 1);
    detail::parallel_slices(threads, N, [&](unsigned t, std::uint64_t b, std::uint64_t e) {
      Best& best = partial[t];
      for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        const std::uint64_t s = stride[pivots[pi]];
        for (std::uint64_t r = b; r < e; ++r) {
          if ((r / s) % (k + 1) == std::uint64_t(k)) continue;
          const std::uint64_t h = r + s;
          if (cnt[r] == 0 || cnt[h] == 0) continue;
          double approx = double(wt[h]) / double(cnt[h]) - double(wt[r]) / double(cnt[r]);
          best.offer(approx, [&] { return gap_of(cnt[r], wt[r], cnt[h], wt[h]); }, pi, r,
                     [&] { return constraints.unrank(r); });
        }
      }
    });
  } else {
    // on the fly; sharded by rank
    detail::parallel_slices(threads, threads, [&](unsigned, std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t t = b; t < e; ++t) {
        Best& best = partial[t];
        constraints.for_each(
            [&](const Values& low) {
              auto ls = solver.stats(low);
              if (ls.count == 0) return true;
              Rational el = ls.expected_weight();
              for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
                std::size_t p = pivots[pi];
                if (low[p] == k) continue;
                Values high = low;
                ++high[p];
                if (!valid_on_boundary(edges, high)) continue;
                auto hs = solver.stats(high);
                if (hs.count == 0) continue;
                Rational g = hs.expected_weight() - el;
                best.offer(to_double(g), [&] { return g; }, pi, constraints.rank(low),
                           [&] { return low; });
              }
              return true;
            },
            static_cast<unsigned>(t), threads);
      }
    });
  }
  Best best;
  for (const auto& b : partial) best.merge(b);
  return best;
}

DivergenceReport report_from(const Graph& graph, const FillingSolver& solver,
                             const std::vector<std::size_t>& pivots,
                             const DivergenceOptions& options, std::string id) {
  DivergenceReport r;
  r.k = solver.k();
  r.case_id = std::move(id);
  r.omega_B = solver.unconstrained_count();
  r.omega_boundary = BoundaryConstraints(graph, solver.block(), solver.k()).count();
  r.boundary = solver.boundary();
  Best best = maximize(graph, solver, pivots, options);
  if (!best.found) {
    // with k = 0 there is nothing to raise
    if (solver.k() == 0) {
      r.e_max = 0;
      r.pivot_position = pivots.front();
      return r;
    }
    throw InvalidInput("no extensible cover pair at the requested pivot");
  }
  r.e_max = best.gap;
  r.witness_low = best.low;
  r.pivot_position = pivots[best.pivot_index];
  return r;
}

}  // namespace

DivergenceReport block_divergence(const Graph& graph, const Block& block,
                                  Vertex v, int k,
                                  const DivergenceOptions& options) {
  FillingSolver solver(graph, block, k);
  const auto& bnd = solver.boundary();
  auto it = std::find(bnd.begin(), bnd.end(), v);
  if (it == bnd.end())
    throw InvalidInput("vertex " + std::to_string(v) + " is not on the block boundary");
  return report_from(graph, solver, {std::size_t(it - bnd.begin())}, options,
                     "block");
}

DivergenceReport max_block_divergence(const Graph& graph, const Block& block,
                                      int k, const DivergenceOptions& options) {
  FillingSolver solver(graph, block, k);
  std::vector<std::size_t> pivots(solver.boundary().size());
  for (std::size_t i = 0; i < pivots.size(); ++i) pivots[i] = i;
  if (pivots.empty()) throw InvalidInput("block has an empty boundary");
  return report_from(graph, solver, pivots, options, "block");
}

DivergenceReport case_divergence(const CaseTag& tag, int k,
                                 const DivergenceOptions& options) {
  auto cg = make_case_graph(tag);
  FillingSolver solver(cg.graph, cg.block, k);
  const auto& bnd = solver.boundary();
  std::size_t p = std::find(bnd.begin(), bnd.end(), cg.external) - bnd.begin();
  return report_from(cg.graph, solver, {p}, options, tag.name());
}

DivergenceReport hex_divergence(int k, const DivergenceOptions& options) {
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver solver(g, b, k);
  std::vector<std::size_t> pivots(solver.boundary().size());
  for (std::size_t i = 0; i < pivots.size(); ++i) pivots[i] = i;
  return report_from(g, solver, pivots, options, "hex");
}

}  // namespace kheight
