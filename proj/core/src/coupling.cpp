#include "kheight/coupling.hpp"

#include "kheight/error.hpp"
#include "kheight/max_flow.hpp"

#include <algorithm>
#include <numeric>

namespace kheight {

Rational JointCoupling::probability(const Entry& e) const {
  Rational r(static_cast<unsigned long>(e.mass), static_cast<unsigned long>(denominator()));
  r.canonicalize();
  return r;
}

Rational JointCoupling::expected_distance() const {
  BigInt total = 0;
  for (const auto& e : support)
    total += BigInt(static_cast<unsigned long>(e.mass)) *
             BigInt(static_cast<unsigned long>(delta(low_set[e.low], high_set[e.high])));
  Rational r(total, BigInt(static_cast<unsigned long>(denominator())));
  r.canonicalize();
  return r;
}

void JointCoupling::index() {
  rows.assign(low_set.size(), {});
  cols.assign(high_set.size(), {});
  for (std::size_t i = 0; i < support.size(); ++i) {
    rows[support[i].low].push_back(i);
    cols[support[i].high].push_back(i);
  }
}

std::size_t JointCoupling::sample_high_given_low(std::size_t i, Rng& rng) const {
  // each row carries |high| units
  std::uint64_t r = rng.below(high_set.size());
  for (std::size_t id : rows.at(i)) {
    if (r < support[id].mass) return support[id].high;
    r -= support[id].mass;
  }
  throw std::logic_error("coupling row mass mismatch");
}

std::size_t JointCoupling::sample_low_given_high(std::size_t j, Rng& rng) const {
  std::uint64_t r = rng.below(low_set.size());
  for (std::size_t id : cols.at(j)) {
    if (r < support[id].mass) return support[id].low;
    r -= support[id].mass;
  }
  throw std::logic_error("coupling column mass mismatch");
}

JointCoupling strassen_joint(std::vector<Values> low_set, std::vector<Values> high_set) {
  if (low_set.empty() || high_set.empty()) throw InvalidInput("empty filling set");
  JointCoupling c;
  c.low_set = std::move(low_set);
  c.high_set = std::move(high_set);
  const std::size_t L = c.low_set.size(), H = c.high_set.size();
  if (L == 1 || H == 1) {
    // the only coupling is the product
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < H; ++j) {
        if (!leq(c.low_set[i], c.high_set[j]))
          throw DominanceViolation("singleton coupling has an incomparable pair");
        c.support.push_back({i, j, 1});
      }
    c.index();
    return c;
  }
  const std::size_t s = 0, t = L + H + 1;
  MaxFlow flow(L + H + 2);
  const auto cap = static_cast<std::int64_t>(L * H);
  for (std::size_t i = 0; i < L; ++i) flow.add_arc(s, 1 + i, static_cast<std::int64_t>(H));
  for (std::size_t j = 0; j < H; ++j) flow.add_arc(1 + L + j, t, static_cast<std::int64_t>(L));
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> arcs;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < H; ++j)
      if (leq(c.low_set[i], c.high_set[j]))
        arcs.push_back({flow.add_arc(1 + i, 1 + L + j, cap), {i, j}});
  std::int64_t value = flow.run(s, t);
  if (value != cap)
    throw DominanceViolation("max flow carries " + std::to_string(value) + " of " +
                             std::to_string(cap) + " units");
  for (const auto& [id, ij] : arcs)
    if (std::int64_t f = flow.flow(id); f > 0)
      c.support.push_back({ij.first, ij.second, static_cast<std::uint64_t>(f)});
  c.index();
  return c;
}

std::vector<KHeight> lattice_path(const Graph& graph, const KHeight& x, const KHeight& y) {
  if (x.k() != y.k() || x.size() != y.size() || x.size() != graph.size())
    throw InvalidInput("heights belong to different graphs or k");
  const KHeight m = meet(x, y);
  std::vector<KHeight> path{x};
  KHeight cur = x;
  while (true) {
    // lower a vertex of largest value above the meet
    std::size_t best = cur.size();
    for (std::size_t v = 0; v < cur.size(); ++v)
      if (cur[v] > m[v] && (best == cur.size() || cur[v] > cur[best])) best = v;
    if (best == cur.size()) break;
    cur.set(best, cur[best] - 1);
    path.push_back(cur);
  }
  while (true) {
    // raise a vertex of smallest value below y
    std::size_t best = cur.size();
    for (std::size_t v = 0; v < cur.size(); ++v)
      if (cur[v] < y[v] && (best == cur.size() || cur[v] < cur[best])) best = v;
    if (best == cur.size()) break;
    cur.set(best, cur[best] + 1);
    path.push_back(cur);
  }
  return path;
}

std::vector<CoverPair<KHeight>> path_decompose(const Graph& graph, const KHeight& x,
                                               const KHeight& y) {
  auto path = lattice_path(graph, x, y);
  std::vector<CoverPair<KHeight>> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& a = path[i];
    const auto& b = path[i + 1];
    std::size_t pivot = 0;
    while (a[pivot] == b[pivot]) ++pivot;
    if (a[pivot] < b[pivot])
      out.push_back({a, b, pivot});
    else
      out.push_back({b, a, pivot});
  }
  return out;
}

void coupled_updown_step(const Graph& graph, CoupledState& state) {
  if (graph.size() == 0) return;
  auto m = draw_updown(state.rng, graph.size());
  apply_updown(graph, state.low, m);
  apply_updown(graph, state.high, m);
  ++state.step_count;
}

const JointCoupling& JointCache::get(BlockSampler& sampler, std::size_t block,
                                     const Values& low, const Values& high) {
  auto key = std::make_tuple(block, low, high);
  auto it = map_.find(key);
  if (it != map_.end()) return it->second;
  if (map_.size() >= capacity_) map_.clear();
  // copy before the second lookup can evict the first
  std::vector<Values> lo = sampler.fillings(block, low);
  std::vector<Values> hi = sampler.fillings(block, high);
  auto c = strassen_joint(std::move(lo), std::move(hi));
  return map_.emplace(std::move(key), std::move(c)).first->second;
}

void coupled_block_step(BlockSampler& sampler, CoupledState& state, JointCache* cache) {
  JointCache local(64);
  JointCache& joint = cache ? *cache : local;
  ++state.step_count;
  double p = state.rng.uniform();
  if (p > 0.5) return;
  std::size_t b = sampler.block_for(state.rng.below(sampler.family().total_count()));
  Values bl = sampler.boundary_values(b, state.low);
  Values bh = sampler.boundary_values(b, state.high);
  if (bl == bh) {
    std::uint64_t n = sampler.count(b, bl);
    Values f = sampler.filling(b, bl, state.rng.below(n));
    sampler.apply(b, state.low, f);
    sampler.apply(b, state.high, f);
    return;
  }
  const auto& solver = sampler.solver(b);
  auto small = [&](const Values& v) { return sampler.count(b, v) <= kFlowSetLimit; };
  std::vector<Values> chain{bl};
  if (small(bl) && small(bh)) {
    // distinct boundary assignments along a shortest path from low to high
    for (const auto& h : lattice_path(sampler.graph(), state.low, state.high)) {
      Values v = sampler.boundary_values(b, h);
      if (v != chain.back()) chain.push_back(std::move(v));
    }
  }
  if (chain.size() < 2 || !std::all_of(chain.begin(), chain.end(), small)) {
    std::vector<std::uint64_t> u(solver.block().size());
    for (auto& x : u) x = state.rng.next();
    sampler.apply(b, state.low, solver.quantile_filling(bl, u));
    sampler.apply(b, state.high, solver.quantile_filling(bh, u));
    return;
  }
  Values f_low;
  {
    const auto& first = sampler.fillings(b, bl);
    f_low = first[state.rng.below(first.size())];
  }
  Values f = f_low;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Values& cur_b = chain[i - 1];
    const Values& next_b = chain[i];
    if (weight(next_b) > weight(cur_b)) {
      const auto& c = joint.get(sampler, b, cur_b, next_b);
      std::size_t i_low = std::lower_bound(c.low_set.begin(), c.low_set.end(), f) - c.low_set.begin();
      f = c.high_set[c.sample_high_given_low(i_low, state.rng)];
    } else {
      const auto& c = joint.get(sampler, b, next_b, cur_b);
      std::size_t j_high = std::lower_bound(c.high_set.begin(), c.high_set.end(), f) - c.high_set.begin();
      f = c.low_set[c.sample_low_given_high(j_high, state.rng)];
    }
  }
  sampler.apply(b, state.low, f_low);
  sampler.apply(b, state.high, f);
}

Rational expected_updown_distance(const Graph& graph, const KHeight& x, const KHeight& y) {
  const std::size_t n = graph.size();
  if (n == 0) return Rational(0);
  BigInt moved = 0;
  for (Vertex v = 0; v < n; ++v)
    for (int d : {-1, 1}) {
      KHeight a = x, b = y;
      if (updown_allowed(graph, a, v, d)) a.set(v, static_cast<Value>(int(a[v]) + d));
      if (updown_allowed(graph, b, v, d)) b.set(v, static_cast<Value>(int(b[v]) + d));
      moved += BigInt(static_cast<unsigned long>(delta(a, b)));
    }
  // half the time the move is rejected and the distance stays
  Rational r = Rational(moved, BigInt(static_cast<unsigned long>(4 * n))) +
               Rational(static_cast<unsigned long>(delta(x, y)), 2ul);
  r.canonicalize();
  return r;
}

KHeight cftp_sample(const Graph& graph, int k, std::uint64_t seed, const CftpOptions& options) {
  KHeight bottom = KHeight::bottom(graph, k);
  if (k == 0 || graph.size() == 0) return bottom;
  const KHeight top = KHeight::top(graph, k);
  for (unsigned epoch = 0; epoch < options.max_epochs; ++epoch) {
    const std::uint64_t T = std::uint64_t{1} << epoch;
    KHeight lo = bottom, hi = top;
    // the move at time -s always comes from stream s
    for (std::uint64_t s = T; s >= 1; --s) {
      Rng slot(seed, s);
      auto m = draw_updown(slot, graph.size());
      apply_updown(graph, lo, m);
      apply_updown(graph, hi, m);
    }
    if (lo == hi) return lo;
  }
  throw EpochCapExceeded("no coalescence after " + std::to_string(options.max_epochs) +
                         " epochs");
}

CouplingTimeSummary summarize_times(std::vector<std::uint64_t> times) {
  CouplingTimeSummary out;
  out.times = std::move(times);
  if (out.times.empty()) return out;
  auto sorted = out.times;
  std::sort(sorted.begin(), sorted.end());
  out.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / double(sorted.size());
  auto quantile = [&](double q) {
    double pos = q * double(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return double(sorted[lo]) + (pos - double(lo)) * (double(sorted[hi]) - double(sorted[lo]));
  };
  out.median = quantile(0.5);
  out.q10 = quantile(0.1);
  out.q90 = quantile(0.9);
  return out;
}

CouplingTimeSummary coupling_time_estimate(const Graph& graph, int k, ChainKind chain,
                                           const BlockFamily* family, std::uint64_t trials,
                                           std::uint64_t seed, std::uint64_t max_steps) {
  CouplingTimeSummary out;
  std::optional<BlockSampler> sampler;
  JointCache cache;
  if (chain == ChainKind::block) {
    if (!family) throw InvalidInput("block chain needs a block family");
    sampler.emplace(graph, *family, k);
  }
  const Rng root(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    CoupledState st{KHeight::bottom(graph, k), KHeight::top(graph, k), 0, root.split(t)};
    while (st.low != st.high) {
      if (st.step_count >= max_steps)
        throw EpochCapExceeded("no coalescence within " + std::to_string(max_steps) + " steps");
      if (chain == ChainKind::updown)
        coupled_updown_step(graph, st);
      else
        coupled_block_step(*sampler, st, &cache);
    }
    out.times.push_back(st.step_count);
  }
  return summarize_times(std::move(out.times));
}

}  // namespace kheight
