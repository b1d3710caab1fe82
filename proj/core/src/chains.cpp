#include "kheight/chains.hpp"

#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"

#include <algorithm>
#include <cassert>

namespace kheight {

UpDownMove draw_updown(Rng& rng, std::size_t n) {
  UpDownMove m;
  m.v = static_cast<Vertex>(rng.below(n));
  m.delta = rng.below(2) ? 1 : -1;
  m.p = rng.uniform();
  return m;
}

bool updown_allowed(const Graph& graph, const KHeight& x, Vertex v, int delta) {
  int y = int(x[v]) + delta;
  if (y < 0 || y > x.k()) return false;
  for (Vertex w : graph.neighbors(v))
    if (std::abs(int(x[w]) - y) > 1) return false;
  return true;
}

bool apply_updown(const Graph& graph, KHeight& x, const UpDownMove& m) {
  if (m.p > 0.5 || !updown_allowed(graph, x, m.v, m.delta)) return false;
  x.set(m.v, static_cast<Value>(int(x[m.v]) + m.delta));
  return true;
}

void step_updown(const Graph& graph, ChainState& state) {
  if (graph.size() == 0) return;
  auto m = draw_updown(state.rng, graph.size());
  apply_updown(graph, state.current, m);
  ++state.step_count;
  assert(is_valid(graph, state.current.k(), state.current.values()));
}

BlockSampler::BlockSampler(const Graph& graph, BlockFamily family, int k,
                           std::size_t cache_entries, std::uint64_t store_limit)
    : graph_(&graph), family_(std::move(family)), k_(k),
      capacity_(std::max<std::size_t>(cache_entries, 1)), store_limit_(store_limit) {
  if (family_.blocks.empty()) throw InvalidInput("empty block family");
  if (!covers(graph, family_)) throw InvalidInput("block family does not cover the graph");
  std::uint64_t total = 0;
  for (const auto& b : family_.blocks) {
    solvers_.emplace_back(graph, b, k);
    if (!solvers_.back().fits_u64())
      throw CapExceeded("block too large for 64-bit filling counts");
    total += b.multiplicity;
    cumulative_.push_back(total);
  }
}

std::size_t BlockSampler::block_for(std::uint64_t draw) const {
  return std::upper_bound(cumulative_.begin(), cumulative_.end(), draw) - cumulative_.begin();
}

Values BlockSampler::boundary_values(std::size_t block, const KHeight& x) const {
  const auto& bnd = solvers_.at(block).boundary();
  Values v(bnd.size());
  for (std::size_t i = 0; i < bnd.size(); ++i) v[i] = x[bnd[i]];
  return v;
}

BlockSampler::Entry& BlockSampler::lookup(std::size_t block, const Values& b, bool want_all) {
  Key key{block, std::string(b.begin(), b.end())};
  auto it = index_.find(key);
  if (it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    Entry& e = it->second->second;
    if (want_all && !e.stored) {
      e.fillings = solvers_[block].fillings(b);
      e.stored = true;
    }
    ++hits_;
    return e;
  }
  ++misses_;
  Entry e;
  e.count = solvers_[block].stats64(b).count;
  if (e.count <= store_limit_ || want_all) {
    e.fillings = solvers_[block].fillings(b);
    e.stored = true;
  }
  lru_.emplace_front(key, std::move(e));
  index_[key] = lru_.begin();
  if (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
  return lru_.front().second;
}

std::uint64_t BlockSampler::count(std::size_t block, const Values& b) {
  return lookup(block, b, false).count;
}

Values BlockSampler::filling(std::size_t block, const Values& b, std::uint64_t index) {
  Entry& e = lookup(block, b, false);
  if (index >= e.count) throw InvalidInput("filling index out of range");
  if (e.stored) return e.fillings[index];
  return solvers_[block].unrank(b, index);
}

const std::vector<Values>& BlockSampler::fillings(std::size_t block, const Values& b) {
  return lookup(block, b, true).fillings;
}

void BlockSampler::apply(std::size_t block, KHeight& x, const Values& f) const {
  const auto& verts = solvers_.at(block).block().vertices;
  for (std::size_t i = 0; i < verts.size(); ++i) x.set(verts[i], f[i]);
}

void step_block(BlockSampler& sampler, ChainState& state) {
  std::size_t b = sampler.block_for(state.rng.below(sampler.family().total_count()));
  Values bv = sampler.boundary_values(b, state.current);
  std::uint64_t n = sampler.count(b, bv);
  if (n == 0) throw std::logic_error("current state has no admissible filling");
  std::uint64_t index = state.rng.below(n);
  double p = state.rng.uniform();
  if (p <= 0.5) sampler.apply(b, state.current, sampler.filling(b, bv, index));
  ++state.step_count;
  assert(is_valid(sampler.graph(), state.current.k(), state.current.values()));
}

void run(const Graph& graph, ChainState& state, std::uint64_t steps,
         const std::function<void(const ChainState&)>& on_step) {
  for (std::uint64_t i = 0; i < steps; ++i) {
    step_updown(graph, state);
    if (on_step) on_step(state);
  }
}

void run(BlockSampler& sampler, ChainState& state, std::uint64_t steps,
         const std::function<void(const ChainState&)>& on_step) {
  for (std::uint64_t i = 0; i < steps; ++i) {
    step_block(sampler, state);
    if (on_step) on_step(state);
  }
}

namespace {

std::size_t index_of(const std::vector<KHeight>& states, const KHeight& x) {
  auto it = std::lower_bound(states.begin(), states.end(), x);
  return std::size_t(it - states.begin());
}

}  // namespace

TransitionMatrix updown_transitions(const Graph& graph, int k) {
  TransitionMatrix t;
  t.states = enumerate_heights(graph, k);
  const std::size_t N = t.states.size();
  const std::size_t n = graph.size();
  t.p.assign(N, std::vector<Rational>(N, Rational(0)));
  // each (v, delta) has probability 1/(2n); acceptance 1/2
  const Rational move(1, 4 * static_cast<long>(n));
  for (std::size_t i = 0; i < N; ++i) {
    Rational stay = 1;
    for (Vertex v = 0; v < n; ++v)
      for (int d : {-1, 1}) {
        if (!updown_allowed(graph, t.states[i], v, d)) continue;
        KHeight y = t.states[i];
        y.set(v, static_cast<Value>(int(y[v]) + d));
        t.p[i][index_of(t.states, y)] += move;
        stay -= move;
      }
    t.p[i][i] += stay;
  }
  return t;
}

TransitionMatrix block_transitions(const Graph& graph, const BlockFamily& family, int k) {
  BlockSampler sampler(graph, family, k);
  TransitionMatrix t;
  t.states = enumerate_heights(graph, k);
  const std::size_t N = t.states.size();
  t.p.assign(N, std::vector<Rational>(N, Rational(0)));
  const Rational total(static_cast<long>(family.total_count()));
  for (std::size_t i = 0; i < N; ++i) {
    t.p[i][i] += Rational(1, 2);
    for (std::size_t b = 0; b < family.blocks.size(); ++b) {
      Rational pb = Rational(static_cast<long>(family.blocks[b].multiplicity)) / total / 2;
      Values bv = sampler.boundary_values(b, t.states[i]);
      const auto& fs = sampler.fillings(b, bv);
      Rational each = pb / Rational(static_cast<long>(fs.size()));
      for (const auto& f : fs) {
        KHeight y = t.states[i];
        sampler.apply(b, y, f);
        t.p[i][index_of(t.states, y)] += each;
      }
    }
  }
  return t;
}

}  // namespace kheight
