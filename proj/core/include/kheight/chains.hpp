#pragma once

#include "kheight/exact.hpp"
#include "kheight/filling_solver.hpp"
#include "kheight/graph.hpp"
#include "kheight/heights.hpp"
#include "kheight/rng.hpp"

#include <cstdint>
#include <functional>
#include <list>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace kheight {

struct ChainState {
  KHeight current;
  std::uint64_t step_count = 0;
  Rng rng;
};

// One draw of the up/down chain, in consumption order v, delta, p.
struct UpDownMove {
  Vertex v = 0;
  int delta = 1;
  double p = 0;
};

UpDownMove draw_updown(Rng& rng, std::size_t n);
// Applies the move if the result is a k-height and p <= 1/2.
bool apply_updown(const Graph& graph, KHeight& x, const UpDownMove& move);
// Whether x(v) + delta keeps x a k-height.
bool updown_allowed(const Graph& graph, const KHeight& x, Vertex v, int delta);

void step_updown(const Graph& graph, ChainState& state);

// Uniform admissible fillings of the blocks of a family, with a small LRU
// cache of enumerated fillings per boundary assignment. Larger filling sets
// are unranked through the counting DP instead of stored.
class BlockSampler {
 public:
  BlockSampler(const Graph& graph, BlockFamily family, int k,
               std::size_t cache_entries = 4096,
               std::uint64_t store_limit = 4096);

  const Graph& graph() const noexcept { return *graph_; }
  const BlockFamily& family() const noexcept { return family_; }
  int k() const noexcept { return k_; }
  const FillingSolver& solver(std::size_t block) const { return solvers_.at(block); }

  // Block index for a uniform draw in [0, |family|), by multiplicity.
  std::size_t block_for(std::uint64_t draw) const;
  Values boundary_values(std::size_t block, const KHeight& x) const;
  std::uint64_t count(std::size_t block, const Values& boundary_values);
  Values filling(std::size_t block, const Values& boundary_values, std::uint64_t index);
  // All fillings in lexicographic order (cached when small).
  const std::vector<Values>& fillings(std::size_t block, const Values& boundary_values);
  void apply(std::size_t block, KHeight& x, const Values& filling) const;

  std::uint64_t cache_hits() const noexcept { return hits_; }
  std::uint64_t cache_misses() const noexcept { return misses_; }

 private:
  struct Entry {
    std::uint64_t count = 0;
    bool stored = false;
    std::vector<Values> fillings;
  };
  Entry& lookup(std::size_t block, const Values& boundary_values, bool want_all);

  const Graph* graph_;
  BlockFamily family_;
  int k_;
  std::vector<FillingSolver> solvers_;
  std::vector<std::uint64_t> cumulative_;
  std::size_t capacity_;
  std::uint64_t store_limit_;
  using Key = std::pair<std::size_t, std::string>;
  std::list<std::pair<Key, Entry>> lru_;
  std::map<Key, std::list<std::pair<Key, Entry>>::iterator> index_;
  std::uint64_t hits_ = 0, misses_ = 0;
};

// Draw order: block index, filling index, p.
void step_block(BlockSampler& sampler, ChainState& state);

enum class ChainKind { updown, block };

// Runs `steps` steps; the callback sees every state after each step.
void run(const Graph& graph, ChainState& state, std::uint64_t steps,
         const std::function<void(const ChainState&)>& on_step = {});
void run(BlockSampler& sampler, ChainState& state, std::uint64_t steps,
         const std::function<void(const ChainState&)>& on_step = {});

// Exact transition probabilities of the up/down chain on all of Omega
// (enumerated; subject to the enumeration cap).
struct TransitionMatrix {
  std::vector<KHeight> states;
  std::vector<std::vector<Rational>> p;
};
TransitionMatrix updown_transitions(const Graph& graph, int k);
TransitionMatrix block_transitions(const Graph& graph, const BlockFamily& family, int k);

}  // namespace kheight
