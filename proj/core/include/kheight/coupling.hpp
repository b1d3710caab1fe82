#pragma once

#include "kheight/chains.hpp"
#include "kheight/exact.hpp"
#include "kheight/graph.hpp"
#include "kheight/heights.hpp"
#include "kheight/rng.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <optional>
#include <vector>

namespace kheight {

// Joint distribution of two uniform distributions on finite sets of
// fillings, supported on pointwise comparable pairs. Mass is kept as
// integers over |low| * |high|.
struct JointCoupling {
  struct Entry {
    std::size_t low;   // index into low_set
    std::size_t high;  // index into high_set
    std::uint64_t mass;
  };
  std::vector<Values> low_set;
  std::vector<Values> high_set;
  std::vector<Entry> support;

  std::uint64_t denominator() const { return low_set.size() * high_set.size(); }
  Rational probability(const Entry& e) const;
  // Expected L1 distance between the coupled pair.
  Rational expected_distance() const;

  // Conditional draws: a partner for low_set[i] (or high_set[j]).
  std::size_t sample_high_given_low(std::size_t i, Rng& rng) const;
  std::size_t sample_low_given_high(std::size_t j, Rng& rng) const;

  // rows[i] / cols[j]: support entries with that low / high index
  std::vector<std::vector<std::size_t>> rows, cols;
  void index();
};

// Max-flow coupling of the uniform distributions on low_set and high_set.
// Throws DominanceViolation when the flow cannot carry the full unit.
JointCoupling strassen_joint(std::vector<Values> low_set, std::vector<Values> high_set);

// Shortest lattice path between two heights of the same graph: down from x
// to meet(x, y), then up to y; each step raises (or lowers) the vertex of
// smallest (largest) value where the endpoints differ, ties to the smaller
// index. Length equals delta(x, y).
std::vector<KHeight> lattice_path(const Graph& graph, const KHeight& x, const KHeight& y);
// The path's steps as cover pairs (low, high, pivot).
std::vector<CoverPair<KHeight>> path_decompose(const Graph& graph, const KHeight& x,
                                               const KHeight& y);

struct CoupledState {
  KHeight low;
  KHeight high;
  std::uint64_t step_count = 0;
  Rng rng;
};

// Shared (v, delta, p); each side accepts by its own validity test.
void coupled_updown_step(const Graph& graph, CoupledState& state);

// Max-flow couplings keyed by block and the two boundary assignments.
class JointCache {
 public:
  explicit JointCache(std::size_t capacity = 1024) : capacity_(capacity) {}
  const JointCoupling& get(BlockSampler& sampler, std::size_t block, const Values& low,
                           const Values& high);

 private:
  std::size_t capacity_;
  std::map<std::tuple<std::size_t, Values, Values>, JointCoupling> map_;
};

// Filling sets up to this size are coupled through max flow.
inline constexpr std::uint64_t kFlowSetLimit = 256;

// Draw order: p, block index, then fillings. Equal boundaries share one
// filling. When every boundary assignment along the lattice path between
// the two states has at most kFlowSetLimit fillings, the fillings are
// chained along that path, one max-flow coupling per cover step. Otherwise
// both sides take FillingSolver::quantile_filling with shared uniforms.
void coupled_block_step(BlockSampler& sampler, CoupledState& state,
                        JointCache* cache = nullptr);

// Exact expected distance after one coupled up/down step.
Rational expected_updown_distance(const Graph& graph, const KHeight& x, const KHeight& y);

struct CftpOptions {
  unsigned max_epochs = 40;  // T = 1, 2, 4, ..., 2^(max_epochs - 1)
};

// Exact uniform sample by coupling from the past with the monotone up/down
// grand coupling started from the bottom and top heights.
KHeight cftp_sample(const Graph& graph, int k, std::uint64_t seed,
                    const CftpOptions& options = {});

struct CouplingTimeSummary {
  std::vector<std::uint64_t> times;
  double mean = 0;
  double median = 0;
  double q10 = 0;
  double q90 = 0;
};

// Mean, median and 10%/90% quantiles (linear interpolation).
CouplingTimeSummary summarize_times(std::vector<std::uint64_t> times);

// Runs the coupled chain from (bottom, top) until the two copies meet.
CouplingTimeSummary coupling_time_estimate(const Graph& graph, int k, ChainKind chain,
                                           const BlockFamily* family, std::uint64_t trials,
                                           std::uint64_t seed,
                                           std::uint64_t max_steps = 100000000);

}  // namespace kheight
