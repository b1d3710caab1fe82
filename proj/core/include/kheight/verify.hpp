#pragma once

#include "kheight/enumeration.hpp"
#include "kheight/exact.hpp"
#include "kheight/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kheight {

// Shortest-path distances in the up/down transition graph over all
// k-heights, indexed like enumerate_heights. Independent of delta().
std::vector<std::vector<std::uint32_t>> updown_bfs_distances(const Graph& graph, int k);

// Pearson chi-square statistic against equal expected counts, and its
// upper-tail p-value.
struct ChiSquare {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 0;
};
ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& counts);

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
  // Named values; exact ones carry both the rational and a rounded decimal.
  std::map<std::string, std::string> values;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t cftp_samples = 20000;
  // Applied to the transfer matrices before the trace-count check; used to
  // confirm that a corrupted matrix is caught.
  std::function<void(TransferMatrices&)> mutate_matrices;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options = {});
std::string render_verify_json(const VerifyReport& report);

}  // namespace kheight
