#include "kheight/verify.hpp"

#include "kheight/bounds.hpp"
#include "kheight/chains.hpp"
#include "kheight/coupling.hpp"
#include "kheight/divergence.hpp"
#include "kheight/error.hpp"
#include "kheight/heights.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include <deque>
#include <map>

namespace kheight {
namespace {

std::string exact_and_decimal(const Rational& r) { return to_string(r) + " ~ " + to_fixed(r, 6); }

std::vector<Graph> small_graphs() {
  return {make_path(3), make_complete(3), make_cycle(4), make_complete(4),
          Graph(4, {{0, 1}, {0, 2}, {0, 3}})};
}

CheckResult check_lattice() {
  CheckResult c{"lattice.laws", true, "", {}};
  std::uint64_t pairs = 0;
  for (const auto& g : small_graphs()) {
    auto all = enumerate_heights(g, 2);
    for (const auto& x : all)
      for (const auto& y : all) {
        ++pairs;
        KHeight m = meet(x, y), j = join(x, y);
        bool ok = is_valid(g, 2, m.values()) && is_valid(g, 2, j.values()) && leq(m, x) &&
                  leq(m, y) && leq(x, j) && leq(y, j) && m == meet(y, x) && j == join(y, x) &&
                  join(x, meet(x, y)) == x && meet(x, join(x, y)) == x &&
                  (leq(x, y) == (m == x));
        if (!ok && c.passed) {
          c.passed = false;
          c.detail = "law broken on a graph with " + std::to_string(g.size()) + " vertices";
        }
      }
  }
  c.values["pairs"] = std::to_string(pairs);
  return c;
}

CheckResult check_trace(const VerifyOptions& options) {
  CheckResult c{"enumeration.trace_count", true, "", {}};
  const std::map<int, BigInt> expected = {{2, BigInt(2825761)}, {3, BigInt(15784802)}};
  for (auto [k, want] : expected) {
    TransferMatrices m(k);
    if (options.mutate_matrices) options.mutate_matrices(m);
    BigInt got = count_rect_extensible(m);
    c.values["k" + std::to_string(k)] = to_string(got);
    if (got != want) {
      c.passed = false;
      c.detail += "k=" + std::to_string(k) + " gave " + to_string(got) + ", expected " +
                  to_string(want) + "; ";
    }
  }
  return c;
}

CheckResult check_counts() {
  CheckResult c{"enumeration.brute_force_counts", true, "", {}};
  for (int k = 1; k <= 3; ++k)
    for (unsigned len = 3; len <= 6; ++len)
      if (count_cycle_heights(k, len) != BigInt(static_cast<unsigned long>(
                                             enumerate_heights(make_cycle(len), k).size()))) {
        c.passed = false;
        c.detail += "cycle " + std::to_string(len) + " k=" + std::to_string(k) + "; ";
      }
  for (unsigned n = 1; n <= 6; ++n)
    if (enumerate_heights(make_complete(n), 2).size() != (std::size_t{1} << (n + 1)) - 1) {
      c.passed = false;
      c.detail += "complete " + std::to_string(n) + "; ";
    }
  return c;
}

// Dominance flow and the expected-distance identity on the first cover
// pairs of a hex block.
std::pair<CheckResult, CheckResult> check_couplings(std::size_t limit) {
  CheckResult dom{"coupling.dominance_flow", true, "", {}};
  CheckResult id{"coupling.gap_identity", true, "", {}};
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver solver(g, b, 2);
  BoundaryConstraints constraints(g, b, 2);
  std::size_t checked = 0;
  Rational max_gap = 0;
  constraints.for_each([&](const Values& v) {
    BoundaryConstraint low{2, constraints.vertices(), v};
    for (std::size_t p = 0; p < v.size() && checked < limit; ++p) {
      if (v[p] == 2) continue;
      auto pair = raise(low, p);
      if (!pair.high.valid_on(g)) continue;
      auto gap = expected_gap(solver, pair);
      if (!gap) continue;
      ++checked;
      try {
        auto joint = strassen_joint(solver.fillings(pair.low.values),
                                    solver.fillings(pair.high.values));
        std::vector<std::uint64_t> rows(joint.low_set.size()), cols(joint.high_set.size());
        for (const auto& e : joint.support) {
          rows[e.low] += e.mass;
          cols[e.high] += e.mass;
          if (!leq(joint.low_set[e.low], joint.high_set[e.high])) dom.passed = false;
        }
        for (auto r : rows)
          if (r != joint.high_set.size()) dom.passed = false;
        for (auto r : cols)
          if (r != joint.low_set.size()) dom.passed = false;
        if (joint.expected_distance() != *gap) {
          id.passed = false;
          id.detail = "mismatch at pivot position " + std::to_string(p);
        }
        if (*gap > max_gap) max_gap = *gap;
      } catch (const DominanceViolation& e) {
        dom.passed = false;
        dom.detail = e.what();
      }
    }
    return checked < limit;
  });
  dom.values["pairs"] = std::to_string(checked);
  id.values["pairs"] = std::to_string(checked);
  id.values["max_gap"] = exact_and_decimal(max_gap);
  return {dom, id};
}

CheckResult check_bfs() {
  CheckResult c{"chains.distance_bfs", true, "", {}};
  std::uint64_t pairs = 0;
  for (const auto& g : small_graphs())
    for (int k = 1; k <= 2; ++k) {
      auto all = enumerate_heights(g, k);
      auto dist = updown_bfs_distances(g, k);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j, ++pairs)
          if (dist[i][j] != delta(all[i], all[j])) {
            c.passed = false;
            c.detail = "distance mismatch on a graph with " + std::to_string(g.size()) +
                       " vertices";
          }
    }
  c.values["pairs"] = std::to_string(pairs);
  return c;
}

CheckResult check_non_contraction() {
  CheckResult c{"chains.non_contraction", true, "", {}};
  Graph g = make_path(3);
  KHeight x(g, 3, {1, 0, 1}), y(g, 3, {1, 2, 1});
  Rational e = expected_updown_distance(g, x, y);
  c.values["expected_distance"] = exact_and_decimal(e);
  Rational want(13, 6);
  if (e != want) {
    c.passed = false;
    c.detail = "expected 13/6";
  }
  return c;
}

CheckResult check_cftp(const VerifyOptions& options) {
  CheckResult c{"cftp.uniformity", true, "", {}};
  Graph g = make_path(3);
  auto all = enumerate_heights(g, 2);
  std::map<Values, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i].values()] = i;
  std::vector<std::uint64_t> counts(all.size());
  for (std::uint64_t s = 0; s < options.cftp_samples; ++s)
    ++counts[index.at(cftp_sample(g, 2, Rng::derive(options.seed, s)).values())];
  auto chi = chi_square_uniform(counts);
  c.values["states"] = std::to_string(all.size());
  c.values["samples"] = std::to_string(options.cftp_samples);
  c.values["chi_square"] = std::to_string(chi.statistic);
  c.values["p_value"] = std::to_string(chi.p_value);
  if (!(chi.p_value > 0.01)) {
    c.passed = false;
    c.detail = "p-value below 0.01";
  }
  return c;
}

CheckResult check_marginal() {
  CheckResult c{"bounds.marginal", true, "", {}};
  Rational b = marginal_bound(2, 3);
  c.values["k2_degree3"] = exact_and_decimal(b);
  if (b != Rational(1, 9) || marginal_bound(1, 5) != Rational(1, 2)) {
    c.passed = false;
    c.detail = "marginal bound formula";
  }
  return c;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> updown_bfs_distances(const Graph& graph, int k) {
  auto all = enumerate_heights(graph, k);
  std::map<Values, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i].values()] = i;
  const auto inf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint32_t>> out(all.size());
  for (std::size_t s = 0; s < all.size(); ++s) {
    auto& d = out[s];
    d.assign(all.size(), inf);
    d[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (Vertex v = 0; v < graph.size(); ++v)
        for (int step : {-1, 1}) {
          Values next = all[u].values();
          int value = int(next[v]) + step;
          if (value < 0 || value > k) continue;
          next[v] = static_cast<Value>(value);
          auto it = index.find(next);  // only valid heights are indexed
          if (it != index.end() && d[it->second] == inf) {
            d[it->second] = d[u] + 1;
            queue.push_back(it->second);
          }
        }
    }
  }
  return out;
}

ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  ChiSquare out;
  if (counts.size() < 2) return {0, 0, 1};
  double total = 0;
  for (auto c : counts) total += double(c);
  const double expected = total / double(counts.size());
  for (auto c : counts) out.statistic += (double(c) - expected) * (double(c) - expected) / expected;
  out.dof = counts.size() - 1;
  boost::math::chi_squared dist(static_cast<double>(out.dof));
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport r;
  auto guarded = [&](const std::string& id, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      r.checks.push_back({id, false, std::string("exception: ") + e.what(), {}});
    }
  };
  guarded("lattice.laws", [&] { r.checks.push_back(check_lattice()); });
  guarded("enumeration.trace_count", [&] { r.checks.push_back(check_trace(options)); });
  guarded("enumeration.brute_force_counts", [&] { r.checks.push_back(check_counts()); });
  guarded("coupling.dominance_flow", [&] {
    auto [dom, id] = check_couplings(400);
    r.checks.push_back(dom);
    r.checks.push_back(id);
  });
  guarded("chains.distance_bfs", [&] { r.checks.push_back(check_bfs()); });
  guarded("chains.non_contraction", [&] { r.checks.push_back(check_non_contraction()); });
  guarded("cftp.uniformity", [&] { r.checks.push_back(check_cftp(options)); });
  guarded("bounds.marginal", [&] { r.checks.push_back(check_marginal()); });
  return r;
}

std::string render_verify_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}, {"values", c.values}});
  nlohmann::json j = {{"passed", report.passed()}, {"checks", checks}};
  return j.dump(2) + "\n";
}

}  // namespace kheight
