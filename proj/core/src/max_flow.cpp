#include "kheight/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace kheight {

MaxFlow::MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), next_(nodes) {}

std::size_t MaxFlow::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
  std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity, 0});
  out_[from].push_back(id);
  arcs_.push_back({from, 0, 0});
  out_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.capacity > a.flow && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t pushed) {
  if (v == t || pushed == 0) return pushed;
  for (std::size_t& i = next_[v]; i < out_[v].size(); ++i) {
    std::size_t id = out_[v][i];
    Arc& a = arcs_[id];
    if (level_[a.to] != level_[v] + 1 || a.capacity <= a.flow) continue;
    std::int64_t got = dfs(a.to, t, std::min(pushed, a.capacity - a.flow));
    if (got > 0) {
      a.flow += got;
      arcs_[id ^ 1].flow -= got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t s, std::size_t t) {
  std::int64_t total = 0;
  while (bfs(s, t)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::int64_t MaxFlow::flow(std::size_t arc) const { return arcs_.at(arc).flow; }

}  // namespace kheight
