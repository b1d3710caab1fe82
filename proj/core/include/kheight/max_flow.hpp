#pragma once

#include <cstdint>
#include <vector>

namespace kheight {

// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  // Returns an id for querying the flow on this arc afterwards.
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);
  std::int64_t flow(std::size_t arc) const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t capacity;
    std::int64_t flow;
  };
  bool bfs(std::size_t s, std::size_t t);
  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace kheight
