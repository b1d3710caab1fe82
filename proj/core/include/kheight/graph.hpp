#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kheight {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphKind { generic, rect_torus, hex_torus, complete, case_graph };

// Torus dimensions: g columns (x) by h rows (y).
struct TorusDims {
  std::size_t g = 0;
  std::size_t h = 0;
};

// Undirected simple graph over vertices 0..n-1. Edges are stored normalized
// (u < v) and sorted; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidInput on self-loops, duplicate edges or out-of-range ends.
  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  GraphKind kind() const noexcept { return kind_; }
  const std::optional<TorusDims>& torus() const noexcept { return torus_; }
  void set_kind(GraphKind kind, std::optional<TorusDims> torus = std::nullopt) {
    kind_ = kind;
    torus_ = torus;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.size() == b.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  GraphKind kind_ = GraphKind::generic;
  std::optional<TorusDims> torus_;
};

// How the filling DP walks a block. `grid` means the vertices are listed
// row-major with `row_width` columns.
enum class BlockShape { generic, path, cycle, grid };

struct Block {
  std::vector<Vertex> vertices;
  std::uint32_t multiplicity = 1;
  BlockShape shape = BlockShape::generic;
  std::size_t row_width = 0;

  std::size_t size() const noexcept { return vertices.size(); }
};

struct BlockFamily {
  std::vector<Block> blocks;

  // |B|, counted with multiplicity.
  std::uint64_t total_count() const;
};

// Row-major torus: vertex (x, y) has index y*g + x. Requires g, h >= 3.
Graph make_toroidal_rect(std::size_t g, std::size_t h);

// Dual of the toroidal triangular grid with horizontal, vertical and
// diagonal (x,y)-(x+1,y+1) edges. For each point (x, y) there are two
// triangles: index 2*(y*g+x) is {(x,y),(x+1,y),(x+1,y+1)} ("lower") and
// index 2*(y*g+x)+1 is {(x,y),(x,y+1),(x+1,y+1)} ("upper"). Requires g, h >= 3.
Graph make_toroidal_hex(std::size_t g, std::size_t h);

Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);

// All g*h contiguous 4x4 blocks of a rect torus with g, h >= 8, listed by
// top-left corner in row-major order.
BlockFamily rect_block_family(const Graph& graph);
// The 4x4 block whose top-left cell is (x, y).
Block rect_block(const Graph& graph, std::size_t x, std::size_t y);

// The g*h six-cycles around each grid point of a hex torus with g, h >= 4.
BlockFamily hex_block_family(const Graph& graph);
// The six triangles around point (x, y), in cyclic order.
Block hex_block(const Graph& graph, std::size_t x, std::size_t y);

// One singleton block per vertex.
BlockFamily singleton_family(const Graph& graph);

// External neighbors of the block, sorted ascending.
std::vector<Vertex> boundary(const Graph& graph, const Block& block);

bool covers(const Graph& graph, const BlockFamily& family);

// Per-vertex block membership and boundary membership, with multiplicity.
std::vector<std::uint64_t> membership_counts(const Graph& graph,
                                             const BlockFamily& family);
std::vector<std::uint64_t> boundary_counts(const Graph& graph,
                                           const BlockFamily& family);

// Validates the block (distinct, in-range vertices) and fills in the DP
// shape by inspecting the induced subgraph in the given vertex order.
Block classify_block(const Graph& graph, Block block);

// ---------------------------------------------------------------------------
// 3-regular case graphs.

enum class CaseType { type1, type2 };

struct CaseTag {
  CaseType type = CaseType::type1;
  int face_degree = 0;      // d for type 1; 8 for type 2
  std::vector<int> labels;  // 1-based block-vertex labels adjacent to v

  // Throws InvalidInput unless 3 <= d <= 10 (type 1), labels within range,
  // 1 to 3 distinct labels.
  void validate() const;
  int block_size() const { return type == CaseType::type1 ? face_degree : 8; }

  // "1_6[1,3]" / "2[2,5]"
  std::string name() const;
  static CaseTag parse(const std::string& text);

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

struct CaseGraph {
  Graph graph;
  Block block;
  Vertex external = 0;  // the vertex v whose value is raised
};

// Minimal local graph for a case: block vertices 0..b-1 (label i is vertex
// i-1), then v, then one private boundary vertex per remaining slot, ordered
// by block vertex. A type-1 block is a d-cycle where every block vertex has
// one outside slot; a type-2 block is an 8-path whose end vertices have two.
CaseGraph make_case_graph(const CaseTag& tag);

}  // namespace kheight
