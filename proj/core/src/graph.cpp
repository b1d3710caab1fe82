#include "kheight/graph.hpp"

#include "kheight/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kheight {

Graph::Graph(std::size_t n, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n)
    throw InvalidInput("label count does not match vertex count");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidInput("edge endpoint out of range: " + std::to_string(u) +
                         "-" + std::to_string(v));
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidInput("duplicate edge");
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adjacency_) d = std::max(d, list.size());
  return d;
}

std::uint64_t BlockFamily::total_count() const {
  std::uint64_t total = 0;
  for (const auto& b : blocks) total += b.multiplicity;
  return total;
}

namespace {

void require_dims(std::size_t g, std::size_t h, std::size_t minimum,
                  const char* what) {
  if (g < minimum || h < minimum)
    throw InvalidInput(std::string(what) + " needs both dimensions >= " +
                       std::to_string(minimum) + ", got " + std::to_string(g) +
                       "x" + std::to_string(h));
}

Vertex rect_index(const TorusDims& d, std::size_t x, std::size_t y) {
  return static_cast<Vertex>((y % d.h) * d.g + (x % d.g));
}

Vertex hex_index(const TorusDims& d, std::size_t x, std::size_t y, int upper) {
  return static_cast<Vertex>(2 * ((y % d.h) * d.g + (x % d.g)) + upper);
}

}  // namespace

Graph make_toroidal_rect(std::size_t g, std::size_t h) {
  require_dims(g, h, 3, "toroidal rect grid");
  TorusDims d{g, h};
  std::vector<Edge> edges;
  edges.reserve(2 * g * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < g; ++x) {
      edges.emplace_back(rect_index(d, x, y), rect_index(d, x + 1, y));
      edges.emplace_back(rect_index(d, x, y), rect_index(d, x, y + 1));
    }
  Graph graph(g * h, std::move(edges));
  graph.set_kind(GraphKind::rect_torus, d);
  return graph;
}

Graph make_toroidal_hex(std::size_t g, std::size_t h) {
  require_dims(g, h, 3, "toroidal hex grid");
  TorusDims d{g, h};
  std::vector<Edge> edges;
  edges.reserve(3 * g * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < g; ++x) {
      Vertex lower = hex_index(d, x, y, 0);
      // diagonal side (x,y)-(x+1,y+1)
      edges.emplace_back(lower, hex_index(d, x, y, 1));
      // horizontal side (x,y)-(x+1,y), shared with the upper triangle below
      edges.emplace_back(lower, hex_index(d, x, y + h - 1, 1));
      // vertical side (x+1,y)-(x+1,y+1)
      edges.emplace_back(lower, hex_index(d, x + 1, y, 1));
    }
  std::vector<std::string> labels;
  labels.reserve(2 * g * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < g; ++x)
      for (const char* t : {"lower", "upper"}) {
        std::ostringstream os;
        os << '(' << x << ',' << y << ',' << t << ')';
        labels.push_back(os.str());
      }
  Graph graph(2 * g * h, std::move(edges), std::move(labels));
  graph.set_kind(GraphKind::hex_torus, d);
  return graph;
}

Graph make_complete(std::size_t n) {
  if (n == 0) throw InvalidInput("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  Graph graph(n, std::move(edges));
  graph.set_kind(GraphKind::complete);
  return graph;
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, std::move(edges));
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Block rect_block(const Graph& graph, std::size_t x, std::size_t y) {
  if (graph.kind() != GraphKind::rect_torus || !graph.torus())
    throw InvalidInput("rect blocks need a toroidal rect graph");
  const auto& d = *graph.torus();
  require_dims(d.g, d.h, 8, "rect block family");
  Block block;
  block.shape = BlockShape::grid;
  block.row_width = 4;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      block.vertices.push_back(rect_index(d, x + c, y + r));
  return block;
}

BlockFamily rect_block_family(const Graph& graph) {
  if (graph.kind() != GraphKind::rect_torus || !graph.torus())
    throw InvalidInput("rect block family needs a toroidal rect graph");
  const auto& d = *graph.torus();
  require_dims(d.g, d.h, 8, "rect block family");
  BlockFamily family;
  for (std::size_t y = 0; y < d.h; ++y)
    for (std::size_t x = 0; x < d.g; ++x)
      family.blocks.push_back(rect_block(graph, x, y));
  return family;
}

Block hex_block(const Graph& graph, std::size_t x, std::size_t y) {
  if (graph.kind() != GraphKind::hex_torus || !graph.torus())
    throw InvalidInput("hex blocks need a toroidal hex graph");
  const auto& d = *graph.torus();
  require_dims(d.g, d.h, 4, "hex block family");
  std::size_t xm = x + d.g - 1, ym = y + d.h - 1;
  Block block;
  block.shape = BlockShape::cycle;
  block.vertices = {hex_index(d, x, y, 0),   hex_index(d, x, y, 1),
                    hex_index(d, xm, y, 0),  hex_index(d, xm, ym, 1),
                    hex_index(d, xm, ym, 0), hex_index(d, x, ym, 1)};
  return block;
}

BlockFamily hex_block_family(const Graph& graph) {
  if (graph.kind() != GraphKind::hex_torus || !graph.torus())
    throw InvalidInput("hex block family needs a toroidal hex graph");
  const auto& d = *graph.torus();
  require_dims(d.g, d.h, 4, "hex block family");
  BlockFamily family;
  for (std::size_t y = 0; y < d.h; ++y)
    for (std::size_t x = 0; x < d.g; ++x)
      family.blocks.push_back(hex_block(graph, x, y));
  return family;
}

BlockFamily singleton_family(const Graph& graph) {
  BlockFamily family;
  for (Vertex v = 0; v < graph.size(); ++v) {
    Block b;
    b.vertices = {v};
    b.shape = BlockShape::path;
    family.blocks.push_back(std::move(b));
  }
  return family;
}

std::vector<Vertex> boundary(const Graph& graph, const Block& block) {
  std::vector<char> inside(graph.size(), 0);
  for (Vertex v : block.vertices) inside.at(v) = 1;
  std::set<Vertex> out;
  for (Vertex v : block.vertices)
    for (Vertex w : graph.neighbors(v))
      if (!inside[w]) out.insert(w);
  return {out.begin(), out.end()};
}

bool covers(const Graph& graph, const BlockFamily& family) {
  std::vector<char> seen(graph.size(), 0);
  for (const auto& b : family.blocks)
    for (Vertex v : b.vertices) seen.at(v) = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<std::uint64_t> membership_counts(const Graph& graph,
                                             const BlockFamily& family) {
  std::vector<std::uint64_t> counts(graph.size(), 0);
  for (const auto& b : family.blocks)
    for (Vertex v : b.vertices) counts.at(v) += b.multiplicity;
  return counts;
}

std::vector<std::uint64_t> boundary_counts(const Graph& graph,
                                           const BlockFamily& family) {
  std::vector<std::uint64_t> counts(graph.size(), 0);
  for (const auto& b : family.blocks)
    for (Vertex v : boundary(graph, b)) counts[v] += b.multiplicity;
  return counts;
}

namespace {

// Induced edges of the block, as pairs of block positions (i < j).
std::vector<std::pair<std::size_t, std::size_t>> induced_positions(
    const Graph& graph, const Block& block) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      if (graph.adjacent(block.vertices[i], block.vertices[j]))
        out.emplace_back(i, j);
  return out;
}

bool is_grid(const std::vector<std::pair<std::size_t, std::size_t>>& induced,
             std::size_t n, std::size_t width) {
  if (width < 2 || n % width != 0 || n / width < 2) return false;
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i % width) + 1 < width) expected.emplace_back(i, i + 1);
    if (i + width < n) expected.emplace_back(i, i + width);
  }
  std::sort(expected.begin(), expected.end());
  return expected == induced;
}

}  // namespace

Block classify_block(const Graph& graph, Block block) {
  if (block.multiplicity == 0) throw InvalidInput("block multiplicity must be >= 1");
  std::set<Vertex> distinct;
  for (Vertex v : block.vertices) {
    if (v >= graph.size())
      throw InvalidInput("block vertex out of range: " + std::to_string(v));
    if (!distinct.insert(v).second)
      throw InvalidInput("block vertex repeated: " + std::to_string(v));
  }
  auto induced = induced_positions(graph, block);
  const std::size_t n = block.size();

  std::vector<std::pair<std::size_t, std::size_t>> path;
  for (std::size_t i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
  if (induced == path) {
    block.shape = BlockShape::path;
    block.row_width = 0;
    return block;
  }
  if (n >= 3) {
    auto cycle = path;
    cycle.emplace_back(0, n - 1);
    std::sort(cycle.begin(), cycle.end());
    if (induced == cycle) {
      block.shape = BlockShape::cycle;
      block.row_width = 0;
      return block;
    }
  }
  if (block.shape == BlockShape::grid && is_grid(induced, n, block.row_width))
    return block;
  for (std::size_t w = 2; w < n; ++w)
    if (is_grid(induced, n, w)) {
      block.shape = BlockShape::grid;
      block.row_width = w;
      return block;
    }
  block.shape = BlockShape::generic;
  block.row_width = 0;
  return block;
}

// ---------------------------------------------------------------------------

void CaseTag::validate() const {
  if (type == CaseType::type1) {
    if (face_degree < 3 || face_degree > 10)
      throw InvalidInput("type-1 face degree must be in 3..10");
  } else if (face_degree != 8) {
    throw InvalidInput("type-2 blocks have 8 vertices");
  }
  if (labels.empty() || labels.size() > 3)
    throw InvalidInput("a case needs 1 to 3 neighbor labels");
  std::set<int> seen;
  for (int l : labels) {
    if (l < 1 || l > block_size())
      throw InvalidInput("case label out of range: " + std::to_string(l));
    if (!seen.insert(l).second) throw InvalidInput("repeated case label");
  }
}

std::string CaseTag::name() const {
  std::ostringstream os;
  if (type == CaseType::type1)
    os << "1_" << face_degree;
  else
    os << '2';
  os << '[';
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << (i ? "," : "") << labels[i];
  os << ']';
  return os.str();
}

CaseTag CaseTag::parse(const std::string& text) {
  CaseTag tag;
  auto open = text.find('[');
  auto close = text.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw InvalidInput("bad case tag: " + text);
  std::string head = text.substr(0, open);
  try {
    if (head.rfind("1_", 0) == 0) {
      tag.type = CaseType::type1;
      tag.face_degree = std::stoi(head.substr(2));
    } else if (head == "2") {
      tag.type = CaseType::type2;
      tag.face_degree = 8;
    } else {
      throw InvalidInput("bad case tag: " + text);
    }
    std::string body = text.substr(open + 1, close - open - 1);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) tag.labels.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw InvalidInput("bad case tag: " + text);
  }
  std::sort(tag.labels.begin(), tag.labels.end());
  tag.validate();
  return tag;
}

CaseGraph make_case_graph(const CaseTag& tag) {
  tag.validate();
  const auto b = static_cast<Vertex>(tag.block_size());
  const bool cyclic = tag.type == CaseType::type1;

  // outside slots per block vertex (3-regular: 3 minus in-block degree)
  std::vector<int> slots(b, 1);
  if (!cyclic) slots.front() = slots.back() = 2;
  for (int l : tag.labels) --slots[l - 1];

  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < b; ++i) edges.emplace_back(i, i + 1);
  if (cyclic) edges.emplace_back(b - 1, 0);
  const Vertex v = b;
  for (int l : tag.labels) edges.emplace_back(static_cast<Vertex>(l - 1), v);
  Vertex next = b + 1;
  for (Vertex i = 0; i < b; ++i)
    for (int s = 0; s < slots[i]; ++s) edges.emplace_back(i, next++);

  std::vector<std::string> labels;
  for (Vertex i = 0; i < b; ++i) labels.push_back(std::to_string(i + 1));
  labels.emplace_back("v");
  for (Vertex w = b + 1; w < next; ++w) labels.push_back("x" + std::to_string(w - b));

  CaseGraph out;
  out.graph = Graph(next, std::move(edges), std::move(labels));
  out.graph.set_kind(GraphKind::case_graph);
  out.block.shape = cyclic ? BlockShape::cycle : BlockShape::path;
  out.block.vertices.resize(b);
  std::iota(out.block.vertices.begin(), out.block.vertices.end(), Vertex{0});
  // face blocks are taken 8 times in the planar family
  out.block.multiplicity = cyclic ? 8 : 1;
  out.external = v;
  return out;
}

}  // namespace kheight
