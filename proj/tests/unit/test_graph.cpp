#include "kheight/error.hpp"
#include "kheight/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace kheight;

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInput);
}

TEST(Graph, RectTorusIsFourRegular) {
  Graph g = make_toroidal_rect(8, 6);
  EXPECT_EQ(g.size(), 48u);
  EXPECT_EQ(g.edges().size(), 96u);
  for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_TRUE(g.adjacent(0, 7));
  EXPECT_TRUE(g.adjacent(0, 40));
}

TEST(Graph, HexTorusIsThreeRegular) {
  Graph g = make_toroidal_hex(4, 5);
  EXPECT_EQ(g.size(), 40u);
  EXPECT_EQ(g.edges().size(), 60u);
  for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(Graph, SmallGenerators) {
  EXPECT_EQ(make_complete(5).edges().size(), 10u);
  EXPECT_EQ(make_path(5).edges().size(), 4u);
  EXPECT_EQ(make_cycle(5).edges().size(), 5u);
}

TEST(Graph, RectBlocksMatchFamilyParameters) {
  Graph g = make_toroidal_rect(8, 8);
  auto fam = rect_block_family(g);
  EXPECT_EQ(fam.total_count(), 64u);
  EXPECT_TRUE(covers(g, fam));
  for (auto m : membership_counts(g, fam)) EXPECT_EQ(m, 16u);
  for (auto s : boundary_counts(g, fam)) EXPECT_EQ(s, 16u);
  const Block& b = fam.blocks.front();
  EXPECT_EQ(b.shape, BlockShape::grid);
  EXPECT_EQ(boundary(g, b).size(), 16u);
}

TEST(Graph, HexBlocksMatchFamilyParameters) {
  Graph g = make_toroidal_hex(4, 4);
  auto fam = hex_block_family(g);
  EXPECT_EQ(fam.total_count(), 16u);
  for (auto m : membership_counts(g, fam)) EXPECT_EQ(m, 3u);
  for (auto s : boundary_counts(g, fam)) EXPECT_EQ(s, 3u);
  Block b = hex_block(g, 1, 1);
  EXPECT_EQ(b.shape, BlockShape::cycle);
  EXPECT_EQ(boundary(g, b).size(), 6u);
}

TEST(Graph, CaseTags) {
  auto t = CaseTag::parse("1_6[1,3]");
  EXPECT_EQ(t.type, CaseType::type1);
  EXPECT_EQ(t.face_degree, 6);
  EXPECT_EQ(t.labels, (std::vector<int>{1, 3}));
  EXPECT_EQ(t.name(), "1_6[1,3]");
  EXPECT_EQ(CaseTag::parse("2[2,5]").name(), "2[2,5]");
  EXPECT_THROW(CaseTag::parse("1_11[1]"), InvalidInput);
  EXPECT_THROW(CaseTag::parse("1_4[5]"), InvalidInput);
  EXPECT_THROW(CaseTag::parse("2[1,2,3,4]"), InvalidInput);
}

TEST(Graph, CaseGraphShape) {
  auto cg = make_case_graph(CaseTag::parse("1_5[1,3]"));
  EXPECT_EQ(cg.block.size(), 5u);
  EXPECT_EQ(cg.external, 5u);
  EXPECT_TRUE(cg.graph.adjacent(5, 0));
  EXPECT_TRUE(cg.graph.adjacent(5, 2));
  // each block vertex has degree 3
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(cg.graph.degree(v), 3u);
  auto c2 = make_case_graph(CaseTag::parse("2[1]"));
  EXPECT_EQ(c2.block.size(), 8u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(c2.graph.degree(v), 3u);
}
