#include "kheight/divergence.hpp"
#include "kheight/enumeration.hpp"
#include "kheight/error.hpp"
#include "kheight/io.hpp"

#include <gtest/gtest.h>

using namespace kheight;

namespace {

bool same(const DivergenceReport& a, const DivergenceReport& b) {
  return a.k == b.k && a.case_id == b.case_id && a.omega_B == b.omega_B &&
         a.omega_boundary == b.omega_boundary && a.e_max == b.e_max && a.boundary == b.boundary &&
         a.witness_low == b.witness_low && a.pivot_position == b.pivot_position &&
         a.complete == b.complete;
}

Provenance prov() { return {tool_version(), "kheight test --x \"quoted\"", 42, "00ff"}; }

}  // namespace

TEST(Io, ReportsRoundTrip) {
  std::vector<DivergenceReport> reports{hex_divergence(2), case_divergence(CaseTag::parse("1_6[1,3]"), 3)};
  std::string csv = render_reports_csv(reports, prov());
  EXPECT_NE(csv.find("2,hex,199,729,0.798658,"), std::string::npos);
  auto back = parse_reports_csv(csv);
  ASSERT_EQ(back.reports.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(same(back.reports[i], reports[i]));
  ASSERT_TRUE(back.provenance.has_value());
  EXPECT_EQ(*back.provenance, prov());
}

TEST(Io, CsvUsesPlainIntegers) {
  auto r = rect_divergence(2).best;
  r.omega_boundary = count_rect_extensible(2);
  std::string csv = render_reports_csv({r});
  EXPECT_NE(csv.find(",2825761,"), std::string::npos);
  EXPECT_EQ(csv.find("2.825.761"), std::string::npos);
}

TEST(Io, RejectsMalformedCsv) {
  EXPECT_THROW(parse_reports_csv("a,b\n"), InvalidInput);
  EXPECT_THROW(parse_reports_csv("k,case,omega_B,omega_boundary,e_max,witness\n2,x,1\n"), InvalidInput);
}

TEST(Io, GraphRoundTrip) {
  auto gf = builtin_graph("hex:4x5");
  std::string text = render_graph_json(gf.graph, gf.family);
  auto back = parse_graph_json(text);
  EXPECT_TRUE(back.graph == gf.graph);
  EXPECT_EQ(back.graph.kind(), GraphKind::hex_torus);
  ASSERT_EQ(back.family.blocks.size(), gf.family.blocks.size());
  for (std::size_t i = 0; i < back.family.blocks.size(); ++i) {
    EXPECT_EQ(back.family.blocks[i].vertices, gf.family.blocks[i].vertices);
    EXPECT_EQ(back.family.blocks[i].shape, gf.family.blocks[i].shape);
  }
  EXPECT_EQ(graph_hash(back.graph), graph_hash(gf.graph));
  EXPECT_NE(graph_hash(make_path(4)), graph_hash(make_cycle(4)));
  EXPECT_THROW(parse_graph_json(R"({"n":2,"edges":[[0,0]]})"), InvalidInput);
  EXPECT_THROW(parse_graph_json("{"), InvalidInput);
  EXPECT_THROW(builtin_graph("torus:3"), InvalidInput);
}

TEST(Io, HeightRoundTrip) {
  Graph g = make_path(4);
  KHeight x(g, 3, {0, 1, 2, 3});
  EXPECT_EQ(parse_height_json(render_height_json(x)), x);
  EXPECT_THROW(parse_height_json(R"({"k":2,"values":[0,3]})"), InvalidInput);
}

TEST(Io, HeightStreamRoundTrip) {
  Graph g = make_path(3);
  HeightStream s;
  s.provenance = prov();
  s.index_key = "index";
  s.records = {{0, KHeight(g, 2, {0, 0, 1})}, {1, KHeight(g, 2, {2, 2, 1})}};
  auto back = parse_height_stream(render_height_stream(s));
  EXPECT_EQ(back.index_key, "index");
  EXPECT_EQ(back.records, s.records);
  EXPECT_EQ(*back.provenance, prov());
}

TEST(Io, BoundRoundTrip) {
  auto report = make_bound_report(family_bound(Family::hex, 2), 200, 0.25);
  report.provenance = prov();
  auto back = parse_bound_json(render_bound_json(report));
  EXPECT_EQ(back.bound.input_exact, report.bound.input_exact);
  EXPECT_EQ(back.bound.denominator, report.bound.denominator);
  EXPECT_EQ(*back.bound.c, *report.bound.c);
  EXPECT_EQ(*back.beta, *report.beta);
  EXPECT_EQ(*back.tau, *report.tau);
  EXPECT_EQ(back.bound.notes, report.bound.notes);
  EXPECT_EQ(*back.provenance, prov());
  EXPECT_EQ(*report.beta, 1 - report.bound.denominator / 100);
}

TEST(Io, CouplingTimesRoundTrip) {
  auto s = summarize_times({4, 9, 1});
  auto back = parse_coupling_times_csv(render_coupling_times_csv(s, prov()));
  EXPECT_EQ(back.times, s.times);
  EXPECT_EQ(back.mean, s.mean);
}
