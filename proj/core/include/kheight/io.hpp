#pragma once

#include "kheight/bounds.hpp"
#include "kheight/coupling.hpp"
#include "kheight/divergence.hpp"
#include "kheight/graph.hpp"
#include "kheight/heights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kheight {

std::string tool_version();

// FNV-1a over the vertex count and the sorted edge list, 16 hex digits.
std::string graph_hash(const Graph& graph);

struct Provenance {
  std::string tool_version;
  std::string command_line;
  std::uint64_t seed = 0;
  std::string graph_hash;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Throws InvalidInput when the file cannot be read.
std::string read_file(const std::string& path);
// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& text);

// ---------------------------------------------------------------------------
// Divergence reports as CSV: k, case, omega_B, omega_boundary, e_max,
// witness. e_max is printed to six decimals; the witness column is a JSON
// object holding the boundary, the low constraint, the pivot position, the
// exact e_max and the completeness flag. Provenance goes into leading '#'
// lines.
std::string render_reports_csv(const std::vector<DivergenceReport>& reports,
                               const std::optional<Provenance>& provenance = std::nullopt);
struct ReportsFile {
  std::vector<DivergenceReport> reports;
  std::optional<Provenance> provenance;
};
ReportsFile parse_reports_csv(const std::string& text);

// ---------------------------------------------------------------------------
// Graph JSON: {"n", "edges": [[u,v],...], "blocks": [{"vertices", "multiplicity"}],
// optional "grid": {"kind": "rect"|"hex", "g", "h"}}.
struct GraphFile {
  Graph graph;
  BlockFamily family;
};
std::string render_graph_json(const Graph& graph, const BlockFamily& family = {});
// Blocks are classified on load; an absent "grid" gives a generic graph.
GraphFile parse_graph_json(const std::string& text);

// Built-in graphs by name: rect:GxH, hex:GxH, complete:N, path:N, cycle:N.
// Grid graphs come with their standard block family, the others with
// singletons.
GraphFile builtin_graph(const std::string& spec);
// A builtin spec or else a path to a graph JSON file.
GraphFile load_graph(const std::string& spec_or_path);

// Height JSON: {"k", "values"}. Only range checks; validity needs the graph.
std::string render_height_json(const KHeight& x);
KHeight parse_height_json(const std::string& text);

// ---------------------------------------------------------------------------
// JSON lines. The first line is {"provenance": {...}}; every other line is
// {"step" or "index": i, "k": k, "values": [...]}.
struct HeightRecord {
  std::uint64_t index = 0;
  KHeight height;

  friend bool operator==(const HeightRecord&, const HeightRecord&) = default;
};
struct HeightStream {
  std::optional<Provenance> provenance;
  std::string index_key = "step";
  std::vector<HeightRecord> records;
};
std::string render_height_stream(const HeightStream& stream);
HeightStream parse_height_stream(const std::string& text);
std::string render_provenance_line(const Provenance& p);
std::string render_height_line(const std::string& index_key, const HeightRecord& r);

// ---------------------------------------------------------------------------
// Bound report: {"family", "k", "params", "input_exact", "input",
// "denominator_exact", "denominator", "beta", "beta_exact", "c", "c_exact",
// "c_value", "tau", "certificate", "notes"}. Rationals are written as
// "p/q" strings next to decimals.
struct BoundReport {
  FamilyBound bound;
  std::optional<std::uint64_t> n;
  std::optional<double> eps;
  std::optional<Rational> beta_exact;
  std::optional<Rational> beta;
  std::optional<double> tau;
  std::optional<Provenance> provenance;
};
// Block count of a family on n vertices (rect n, hex n/2); nullopt for
// the 3-regular families, whose count depends on the faces.
std::optional<std::uint64_t> family_size(Family family, std::uint64_t n);
BoundReport make_bound_report(const FamilyBound& bound, std::optional<std::uint64_t> n,
                              std::optional<double> eps);
std::string render_bound_json(const BoundReport& report);
BoundReport parse_bound_json(const std::string& text);

// ---------------------------------------------------------------------------
// Coalescence times as CSV: trial, steps.
std::string render_coupling_times_csv(const CouplingTimeSummary& summary,
                                      const std::optional<Provenance>& provenance = std::nullopt);
CouplingTimeSummary parse_coupling_times_csv(const std::string& text);

}  // namespace kheight
