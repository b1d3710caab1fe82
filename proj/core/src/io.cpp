#include "kheight/io.hpp"

#include "kheight/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifndef KHEIGHT_VERSION
#define KHEIGHT_VERSION "0.0.0"
#endif

namespace kheight {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad field ") + key + ": " + e.what());
  }
}

json provenance_json(const Provenance& p) {
  return {{"tool_version", p.tool_version},
          {"command_line", p.command_line},
          {"seed", p.seed},
          {"graph_hash", p.graph_hash}};
}

Provenance provenance_from(const json& j) {
  return {get<std::string>(j, "tool_version"), get<std::string>(j, "command_line"),
          get<std::uint64_t>(j, "seed"), get<std::string>(j, "graph_hash")};
}

Rational rational_from(const json& j, const char* key) {
  return parse_rational(get<std::string>(j, key));
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw InvalidInput("unterminated quote in CSV line");
  return out;
}

// Provenance as "# key: value" lines.
std::string provenance_comment(const Provenance& p) {
  return "# tool_version: " + p.tool_version + "\n# command_line: " + p.command_line +
         "\n# seed: " + std::to_string(p.seed) + "\n# graph_hash: " + p.graph_hash + "\n";
}

struct CsvBody {
  std::optional<Provenance> provenance;
  std::vector<std::vector<std::string>> rows;  // without the header
};

CsvBody read_csv(const std::string& text, const std::string& expected_header) {
  CsvBody out;
  std::istringstream in(text);
  std::string line;
  Provenance p;
  int seen = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      std::string key = line.substr(2, colon - 2), value = line.substr(colon + 2);
      if (key == "tool_version") p.tool_version = value, ++seen;
      else if (key == "command_line") p.command_line = value, ++seen;
      else if (key == "seed") p.seed = std::stoull(value), ++seen;
      else if (key == "graph_hash") p.graph_hash = value, ++seen;
      continue;
    }
    if (!header) {
      if (line != expected_header) throw InvalidInput("unexpected CSV header: " + line);
      header = true;
      continue;
    }
    out.rows.push_back(csv_split(line));
  }
  if (!header) throw InvalidInput("CSV header missing");
  if (seen == 4) out.provenance = p;
  return out;
}

const char* kReportHeader = "k,case,omega_B,omega_boundary,e_max,witness";
const char* kTimesHeader = "trial,steps";

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string tool_version() { return KHEIGHT_VERSION; }

std::string graph_hash(const Graph& graph) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  feed(graph.size());
  for (auto [u, v] : graph.edges()) {
    feed(u);
    feed(v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string render_reports_csv(const std::vector<DivergenceReport>& reports,
                               const std::optional<Provenance>& provenance) {
  std::string out;
  if (provenance) out += provenance_comment(*provenance);
  out += kReportHeader;
  out += '\n';
  for (const auto& r : reports) {
    json w = {{"boundary", r.boundary},
              {"low", std::vector<int>(r.witness_low.begin(), r.witness_low.end())},
              {"pivot_position", r.pivot_position},
              {"e_max_exact", to_string(r.e_max)},
              {"complete", r.complete}};
    out += std::to_string(r.k) + "," + csv_quote(r.case_id) + "," + to_string(r.omega_B) + "," +
           to_string(r.omega_boundary) + "," + to_fixed(r.e_max, 6) + "," + csv_quote(w.dump()) +
           "\n";
  }
  return out;
}

ReportsFile parse_reports_csv(const std::string& text) {
  auto body = read_csv(text, kReportHeader);
  ReportsFile out;
  out.provenance = body.provenance;
  for (const auto& f : body.rows) {
    if (f.size() != 6) throw InvalidInput("report row needs 6 fields");
    DivergenceReport r;
    r.k = std::stoi(f[0]);
    r.case_id = f[1];
    r.omega_B = BigInt(f[2], 10);
    r.omega_boundary = BigInt(f[3], 10);
    json w = parse_json(f[5]);
    r.e_max = rational_from(w, "e_max_exact");
    if (to_fixed(r.e_max, 6) != f[4]) throw InvalidInput("e_max column disagrees with witness");
    r.boundary = get<std::vector<Vertex>>(w, "boundary");
    for (int v : get<std::vector<int>>(w, "low")) r.witness_low.push_back(static_cast<Value>(v));
    r.pivot_position = get<std::size_t>(w, "pivot_position");
    r.complete = get<bool>(w, "complete");
    out.reports.push_back(std::move(r));
  }
  return out;
}

std::string render_graph_json(const Graph& graph, const BlockFamily& family) {
  json edges = json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  json blocks = json::array();
  for (const auto& b : family.blocks)
    blocks.push_back({{"vertices", b.vertices}, {"multiplicity", b.multiplicity}});
  json j = {{"n", graph.size()}, {"edges", edges}, {"blocks", blocks}};
  if (graph.torus() && (graph.kind() == GraphKind::rect_torus ||
                        graph.kind() == GraphKind::hex_torus))
    j["grid"] = {{"kind", graph.kind() == GraphKind::rect_torus ? "rect" : "hex"},
                 {"g", graph.torus()->g},
                 {"h", graph.torus()->h}};
  return j.dump() + "\n";
}

GraphFile parse_graph_json(const std::string& text) {
  json j = parse_json(text);
  auto n = get<std::size_t>(j, "n");
  std::vector<Edge> edges;
  for (const auto& e : get<std::vector<std::vector<long long>>>(j, "edges")) {
    if (e.size() != 2 || e[0] < 0 || e[1] < 0) throw InvalidInput("edge must be [u, v]");
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  GraphFile out;
  out.graph = Graph(n, std::move(edges));
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    auto kind = get<std::string>(g, "kind");
    TorusDims d{get<std::size_t>(g, "g"), get<std::size_t>(g, "h")};
    Graph expected = kind == "rect"  ? make_toroidal_rect(d.g, d.h)
                     : kind == "hex" ? make_toroidal_hex(d.g, d.h)
                                     : throw InvalidInput("unknown grid kind: " + kind);
    if (!(expected == out.graph)) throw InvalidInput("edges do not match the declared grid");
    out.graph = std::move(expected);
  }
  if (j.contains("blocks")) {
    for (const auto& b : j.at("blocks")) {
      Block block;
      block.vertices = get<std::vector<Vertex>>(b, "vertices");
      block.multiplicity = b.contains("multiplicity") ? get<std::uint32_t>(b, "multiplicity") : 1;
      if (block.multiplicity == 0) throw InvalidInput("block multiplicity must be positive");
      out.family.blocks.push_back(classify_block(out.graph, std::move(block)));
    }
  }
  return out;
}

GraphFile builtin_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidInput("not a builtin graph: " + spec);
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad size in graph spec: " + spec);
    return std::stoull(s);
  };
  GraphFile out;
  if (kind == "rect" || kind == "hex") {
    auto x = arg.find('x');
    if (x == std::string::npos) throw InvalidInput("grid spec needs GxH: " + spec);
    std::size_t g = number(arg.substr(0, x)), h = number(arg.substr(x + 1));
    if (kind == "rect") {
      out.graph = make_toroidal_rect(g, h);
      out.family = g >= 8 && h >= 8 ? rect_block_family(out.graph) : singleton_family(out.graph);
    } else {
      out.graph = make_toroidal_hex(g, h);
      out.family = g >= 4 && h >= 4 ? hex_block_family(out.graph) : singleton_family(out.graph);
    }
    return out;
  }
  std::size_t n = number(arg);
  if (kind == "complete") out.graph = make_complete(n);
  else if (kind == "path") out.graph = make_path(n);
  else if (kind == "cycle") out.graph = make_cycle(n);
  else throw InvalidInput("unknown graph kind: " + kind);
  out.family = singleton_family(out.graph);
  return out;
}

GraphFile load_graph(const std::string& spec_or_path) {
  for (const char* prefix : {"rect:", "hex:", "complete:", "path:", "cycle:"})
    if (spec_or_path.rfind(prefix, 0) == 0) return builtin_graph(spec_or_path);
  GraphFile out = parse_graph_json(read_file(spec_or_path));
  if (out.family.blocks.empty()) out.family = singleton_family(out.graph);
  return out;
}

std::string render_height_json(const KHeight& x) {
  json j = {{"k", x.k()}, {"values", std::vector<int>(x.values().begin(), x.values().end())}};
  return j.dump() + "\n";
}

namespace {

KHeight height_from(const json& j) {
  int k = get<int>(j, "k");
  if (k < 0 || k > 255) throw InvalidInput("k out of range");
  Values values;
  for (int v : get<std::vector<int>>(j, "values")) {
    if (v < 0 || v > k) throw InvalidInput("height value outside 0..k");
    values.push_back(static_cast<Value>(v));
  }
  return KHeight::unchecked(k, std::move(values));
}

}  // namespace

KHeight parse_height_json(const std::string& text) { return height_from(parse_json(text)); }

std::string render_provenance_line(const Provenance& p) {
  return json{{"provenance", provenance_json(p)}}.dump() + "\n";
}

std::string render_height_line(const std::string& index_key, const HeightRecord& r) {
  json j;
  j[index_key] = r.index;
  j["k"] = r.height.k();
  j["values"] = std::vector<int>(r.height.values().begin(), r.height.values().end());
  return j.dump() + "\n";
}

std::string render_height_stream(const HeightStream& stream) {
  std::string out;
  if (stream.provenance) out += render_provenance_line(*stream.provenance);
  for (const auto& r : stream.records) out += render_height_line(stream.index_key, r);
  return out;
}

HeightStream parse_height_stream(const std::string& text) {
  HeightStream out;
  std::istringstream in(text);
  std::string line;
  bool keyed = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = parse_json(line);
    if (j.contains("provenance")) {
      out.provenance = provenance_from(j.at("provenance"));
      continue;
    }
    if (!keyed) {
      out.index_key = j.contains("index") ? "index" : "step";
      keyed = true;
    }
    out.records.push_back({get<std::uint64_t>(j, out.index_key.c_str()), height_from(j)});
  }
  return out;
}

std::optional<std::uint64_t> family_size(Family family, std::uint64_t n) {
  switch (family) {
    case Family::rect: return n;
    case Family::hex:
      if (n % 2) throw InvalidInput("a hex torus has an even number of vertices");
      return n / 2;
    default: return std::nullopt;
  }
}

BoundReport make_bound_report(const FamilyBound& bound, std::optional<std::uint64_t> n,
                              std::optional<double> eps) {
  BoundReport r;
  r.bound = bound;
  r.n = n;
  r.eps = eps;
  if (n) {
    if (auto size = family_size(bound.family, *n); size && *size > 0) {
      Rational s(static_cast<unsigned long>(*size));
      r.beta = 1 - bound.denominator / s;
      r.beta_exact = 1 - bound.denominator_exact / s;
      r.beta->canonicalize();
      r.beta_exact->canonicalize();
    }
    if (eps && bound.c) r.tau = tau_bound(to_double(*bound.c), *n, bound.k, *eps);
  }
  return r;
}

std::string render_bound_json(const BoundReport& r) {
  const auto& b = r.bound;
  auto rat = [](const std::optional<Rational>& x) -> json {
    return x ? json(to_string(*x)) : json(nullptr);
  };
  json j = {
      {"family", to_string(b.family)},
      {"k", b.k},
      {"params", {{"b", b.params.b}, {"m", b.params.m}, {"m_min", b.params.m_min}, {"s", b.params.s}}},
      {"input_exact", to_string(b.input_exact)},
      {"input", to_string(b.input)},
      {"input_decimal", to_fixed(b.input, 6)},
      {"denominator_exact", to_string(b.denominator_exact)},
      {"denominator", to_string(b.denominator)},
      {"n", r.n ? json(*r.n) : json(nullptr)},
      {"eps", r.eps ? json(*r.eps) : json(nullptr)},
      {"beta", rat(r.beta)},
      {"beta_exact", rat(r.beta_exact)},
      {"c", b.c ? json(format_constant(*b.c)) : json(nullptr)},
      {"c_rational", rat(b.c)},
      {"c_exact", rat(b.c_exact)},
      {"tau", r.tau ? json(format_double(*r.tau)) : json(nullptr)},
      {"certificate", b.certificate},
      {"notes", b.notes}};
  if (r.provenance) j["provenance"] = provenance_json(*r.provenance);
  return j.dump(2) + "\n";
}

BoundReport parse_bound_json(const std::string& text) {
  json j = parse_json(text);
  BoundReport r;
  auto& b = r.bound;
  b.family = parse_family(get<std::string>(j, "family"));
  b.k = get<int>(j, "k");
  const auto& p = j.at("params");
  b.params = {get<std::uint64_t>(p, "b"), get<std::uint64_t>(p, "m"),
              get<std::uint64_t>(p, "m_min"), get<std::uint64_t>(p, "s")};
  b.input_exact = rational_from(j, "input_exact");
  b.input = rational_from(j, "input");
  b.denominator_exact = rational_from(j, "denominator_exact");
  b.denominator = rational_from(j, "denominator");
  auto opt_rat = [&](const char* key) -> std::optional<Rational> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return rational_from(j, key);
  };
  r.beta = opt_rat("beta");
  r.beta_exact = opt_rat("beta_exact");
  b.c = opt_rat("c_rational");
  b.c_exact = opt_rat("c_exact");
  if (!j.at("n").is_null()) r.n = get<std::uint64_t>(j, "n");
  if (!j.at("eps").is_null()) r.eps = get<double>(j, "eps");
  if (!j.at("tau").is_null()) r.tau = std::stod(get<std::string>(j, "tau"));
  b.certificate = get<bool>(j, "certificate");
  b.notes = get<std::vector<std::string>>(j, "notes");
  if (j.contains("provenance")) r.provenance = provenance_from(j.at("provenance"));
  return r;
}

std::string render_coupling_times_csv(const CouplingTimeSummary& summary,
                                      const std::optional<Provenance>& provenance) {
  std::string out;
  if (provenance) out += provenance_comment(*provenance);
  out += kTimesHeader;
  out += '\n';
  for (std::size_t i = 0; i < summary.times.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(summary.times[i]) + "\n";
  return out;
}

CouplingTimeSummary parse_coupling_times_csv(const std::string& text) {
  auto body = read_csv(text, kTimesHeader);
  std::vector<std::uint64_t> times;
  for (const auto& f : body.rows) {
    if (f.size() != 2 || std::stoull(f[0]) != times.size())
      throw InvalidInput("coupling time rows must be trial,steps in order");
    times.push_back(std::stoull(f[1]));
  }
  return summarize_times(std::move(times));
}

}  // namespace kheight
