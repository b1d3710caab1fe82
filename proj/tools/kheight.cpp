#include "kheight/bounds.hpp"
#include "kheight/chains.hpp"
#include "kheight/coupling.hpp"
#include "kheight/divergence.hpp"
#include "kheight/error.hpp"
#include "kheight/heatmap.hpp"
#include "kheight/io.hpp"
#include "kheight/tables.hpp"
#include "kheight/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace kheight;

namespace {

enum Exit { kOk = 0, kFailure = 1, kMismatch = 2, kInvalid = 3, kCap = 4 };

std::string g_command_line;

Provenance provenance(std::uint64_t seed, const std::string& hash) {
  return {tool_version(), g_command_line, seed, hash};
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file(out, text);
}

ChainKind parse_chain(const std::string& s) {
  if (s == "updown") return ChainKind::updown;
  if (s == "block") return ChainKind::block;
  throw InvalidInput("chain must be updown or block");
}

KHeight start_state(const std::string& start, const Graph& g, int k) {
  if (start == "bottom") return KHeight::bottom(g, k);
  if (start == "top") return KHeight::top(g, k);
  KHeight x = parse_height_json(read_file(start));
  if (x.k() != k) throw InvalidInput("start height has a different k");
  return KHeight(g, k, x.values());
}

struct Common {
  unsigned threads = 0;
  std::string out;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_command_line += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"k-height Markov chains, block divergence and exact sampling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  Common common;
  app.add_option("--threads", common.threads,
                 "worker threads (0: KHEIGHT_THREADS or hardware concurrency)");

  // tables
  auto* tables = app.add_subcommand("tables", "reproduce a divergence table and compare with the published values");
  std::string table_id;
  int table_k = 2;
  std::vector<std::string> table_cases;
  bool table_full = false;
  tables->add_option("--id", table_id, "rect, hex, type1 or type2")->required();
  tables->add_option("--k", table_k, "height bound k")->required();
  tables->add_option("--case", table_cases, "restrict type1/type2 tables to these cases, e.g. 1_6[1,3]");
  tables->add_flag("--full", table_full, "maximize the rect k=4 row instead of stopping at the published lower bound");
  tables->add_option("--out", common.out, "CSV output path (default stdout)");

  // divergence
  auto* div = app.add_subcommand("divergence", "maximum block divergence of one block");
  std::string div_graph, div_case;
  int div_k = 2;
  std::size_t div_block = 0;
  std::optional<Vertex> div_pivot;
  div->add_option("--graph", div_graph, "builtin spec (rect:GxH, hex:GxH, complete:N, path:N, cycle:N) or graph JSON");
  div->add_option("--case", div_case, "3-regular case id instead of a graph, e.g. 2[1]");
  div->add_option("--block", div_block, "block index within the graph's family");
  div->add_option("--pivot", div_pivot, "only raise this boundary vertex");
  div->add_option("--k", div_k, "height bound k")->required();
  div->add_option("--out", common.out, "CSV output path (default stdout)");

  // bound
  auto* bound = app.add_subcommand("bound", "mixing constants of a block family from fresh divergence data");
  std::string bound_family;
  int bound_k = 2;
  std::optional<std::uint64_t> bound_n;
  std::optional<double> bound_eps;
  bound->add_option("--family", bound_family, "rect, hex, regular2, regular3 or dual4")->required();
  bound->add_option("--k", bound_k, "height bound k")->required();
  bound->add_option("--n", bound_n, "number of vertices (enables beta and tau)");
  bound->add_option("--eps", bound_eps, "total variation target for tau, 0 < eps < 1/2");
  bound->add_option("--out", common.out, "JSON output path (default stdout)");

  // run
  auto* run_cmd = app.add_subcommand("run", "run a chain and emit the trajectory as JSON lines");
  std::string run_chain = "updown", run_graph, run_start = "bottom";
  int run_k = 2;
  std::uint64_t run_steps = 0, run_seed = 0, run_every = 1;
  run_cmd->add_option("--chain", run_chain, "updown or block");
  run_cmd->add_option("--graph", run_graph, "builtin spec or graph JSON")->required();
  run_cmd->add_option("--k", run_k, "height bound k")->required();
  run_cmd->add_option("--steps", run_steps, "number of steps")->required();
  run_cmd->add_option("--seed", run_seed, "random seed")->required();
  run_cmd->add_option("--emit-every", run_every, "emit every M-th state (step 0 included)");
  run_cmd->add_option("--start", run_start, "bottom, top or a height JSON file");
  run_cmd->add_option("--out", common.out, "JSON lines output path (default stdout)");

  // sample
  auto* sample = app.add_subcommand("sample", "exact uniform samples by coupling from the past");
  std::string sample_graph;
  int sample_k = 2;
  std::uint64_t sample_n = 1, sample_seed = 0;
  unsigned sample_epochs = CftpOptions{}.max_epochs;
  sample->add_option("--graph", sample_graph, "builtin spec or graph JSON")->required();
  sample->add_option("--k", sample_k, "height bound k")->required();
  sample->add_option("--n", sample_n, "number of samples");
  sample->add_option("--seed", sample_seed, "random seed")->required();
  sample->add_option("--max-epochs", sample_epochs, "give up after this many doublings");
  sample->add_option("--out", common.out, "JSON lines output path (default stdout)");

  // couple-time
  auto* ct = app.add_subcommand("couple-time", "coalescence times of the coupled chain from bottom and top");
  std::string ct_chain = "updown", ct_graph;
  int ct_k = 2;
  std::uint64_t ct_trials = 10, ct_seed = 0, ct_max = 100000000;
  ct->add_option("--chain", ct_chain, "updown or block");
  ct->add_option("--graph", ct_graph, "builtin spec or graph JSON")->required();
  ct->add_option("--k", ct_k, "height bound k")->required();
  ct->add_option("--trials", ct_trials, "number of coupled runs");
  ct->add_option("--seed", ct_seed, "random seed")->required();
  ct->add_option("--max-steps", ct_max, "give up after this many steps per run");
  ct->add_option("--out", common.out, "CSV output path (default stdout)");

  // heatmap
  auto* heat = app.add_subcommand("heatmap", "render a height as a P6 image (grids) or SVG");
  std::string heat_height, heat_graph;
  int heat_cell = 8;
  heat->add_option("--height", heat_height, "height JSON file")->required();
  heat->add_option("--graph", heat_graph, "builtin spec or graph JSON")->required();
  heat->add_option("--cell", heat_cell, "pixels per cell");
  heat->add_option("--out", common.out, "image path")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "run the property suite and emit a JSON report");
  VerifyOptions vopt;
  ver->add_option("--seed", vopt.seed, "random seed for the sampling checks");
  ver->add_option("--samples", vopt.cftp_samples, "exact samples for the uniformity check");
  ver->add_option("--out", common.out, "JSON output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*tables) {
      TableOptions opt;
      opt.cases = table_cases;
      opt.full_rect = table_full;
      opt.threads = common.threads;
      auto rows = reproduce_table(parse_table_id(table_id), table_k, opt);
      std::vector<DivergenceReport> reports;
      bool ok = true;
      for (const auto& r : rows) {
        reports.push_back(r.report);
        if (!r.matches) {
          ok = false;
          std::cerr << "mismatch " << r.report.case_id << ": " << r.mismatch << "\n";
        }
      }
      emit(common.out, render_reports_csv(reports, provenance(0, "-")));
      return ok ? kOk : kMismatch;
    }
    if (*div) {
      DivergenceOptions opt;
      opt.threads = common.threads;
      DivergenceReport r;
      std::string hash = "-";
      if (!div_case.empty()) {
        r = case_divergence(CaseTag::parse(div_case), div_k, opt);
      } else {
        if (div_graph.empty()) throw InvalidInput("give --graph or --case");
        auto gf = load_graph(div_graph);
        if (div_block >= gf.family.blocks.size()) throw InvalidInput("block index out of range");
        const Block& b = gf.family.blocks[div_block];
        r = div_pivot ? block_divergence(gf.graph, b, *div_pivot, div_k, opt)
                      : max_block_divergence(gf.graph, b, div_k, opt);
        r.case_id = div_graph + "#" + std::to_string(div_block);
        hash = graph_hash(gf.graph);
      }
      emit(common.out, render_reports_csv({r}, provenance(0, hash)));
      return kOk;
    }
    if (*bound) {
      auto fb = family_bound(parse_family(bound_family), bound_k, common.threads);
      auto report = make_bound_report(fb, bound_n, bound_eps);
      report.provenance = provenance(0, "-");
      emit(common.out, render_bound_json(report));
      return kOk;
    }
    if (*run_cmd) {
      if (run_every == 0) throw InvalidInput("--emit-every must be positive");
      auto gf = load_graph(run_graph);
      ChainState st{start_state(run_start, gf.graph, run_k), 0, Rng(run_seed)};
      HeightStream stream;
      stream.provenance = provenance(run_seed, graph_hash(gf.graph));
      std::string text = render_provenance_line(*stream.provenance);
      text += render_height_line("step", {0, st.current});
      auto on_step = [&](const ChainState& s) {
        if (s.step_count % run_every == 0) text += render_height_line("step", {s.step_count, s.current});
      };
      if (parse_chain(run_chain) == ChainKind::updown) {
        run(gf.graph, st, run_steps, on_step);
      } else {
        BlockSampler sampler(gf.graph, gf.family, run_k);
        run(sampler, st, run_steps, on_step);
      }
      emit(common.out, text);
      return kOk;
    }
    if (*sample) {
      auto gf = load_graph(sample_graph);
      CftpOptions opt;
      opt.max_epochs = sample_epochs;
      std::string text = render_provenance_line(provenance(sample_seed, graph_hash(gf.graph)));
      for (std::uint64_t i = 0; i < sample_n; ++i)
        text += render_height_line(
            "index", {i, cftp_sample(gf.graph, sample_k, Rng::derive(sample_seed, i), opt)});
      emit(common.out, text);
      return kOk;
    }
    if (*ct) {
      auto gf = load_graph(ct_graph);
      auto kind = parse_chain(ct_chain);
      auto summary = coupling_time_estimate(gf.graph, ct_k, kind,
                                            kind == ChainKind::block ? &gf.family : nullptr,
                                            ct_trials, ct_seed, ct_max);
      emit(common.out, render_coupling_times_csv(summary, provenance(ct_seed, graph_hash(gf.graph))));
      std::cerr << "mean " << summary.mean << " median " << summary.median << " q10 "
                << summary.q10 << " q90 " << summary.q90 << "\n";
      return kOk;
    }
    if (*heat) {
      auto gf = load_graph(heat_graph);
      KHeight parsed = parse_height_json(read_file(heat_height));
      KHeight x(gf.graph, parsed.k(), parsed.values());
      HeatmapOptions opt;
      opt.cell = heat_cell;
      auto img = render_heatmap(gf.graph, x, opt);
      write_file(common.out, img.data);
      if (img.format == ImageFormat::svg) std::cerr << "not a grid graph; wrote SVG\n";
      return kOk;
    }
    if (*ver) {
      auto report = run_verify(vopt);
      emit(common.out, render_verify_json(report));
      for (const auto& c : report.checks)
        if (!c.passed) std::cerr << "FAILED " << c.id << ": " << c.detail << "\n";
      return report.passed() ? kOk : kFailure;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const EpochCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
