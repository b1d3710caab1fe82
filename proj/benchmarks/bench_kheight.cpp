#include "kheight/coupling.hpp"
#include "kheight/divergence.hpp"
#include "kheight/enumeration.hpp"
#include "kheight/filling_solver.hpp"

#include <benchmark/benchmark.h>

using namespace kheight;

static void BM_TraceCount(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_rect_extensible(k));
}
BENCHMARK(BM_TraceCount)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RectFillingStats(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Graph g = rect_reference_graph();
  Block b = rect_reference_block(g);
  FillingSolver s(g, b, k);
  Values v(s.boundary().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Value>(i % 2);
  for (auto _ : state) benchmark::DoNotOptimize(s.stats64(v));
}
BENCHMARK(BM_RectFillingStats)->Arg(2)->Arg(3)->Arg(4);

static void BM_HexDivergence(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  DivergenceOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hex_divergence(k, opt));
}
BENCHMARK(BM_HexDivergence)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RectDivergenceK2(benchmark::State& state) {
  RectDivergenceOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(rect_divergence(2, opt));
}
BENCHMARK(BM_RectDivergenceK2)->Unit(benchmark::kMillisecond);

static void BM_StrassenHex(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Graph g = make_toroidal_hex(4, 4);
  Block b = hex_block(g, 1, 1);
  FillingSolver s(g, b, k);
  Values v(s.boundary().size(), 0);
  auto pair = raise(BoundaryConstraint{k, s.boundary(), v}, 0);
  auto low = s.fillings(pair.low.values), high = s.fillings(pair.high.values);
  for (auto _ : state) benchmark::DoNotOptimize(strassen_joint(low, high));
}
BENCHMARK(BM_StrassenHex)->Arg(2)->Arg(3);

static void BM_CftpSample(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Graph g = make_toroidal_rect(n, n);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cftp_sample(g, 2, Rng::derive(7, seed++)));
}
BENCHMARK(BM_CftpSample)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
