#include <benchmark/benchmark.h>

#include "hyperell/chipfiring.hpp"
#include "hyperell/engine.hpp"
#include "hyperell/hgr.hpp"
#include "hyperell/testkit.hpp"
#include "hyperell/treewidth.hpp"

using namespace hyperell;

namespace {

Multigraph sp_graph(std::size_t n) {
  SeriesParallelShape shape;
  shape.target_edges = 2 * n;
  return gen_series_parallel(12345, n, shape);
}

void BM_Engine(benchmark::State& state, Flavor f) {
  const Multigraph g = sp_graph(static_cast<std::size_t>(state.range(0)));
  EngineOptions opt;
  opt.keep_trace = false;
  for (auto _ : state) benchmark::DoNotOptimize(run(g, f, opt));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Treewidth(benchmark::State& state) {
  const Multigraph g = sp_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tw_at_most_2(g));
  state.SetComplexityN(state.range(0));
}

void BM_ParseHgr(benchmark::State& state) {
  const std::string text = print_hgr(sp_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse_hgr(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}

void BM_DgonOracle(benchmark::State& state) {
  const auto corpus = small_corpus(7, 64, static_cast<std::size_t>(state.range(0)), 2 * state.range(0));
  for (auto _ : state) {
    for (const auto& g : corpus) benchmark::DoNotOptimize(dgon_at_most_2(g));
  }
}

void BM_BoundedRefinement(benchmark::State& state) {
  const auto corpus = small_corpus(8, 32, 6, 8);
  for (auto _ : state) {
    for (const auto& g : corpus) benchmark::DoNotOptimize(sdgon_leq2_bounded(g, 2));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Engine, dgon, Flavor::Dgon)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();
BENCHMARK_CAPTURE(BM_Engine, sgon, Flavor::Sgon)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();
BENCHMARK_CAPTURE(BM_Engine, sdgon, Flavor::Sdgon)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();
BENCHMARK(BM_Treewidth)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();
BENCHMARK(BM_ParseHgr)->Arg(1 << 16);
BENCHMARK(BM_DgonOracle)->DenseRange(6, 12, 3);
BENCHMARK(BM_BoundedRefinement);
BENCHMARK_MAIN();
