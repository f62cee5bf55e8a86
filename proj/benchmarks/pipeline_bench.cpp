#include <benchmark/benchmark.h>

#include "flowsynth/cfa.hpp"
#include "flowsynth/dfa.hpp"
#include "flowsynth/parser.hpp"
#include "flowsynth/transform.hpp"
#include "program_gen.hpp"

using namespace flowsynth;

namespace {

std::string unit_of(benchmark::State& state) {
  return testing::generate_unit(42, static_cast<int>(state.range(0)));
}

void BM_Parse(benchmark::State& state) {
  const std::string source = unit_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(parse_source(source));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Transform(benchmark::State& state) {
  const SourceTree tree = parse_source(unit_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(java_to_flowgraph(tree));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ControlFlow(benchmark::State& state) {
  const FlowGraph base = java_to_flowgraph(parse_source(unit_of(state))).graph;
  for (auto _ : state) {
    state.PauseTiming();
    FlowGraph graph = base;
    state.ResumeTiming();
    synthesize_cf_edges(graph);
    benchmark::DoNotOptimize(graph);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DataFlow(benchmark::State& state) {
  FlowGraph base = java_to_flowgraph(parse_source(unit_of(state))).graph;
  synthesize_cf_edges(base);
  for (auto _ : state) {
    state.PauseTiming();
    FlowGraph graph = base;
    state.ResumeTiming();
    synthesize_df_edges(graph);
    benchmark::DoNotOptimize(graph);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DataFlowOracle(benchmark::State& state) {
  FlowGraph graph = java_to_flowgraph(parse_source(unit_of(state))).graph;
  synthesize_cf_edges(graph);
  for (auto _ : state) benchmark::DoNotOptimize(df_oracle(graph));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Parse)->RangeMultiplier(4)->Range(1, 256);
BENCHMARK(BM_Transform)->RangeMultiplier(4)->Range(1, 256);
BENCHMARK(BM_ControlFlow)->RangeMultiplier(4)->Range(1, 256);
BENCHMARK(BM_DataFlow)->RangeMultiplier(4)->Range(1, 256);
BENCHMARK(BM_DataFlowOracle)->RangeMultiplier(4)->Range(1, 64);
BENCHMARK_MAIN();
