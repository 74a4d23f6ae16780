#include <benchmark/benchmark.h>

#include "slopeforge/bounds.hpp"
#include "slopeforge/ordering.hpp"
#include "slopeforge/tree.hpp"

using namespace slopeforge;

static void BM_BandwidthExact(benchmark::State& state) {
  const auto g = graph::make_random_graph(state.range(0), 0.25, 4, 9);
  for (auto _ : state) benchmark::DoNotOptimize(graph::bandwidth_exact(g).width());
}
BENCHMARK(BM_BandwidthExact)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

static void BM_BandwidthHeuristic(benchmark::State& state) {
  const auto g = graph::make_random_graph(state.range(0), 0.05, 5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(graph::bandwidth_heuristic(g).width());
}
BENCHMARK(BM_BandwidthHeuristic)->Arg(100)->Arg(1000);

static void BM_TreePathwidth(benchmark::State& state) {
  const auto t = graph::make_complete_binary_tree(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graph::tree_pathwidth(t));
}
BENCHMARK(BM_TreePathwidth)->DenseRange(5, 9, 2);

static void BM_LogCountSlopeable(benchmark::State& state) {
  const auto method = state.range(0) ? bounds::BinomialMethod::exact : bounds::BinomialMethod::log_gamma;
  for (auto _ : state) benchmark::DoNotOptimize(bounds::log_count_slopeable(50, 200, 10, 50.0, method));
}
BENCHMARK(BM_LogCountSlopeable)->Arg(0)->Arg(1);

static void BM_CountingScan(benchmark::State& state) {
  const auto ns = bounds::decade_grid(3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(bounds::counting_scan(5, 1.0, 50.0, ns));
}
BENCHMARK(BM_CountingScan);
