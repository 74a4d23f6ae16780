#include <benchmark/benchmark.h>

#include <random>

#include "slopeforge/constructions.hpp"
#include "slopeforge/geometry.hpp"

using namespace slopeforge;

static void BM_CountSlopesNumeric(benchmark::State& state) {
  const auto c = constructions::draw_complete_ngon(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::count_slopes(c.drawing));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.graph.edge_count()));
}
BENCHMARK(BM_CountSlopesNumeric)->Arg(16)->Arg(64)->Arg(256);

static void BM_CountSlopesExact(benchmark::State& state) {
  const auto c = constructions::draw_one_bend(graph::make_random_graph(state.range(0), 0.2, 8, 1));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::count_slopes(c.drawing));
}
BENCHMARK(BM_CountSlopesExact)->Arg(20)->Arg(80);

static void BM_CountCrossingsExact(benchmark::State& state) {
  const auto g = graph::make_random_graph(state.range(0), 0.2, 6, 3);
  std::mt19937_64 rng(5);
  std::vector<geometry::QPoint> pts;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    pts.push_back({geometry::Rational(static_cast<long>(rng() % 1000)), geometry::Rational(static_cast<long>(i))});
  }
  const auto d = geometry::make_drawing(g, pts);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::count_crossings(g, d));
}
BENCHMARK(BM_CountCrossingsExact)->Arg(20)->Arg(60);

static void BM_ValidateOneBend(benchmark::State& state) {
  const auto c = constructions::draw_one_bend(graph::make_random_graph(state.range(0), 0.2, 8, 2));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::validate_drawing(c.graph, c.drawing).valid);
}
BENCHMARK(BM_ValidateOneBend)->Arg(20)->Arg(40);
