#include <benchmark/benchmark.h>

#include "tope/basepoint_order.hpp"
#include "tope/catalog.hpp"
#include "tope/cell_complex.hpp"
#include "tope/generators.hpp"
#include "tope/mediangle.hpp"

using namespace tope;

namespace {

Graph subject(int index) {
  switch (index) {
    case 0: return hypercube(4);
    case 1: return coxeter_cayley(CoxeterDiagram::type_a(3), "A3");
    case 2: return coxeter_cayley(CoxeterDiagram::type_b(3), "B3");
    default: return uniform_four_tope_graph();
  }
}

void set_label(benchmark::State& state, const Graph& g) { state.SetLabel(g.name()); }

void BM_RecognizePartialCube(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_partial_cube(g));
  set_label(state, g);
}
BENCHMARK(BM_RecognizePartialCube)->DenseRange(0, 3);

void BM_Mediangle(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_bipartite_mediangle(g));
  set_label(state, g);
}
BENCHMARK(BM_Mediangle)->DenseRange(0, 3);

void BM_Apiculate(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_apiculate(g));
  set_label(state, g);
}
BENCHMARK(BM_Apiculate)->DenseRange(0, 3);

void BM_Cells(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  const ThetaPartition theta = require_partial_cube(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(g, theta));
  set_label(state, g);
}
BENCHMARK(BM_Cells)->DenseRange(0, 3);

void BM_Reconstruct(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  const ThetaPartition theta = require_partial_cube(g);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_system(g, theta));
  set_label(state, g);
}
BENCHMARK(BM_Reconstruct)->DenseRange(0, 3);

void BM_Axioms(benchmark::State& state) {
  const Graph g = subject(static_cast<int>(state.range(0)));
  const SignSystem s = reconstruct_system(g, require_partial_cube(g));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(s));
  set_label(state, g);
}
BENCHMARK(BM_Axioms)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ArrangementCovectors(benchmark::State& state) {
  const ArrangementSpec spec = state.range(0) == 0 ? uniform_four_plane_arrangement() : coordinate_arrangement(4);
  for (auto _ : state) benchmark::DoNotOptimize(central_arrangement_system(spec));
}
BENCHMARK(BM_ArrangementCovectors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
