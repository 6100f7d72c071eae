// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "gsr/cycles.hpp"
#include "gsr/harness.hpp"
#include "gsr/oracle.hpp"

namespace {

gsr::Exec exec_of(const benchmark::State &state) { return state.range(0) ? gsr::Exec::parallel : gsr::Exec::serial; }

void BM_Girth(benchmark::State &state) {
  const gsr::DirectedGraph g = gsr::gen_ring_chord_graph(2000, 7);
  for (auto _ : state) benchmark::DoNotOptimize(gsr::girth(g, exec_of(state)));
}
BENCHMARK(BM_Girth)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NullspaceOracle(benchmark::State &state) {
  const gsr::Matrix A = gsr::incidence_matrix(gsr::gen_ring_chord_graph(9, 4)).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(gsr::oracle_nullspace_constant(A, 3, exec_of(state)));
}
BENCHMARK(BM_NullspaceOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExtremePoints(benchmark::State &state) {
  const gsr::Matrix A = gsr::incidence_matrix(gsr::gen_ring_chord_graph(8, 3)).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(gsr::oracle_extreme_point_sparsity(A, exec_of(state)));
}
BENCHMARK(BM_ExtremePoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State &state) {
  gsr::SweepConfig cfg;
  cfg.graph.generator = "ring_chord";
  cfg.graph.nodes = 20;
  cfg.sparsity = {4, 8};
  cfg.trials = 40;
  for (auto _ : state) benchmark::DoNotOptimize(gsr::run_sweep(cfg, exec_of(state)));
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
