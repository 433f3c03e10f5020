#include <benchmark/benchmark.h>

#include "urm/bipartite_permutation.hpp"
#include "urm/instances.hpp"
#include "urm/interval_nest.hpp"
#include "urm/interval_urm.hpp"
#include "urm/proper_interval.hpp"

namespace {

void BM_SolveProper(benchmark::State& state) {
  const auto n = static_cast<urm::Vertex>(state.range(0));
  const auto rep = urm::gen_unit_intervals(n, 1, 25 * static_cast<urm::Coord>(n));
  const auto g = urm::intersection_graph(rep);
  const auto ord = urm::ordering_from_proper_rep(rep);
  for (auto _ : state) benchmark::DoNotOptimize(urm::solve_proper(g, ord));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveProper)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_SolveBipPerm(benchmark::State& state) {
  const auto p = static_cast<urm::Vertex>(state.range(0));
  const auto inst = urm::gen_bipperm(p, p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(urm::solve_bipperm(inst.graph, inst.order, true));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveBipPerm)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_MaxSis(benchmark::State& state) {
  const auto n = static_cast<urm::Vertex>(state.range(0));
  const auto rep = urm::gen_nest(n, 1, 4 * static_cast<urm::Coord>(n));
  for (auto _ : state) benchmark::DoNotOptimize(urm::max_sis(rep));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxSis)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_SolveIntervalUrm(benchmark::State& state) {
  const auto n = static_cast<urm::Vertex>(state.range(0));
  const auto rep = urm::gen_intervals(n, 1, 10 * static_cast<urm::Coord>(n), 20);
  for (auto _ : state) benchmark::DoNotOptimize(urm::solve_interval_urm(rep));
  state.counters["edges"] = static_cast<double>(urm::intersection_graph(rep).edge_count());
}
BENCHMARK(BM_SolveIntervalUrm)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
