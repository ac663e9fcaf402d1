#include <benchmark/benchmark.h>

#include "sepcover/dp_naive.hpp"
#include "sepcover/interval.hpp"
#include "sepcover/solver.hpp"

using namespace sepcover;

namespace {

CoverageInstance instance_for(int n) { return generate(n, n, 42); }

void BM_SolveFast(benchmark::State& state) {
  const CoverageInstance inst = instance_for(static_cast<int>(state.range(0)));
  SolverConfig cfg;
  for (auto _ : state) {
    Solution sol = solve_fast(inst, cfg);
    benchmark::DoNotOptimize(sol.delta);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveFast)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_SolveNaive(benchmark::State& state) {
  const CoverageInstance inst = instance_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Solution sol = solve_naive(inst);
    benchmark::DoNotOptimize(sol.delta);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveNaive)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_SolveInterval(benchmark::State& state) {
  const CoverageInstance inst = instance_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Solution sol = solve_interval(inst);
    benchmark::DoNotOptimize(sol.delta);
  }
}
BENCHMARK(BM_SolveInterval)->RangeMultiplier(4)->Range(256, 4096);

// The r sweep: wall time is U-shaped with the interior minimum near sqrt(m).
void BM_RSweep(benchmark::State& state) {
  const CoverageInstance inst = instance_for(4096);
  SolverConfig cfg;
  cfg.r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Solution sol = solve_fast(inst, cfg);
    benchmark::DoNotOptimize(sol.delta);
  }
}
BENCHMARK(BM_RSweep)->Arg(4)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
