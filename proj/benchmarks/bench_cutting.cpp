#include <benchmark/benchmark.h>

#include <cmath>

#include "sepcover/cutting.hpp"
#include "sepcover/instance.hpp"
#include "sepcover/solver.hpp"

using namespace sepcover;

namespace {

void BM_CuttingBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CoverageInstance inst = generate(n, n, 7);
  const auto curves = detail::dual_inputs_coverage(inst).curves;
  const int r = static_cast<int>(std::ceil(std::sqrt(double(n))));
  for (auto _ : state) {
    HierCutting cut = HierCutting::build(
        curves, r, 4, 11, HierCutting::Domain::lower_halfplane);
    benchmark::DoNotOptimize(cut.num_cells());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CuttingBuild)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Locate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CoverageInstance inst = generate(n, n, 7);
  const auto in = detail::dual_inputs_coverage(inst);
  const int r = static_cast<int>(std::ceil(std::sqrt(double(n))));
  const HierCutting cut = HierCutting::build(
      in.curves, r, 4, 11, HierCutting::Domain::lower_halfplane);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cut.locate(in.dual_points[i]));
    i = (i + 1) % in.dual_points.size();
  }
}
BENCHMARK(BM_Locate)->Arg(1024)->Arg(16384);

}  // namespace
