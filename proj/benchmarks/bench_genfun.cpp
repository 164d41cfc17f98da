#include <benchmark/benchmark.h>

#include "slitpath/charpoly.hpp"
#include "slitpath/enumerate.hpp"
#include "slitpath/genfun.hpp"
#include "slitpath/transition_matrix.hpp"

namespace {

using namespace slitpath;

const Weights kWeights(1, 3, 2);

void BM_Denominator(benchmark::State& state) {
  const SlitSpec spec(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(denominator(spec, kWeights));
}
BENCHMARK(BM_Denominator)->Arg(9)->Arg(30)->Arg(60);

void BM_Genfun(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SlitSpec spec(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(genfun(spec, kWeights, m + 15));
}
BENCHMARK(BM_Genfun)->Arg(9)->Arg(30)->Arg(60);

void BM_InteriorCharpoly(benchmark::State& state) {
  const SlitSpec spec(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracles::interior_charpoly(spec, kWeights));
}
BENCHMARK(BM_InteriorCharpoly)->Arg(9)->Arg(30);

void BM_MatrixSeries(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SlitSpec spec(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracles::matrix_series(spec, kWeights, m + 15));
}
BENCHMARK(BM_MatrixSeries)->Arg(9)->Arg(12);

void BM_Enumerate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SlitSpec spec(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracles::enumerate_paths(spec, kWeights, m + 15));
}
BENCHMARK(BM_Enumerate)->Arg(9)->Arg(12);

} // namespace

BENCHMARK_MAIN();
