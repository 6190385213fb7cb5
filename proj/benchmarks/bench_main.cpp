#include <benchmark/benchmark.h>

#include "fermat/enumerator.hpp"
#include "fermat/picard.hpp"

using namespace fermat;

static void BM_EnumerateFiber(benchmark::State& state) {
  const auto x = normalize<4>({1, 2, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fiber(x, state.range(0)));
}
BENCHMARK(BM_EnumerateFiber)->Arg(16)->Arg(64);

static void BM_PicardRank(benchmark::State& state) {
  const DiagonalCubic s({1, 2, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(picard_rank(s));
}
BENCHMARK(BM_PicardRank);

static void BM_IsCube(benchmark::State& state) {
  Int v = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_cube(v * 1000003, 7));
    v = v % 1000 + 1;
  }
}
BENCHMARK(BM_IsCube);

static void BM_CountSeries(benchmark::State& state) {
  const std::vector<Int> bounds{state.range(0) / 4, state.range(0) / 2, state.range(0)};
  for (auto _ : state) {
    Classifier classifier;
    benchmark::DoNotOptimize(count_series(bounds, classifier));
  }
}
BENCHMARK(BM_CountSeries)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
