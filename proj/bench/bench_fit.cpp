// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "ntarp/feature_map.hpp"
#include "ntarp/synthetic.hpp"
#include "ntarp/tarp.hpp"

namespace {

const ntarp::Dataset& mixture() {
  static const auto data = ntarp::sample(ntarp::schedule(20)[10], 200, 1);
  return data;
}

void BM_FitSerial(benchmark::State& state) {
  const ntarp::FitOptions opts{1, static_cast<std::size_t>(state.range(0)), 7};
  for (auto _ : state) benchmark::DoNotOptimize(ntarp::fit_serial(mixture(), opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FitParallel(benchmark::State& state) {
  const ntarp::FitOptions opts{1, static_cast<std::size_t>(state.range(0)), 7};
  for (auto _ : state) benchmark::DoNotOptimize(ntarp::fit(mixture(), opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExpandSerial(benchmark::State& state) {
  const ntarp::PolyFeatureMap map(65, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ntarp::expand_rows_serial(map, mixture()));
}

void BM_ExpandParallel(benchmark::State& state) {
  const ntarp::PolyFeatureMap map(65, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ntarp::expand_rows(map, mixture()));
}

}  // namespace

BENCHMARK(BM_FitSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandSerial)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpandParallel)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
