#include "tpss/angular_algebra.hpp"
#include "tpss/angular_dist.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SmallDConstruct(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tpss::SmallD(j, 2, 1));
}
BENCHMARK(BM_SmallDConstruct)->Arg(2)->Arg(8)->Arg(20)->Arg(30);

void BM_SmallDEvaluate(benchmark::State& state) {
  const tpss::SmallD d(static_cast<int>(state.range(0)), 2, 1);
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d(theta));
    theta = theta < 3.0 ? theta + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_SmallDEvaluate)->Arg(2)->Arg(8)->Arg(20)->Arg(30);

void BM_ThreeJExact(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tpss::wigner_3j_exact(j, j, 2 * j - 2, 2, 2, -4));
}
BENCHMARK(BM_ThreeJExact)->Arg(4)->Arg(8)->Arg(16);

void BM_DistributionDirect(benchmark::State& state) {
  const tpss::DirectDistribution w(static_cast<int>(state.range(0)), 1, tpss::HelicityClass::two);
  for (auto _ : state) benchmark::DoNotOptimize(w(1.2));
}
BENCHMARK(BM_DistributionDirect)->Arg(2)->Arg(8);

void BM_DistributionSeries(benchmark::State& state) {
  const tpss::SeriesDistribution w(static_cast<int>(state.range(0)), 1, tpss::HelicityClass::two);
  for (auto _ : state) benchmark::DoNotOptimize(w(1.2));
}
BENCHMARK(BM_DistributionSeries)->Arg(2)->Arg(8);

}  // namespace
