#include "tpss/correlations.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_DensityMatrix(benchmark::State& state) {
  const auto s = tpss::make_state(4, 1, tpss::Parity::plus, tpss::Variant::b);
  for (auto _ : state) benchmark::DoNotOptimize(tpss::density_matrix(s, 0.8));
}
BENCHMARK(BM_DensityMatrix);

void BM_Coincidence(benchmark::State& state) {
  const auto rho = tpss::density_matrix(tpss::make_state(3, 1, tpss::Parity::plus), 0.8);
  const auto a = tpss::linear_analyzer(0.2, tpss::Propagation::forward);
  const auto b = tpss::linear_analyzer(0.9, tpss::Propagation::backward);
  for (auto _ : state) benchmark::DoNotOptimize(tpss::coincidence(rho, a, b));
}
BENCHMARK(BM_Coincidence);

}  // namespace
