#include "tpss/philox.hpp"
#include "tpss/sampler.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_PhiloxUniform(benchmark::State& state) {
  tpss::Philox4x32 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_PhiloxUniform);

void BM_SampleDirection(benchmark::State& state) {
  const tpss::DirectionSampler sampler(tpss::make_state(3, 1, tpss::Parity::plus));
  tpss::Philox4x32 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_SampleDirection);

void BM_RunCoincidence(benchmark::State& state) {
  tpss::RunConfig cfg;
  cfg.state = tpss::make_state(2, 1, tpss::Parity::plus, tpss::Variant::b);
  cfg.n_events = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 3;
  cfg.first = tpss::linear_analyzer(0.0, tpss::Propagation::forward);
  cfg.second = tpss::linear_analyzer(0.5, tpss::Propagation::backward);
  for (auto _ : state) benchmark::DoNotOptimize(tpss::run_coincidence(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunCoincidence)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
