#include <benchmark/benchmark.h>

#include "bosent/fock_oracle.hpp"
#include "bosent/oscillator_pair.hpp"

using namespace bosent;

static void BM_EvaluatePair(benchmark::State& state) {
  const Temperature t(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_pair(2.0, t));
}
BENCHMARK(BM_EvaluatePair);

static void BM_NormalForm(benchmark::State& state) {
  const Temperature t(1.0);
  const auto sys = build_pair(PairParams::from_omega(3.0, t));
  const auto m = pair_covariance(sys.rows, sys.spectrum, t);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(m));
}
BENCHMARK(BM_NormalForm);

static void BM_ThresholdTemperature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(threshold_temperature(4.0, 1e-10));
}
BENCHMARK(BM_ThresholdTemperature);

static void BM_FockOracle(benchmark::State& state) {
  const Temperature t(1.0);
  const auto sys = build_pair(PairParams::from_omega(2.0, t));
  const FockCutoff cutoff(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_pair_covariance(sys.rows, sys.spectrum, t, cutoff));
}
BENCHMARK(BM_FockOracle)->Arg(20)->Arg(60)->Unit(benchmark::kMicrosecond);

static void BM_Sweep(benchmark::State& state) {
  const auto ws = linspace(1.0, 5.0, 100);
  const auto ts = linspace(0.0, 2.0, 100);
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(ws, ts, jobs));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
