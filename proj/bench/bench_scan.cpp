#include <benchmark/benchmark.h>

#include "oham/residual.hpp"
#include "oham/scan.hpp"

namespace {

oham::SolverConfig config_for(benchmark::State& state) {
  oham::SolverConfig config;
  config.order = static_cast<int>(state.range(1));
  return config;
}

void BM_ScanSerial(benchmark::State& state) {
  const oham::ProblemSpec spec = oham::builtin(static_cast<int>(state.range(0)));
  const oham::SolverConfig config = config_for(state);
  const auto c0s = oham::linspace(-1.95, -0.05, 39);
  for (auto _ : state) benchmark::DoNotOptimize(oham::scan_residuals_serial(spec, config, c0s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c0s.size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const oham::ProblemSpec spec = oham::builtin(static_cast<int>(state.range(0)));
  const oham::SolverConfig config = config_for(state);
  const auto c0s = oham::linspace(-1.95, -0.05, 39);
  for (auto _ : state) benchmark::DoNotOptimize(oham::scan_residuals_parallel(spec, config, c0s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c0s.size()));
  state.counters["threads"] = oham::max_threads();
}

void BM_Optimize(benchmark::State& state) {
  const oham::ProblemSpec spec = oham::builtin(static_cast<int>(state.range(0)));
  oham::SolverConfig config = config_for(state);
  config.parallel_scan = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(oham::optimize_c0(spec, config));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->ArgsProduct({{1, 2, 4}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->ArgsProduct({{1, 2, 4}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Optimize)->ArgsProduct({{2}, {2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
