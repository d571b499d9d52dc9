#include <benchmark/benchmark.h>

#include <numbers>

#include "wzeta/entanglement.hpp"
#include "wzeta/presets.hpp"
#include "wzeta/state.hpp"
#include "wzeta/sweep.hpp"

namespace {

using namespace wzeta;

void BM_FactorTriple(benchmark::State& state) {
  ModelParams p;
  p.chain_length = static_cast<int>(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_triple(t, p));
    t += 1e-3;
  }
  state.SetItemsProcessed(state.iterations() * p.mode_count());
}
BENCHMARK(BM_FactorTriple)->Arg(51)->Arg(501)->Arg(5001);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const StatePrep prep{50.0, std::numbers::pi / 2, std::numbers::pi / 2};
  const Matrix8 pt = partial_transpose(evolved_density(prep, 1.0, ModelParams{}), Subsystem::A);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(pt));
}
BENCHMARK(BM_HermitianEigenvalues);

void BM_Negativities(benchmark::State& state) {
  const StatePrep prep{5.0, 0.3, 0.9};
  const DensityMatrix rho = evolved_density(prep, 0.7, ModelParams{});
  for (auto _ : state) benchmark::DoNotOptimize(negativities(rho));
}
BENCHMARK(BM_Negativities);

void BM_PresetSweep(benchmark::State& state) {
  RunConfig config = figure_preset("fig1");
  config.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.row_count()));
}
BENCHMARK(BM_PresetSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
