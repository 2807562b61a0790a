// Serial reference vs OpenMP kernels on the data-parallel sweeps.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <vector>

#include "glinfo/materials.hpp"
#include "glinfo/sweep.hpp"

using namespace glinfo;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

// Truncated density: every point needs a quadrature for D.
void BM_TemperatureSweepTruncated(benchmark::State& state) {
  const auto& nb = lookup(builtin_materials(), "Nb");
  const auto temps = linspace(0.0, 0.99 * nb.Tc, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto pts = temperature_sweep(nb.xi0, nb.Tc, temps, DistributionKind::truncated(5.0), {},
                                 mode(state));
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  label(state);
}
BENCHMARK(BM_TemperatureSweepTruncated)
    ->ArgsProduct({{0, 1}, {256, 1024}})
    ->Unit(benchmark::kMillisecond);

void BM_TsallisGrid(benchmark::State& state) {
  const auto& sn = lookup(builtin_materials(), "Sn");
  const auto temps = linspace(0.0, 0.99 * sn.Tc, static_cast<std::size_t>(state.range(1)));
  const auto qs = linspace(0.6, 2.0, 15);
  for (auto _ : state) {
    auto rows = tsallis_grid(sn.xi0, sn.Tc, qs, temps, {}, mode(state));
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1) * 15);
  label(state);
}
BENCHMARK(BM_TsallisGrid)->ArgsProduct({{0, 1}, {128, 512}})->Unit(benchmark::kMillisecond);

void BM_CatalogLiu(benchmark::State& state) {
  for (auto _ : state) {
    auto reports = catalog_liu(builtin_materials(), 1e-10, mode(state));
    benchmark::DoNotOptimize(reports.data());
  }
  label(state);
}
BENCHMARK(BM_CatalogLiu)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
