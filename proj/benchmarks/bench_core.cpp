#include <benchmark/benchmark.h>

#include "zenolse/analytic.hpp"
#include "zenolse/fft.hpp"
#include "zenolse/solver.hpp"
#include "zenolse/spectrum.hpp"
#include "zenolse/zeno.hpp"

namespace {

using namespace zenolse;

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Fft fft(n);
  std::vector<std::complex<double>> in(n, {1.0, 0.5}), out(n);
  for (auto _ : state) {
    fft.forward(in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fft)->Arg(1024)->Arg(2048)->Arg(4096);

void BM_SsfmStep(benchmark::State& state) {
  const auto grid = make_grid(static_cast<std::size_t>(state.range(0)), -20.0, 20.0);
  SsfmSolver solver(grid);
  SsfmParams params;
  params.splitting = state.range(1) == 0 ? Splitting::Lie : Splitting::Strang;
  auto field = sample_on_grid(Peregrine{}, grid, -1.0);
  for (auto _ : state) {
    field = solver.ssfm_step(field, params);
    benchmark::DoNotOptimize(field.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SsfmStep)->Args({2048, 0})->Args({2048, 1})->Args({4096, 0});

void BM_Project(benchmark::State& state) {
  const auto grid = make_grid(2048, -20.0, 20.0);
  const auto field = sample_on_grid(Peregrine{}, grid, 0.0);
  const Window window{-7.5, 7.5};
  for (auto _ : state) {
    auto result = project(field, window, ProjectionMode::Normalized);
    benchmark::DoNotOptimize(result.field.values.data());
  }
}
BENCHMARK(BM_Project);

void BM_PowerSpectrum(benchmark::State& state) {
  const auto grid = make_grid(2048, -20.0, 20.0);
  const auto field = sample_on_grid(Peregrine{}, grid, 0.0);
  for (auto _ : state) {
    auto frame = power_spectrum(field);
    benchmark::DoNotOptimize(frame.magnitude_db.data());
  }
}
BENCHMARK(BM_PowerSpectrum);

}  // namespace

BENCHMARK_MAIN();
