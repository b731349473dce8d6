#include <benchmark/benchmark.h>

#include "nvirrad/displacement.hpp"
#include "nvirrad/stopping.hpp"

using namespace nvirrad;

static void BM_TotalStopping(benchmark::State& state) {
  const auto m = diamond();
  const double e = static_cast<double>(state.range(0)) / 1000.0;  // keV -> MeV
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_stopping(e, m));
  }
}
BENCHMARK(BM_TotalStopping)->Arg(200)->Arg(1000)->Arg(155000);

static void BM_TotalStoppingUncorrected(benchmark::State& state) {
  const auto m = diamond();
  const Corrections bare{.density = false, .shell = false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_stopping(155.0, m, bare));
  }
}
BENCHMARK(BM_TotalStoppingUncorrected);

static void BM_VacancyRate(benchmark::State& state) {
  const auto m = diamond();
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_vacancy_rate(155.0, m, 1e-4));
  }
}
BENCHMARK(BM_VacancyRate);

BENCHMARK_MAIN();
