#include <benchmark/benchmark.h>

#include "nvirrad/transport.hpp"

using namespace nvirrad;

// ARES scenario: 3000 depth steps through 3 mm.
static void BM_Propagate155MeV(benchmark::State& state) {
  const auto m = diamond();
  const BeamSpec beam{.energy_mev = 155.0, .peak_fluence_cm2 = 1.5e18, .fwhm_um = 500.0,
                      .step_um = 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(beam, m, 0.3));
  }
}
BENCHMARK(BM_Propagate155MeV);

// TEM scenario: 100 nm steps until the beam stops (~115 um).
static void BM_Propagate200keV(benchmark::State& state) {
  const auto m = diamond();
  const BeamSpec beam{.energy_mev = 0.2, .step_um = 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(beam, m, 300e-4));
  }
}
BENCHMARK(BM_Propagate200keV);

static void BM_GaussianMap(benchmark::State& state) {
  const auto m = diamond();
  const BeamSpec beam{.energy_mev = 155.0, .peak_fluence_cm2 = 1.5e18, .fwhm_um = 500.0,
                      .step_um = 10.0};
  const auto profile = propagate(beam, m, 0.3);
  const int nx = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_beam_map(profile, beam, m, 1500.0, nx));
  }
}
BENCHMARK(BM_GaussianMap)->Arg(21)->Arg(201);
