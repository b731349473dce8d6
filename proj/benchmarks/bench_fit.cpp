#include <benchmark/benchmark.h>

#include <cmath>

#include "nvirrad/specfit.hpp"

using namespace nvirrad;

namespace {

Spectrum odmr_dip(int n) {
  Spectrum s;
  s.kind = SpectrumKind::odmr;
  for (int i = 0; i < n; ++i) {
    const double x = 2750.0 + 120.0 * i / (n - 1.0);
    const double hw = 4.5;
    s.x.push_back(x);
    s.y.push_back(1.0 - 0.012 * hw * hw / ((x - 2810.0) * (x - 2810.0) + hw * hw));
  }
  return s;
}

}  // namespace

static void BM_FitLorentzian(benchmark::State& state) {
  const auto s = odmr_dip(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_lorentzian(s));
  }
}
BENCHMARK(BM_FitLorentzian)->Arg(121)->Arg(241)->Arg(1001);

static void BM_FitExponential(benchmark::State& state) {
  Spectrum s;
  s.kind = SpectrumKind::t1;
  for (int i = 0; i < 241; ++i) {
    const double x = 6000.0 * i / 240.0;
    s.x.push_back(x);
    s.y.push_back(1.0 + 0.3 * std::exp(-x / 1200.0));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_exponential(s));
  }
}
BENCHMARK(BM_FitExponential);
