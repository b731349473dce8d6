#pragma once

// Shared test utilities: independent oracle evaluations of the physics
// formulas (structured differently from the library code on purpose) and a
// deterministic synthetic-data generator.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "nvirrad/material.hpp"
#include "nvirrad/specfit.hpp"

namespace oracle {

inline constexpr long double kMe = 0.51099895000L;      // MeV
inline constexpr long double kRe = 2.8179403262e-13L;   // cm
inline constexpr long double kAmu = 931.49410242L;      // MeV
inline constexpr long double kPi = 3.141592653589793238L;

struct Relativity {
  long double gamma, beta, beta2;
};

inline Relativity rel(long double e_mev) {
  const long double gamma = 1.0L + e_mev / kMe;
  const long double beta2 = 1.0L - 1.0L / (gamma * gamma);
  return {gamma, std::sqrt(beta2), beta2};
}

// Electron Bethe-Bloch with explicit delta/zeta values.
inline double bethe_bloch(double e_mev, const nvirrad::MaterialSpec& m, double delta,
                          double zeta) {
  const auto [gamma, beta, beta2] = rel(e_mev);
  const long double i_mev = m.ionization_ev * 1e-6L;
  const long double gb = gamma * beta;
  const long double arg = (gamma - 1.0L) * (gamma - 1.0L) * (gamma + 1.0L) * kMe * kMe /
                              (2.0L * i_mev * i_mev) +
                          1.0L - beta2 +
                          (gb * gb / 8.0L - (2.0L * gb + 1.0L) * std::log(2.0L)) /
                              ((gb + 1.0L) * (gb + 1.0L)) -
                          (long double)delta - 2.0L * (long double)zeta / (long double)m.z;
  const long double pref =
      2.0L * kPi * (long double)m.atom_density_cm3 * (long double)m.z * kMe * kRe * kRe;
  return (double)(pref / beta2 * std::log(arg));
}

inline double sternheimer_delta(double e_mev, const nvirrad::MaterialSpec& m) {
  const long double plasma = 28.816L * std::sqrt((long double)m.mass_density_gcm3 *
                                                 (long double)m.z / (long double)m.a);
  const long double cbar = 2.0L * std::log((long double)m.ionization_ev / plasma) + 1.0L;
  const long double x1 = m.ionization_ev < 100.0 ? 2.0L : 3.0L;
  long double x0;
  if (m.ionization_ev < 100.0) {
    x0 = cbar < 3.681L ? 0.2L : 0.326L * cbar - 1.0L;
  } else {
    x0 = cbar < 5.215L ? 0.2L : 0.326L * cbar - 1.5L;
  }
  const long double two_ln10 = 2.0L * std::log(10.0L);
  const long double a = (cbar - two_ln10 * x0) / std::pow(x1 - x0, 3.0L);
  const auto [gamma, beta, beta2] = rel(e_mev);
  const long double x = std::log10(gamma * beta);
  if (x < x0) return 0.0;
  if (x < x1) return (double)(two_ln10 * x - cbar + a * std::pow(x1 - x, 3.0L));
  return (double)(two_ln10 * x - cbar);
}

inline double barkas_berger_zeta(double e_mev, const nvirrad::MaterialSpec& m) {
  const auto [gamma, beta, beta2] = rel(e_mev);
  const long double eta = std::max(gamma * beta, 0.13L);
  const long double e2 = 1.0L / (eta * eta), e4 = e2 * e2, e6 = e4 * e2;
  const long double i = m.ionization_ev;
  return (double)((0.422377L * e2 + 0.0304043L * e4 - 0.00038106L * e6) * 1e-6L * i * i +
                  (3.850190L * e2 - 0.1667989L * e4 + 0.00157955L * e6) * 1e-9L * i * i * i);
}

inline double radiation_length(double z, double a) {
  return (double)(716.4L * (long double)a /
                  ((long double)z * ((long double)z + 1.0L) *
                   std::log(287.0L / std::sqrt((long double)z))));
}

inline double e_max_ev(double e_mev, const nvirrad::MaterialSpec& m) {
  return (double)(2.0L * (long double)e_mev * ((long double)e_mev + 2.0L * kMe) /
                  ((long double)m.a * kAmu) * 1e6L);
}

inline double mckinley_feshbach_barn(double e_mev, const nvirrad::MaterialSpec& m) {
  const double emax = e_max_ev(e_mev, m);
  if (emax <= m.displacement_ev) return 0.0;
  const auto [gamma, beta, beta2] = rel(e_mev);
  const long double r = emax / m.displacement_ev;
  const long double za = m.z / 137.0L;
  const long double bracket = (r - 1.0L) + 2.0L * kPi * beta * za * (std::sqrt(r) - 1.0L) -
                              (beta2 + kPi * beta * za) * std::log(r);
  const long double one_minus_beta2 = 1.0L / (gamma * gamma);
  return (double)(0.25L * (long double)(m.z * m.z) * one_minus_beta2 / (beta2 * beta2) * bracket);
}

// Quadratic inversion of the maximal-transfer relation: beam energy [MeV]
// at which E_max equals transfer_ev.
inline double beam_energy_for_transfer(double transfer_ev, const nvirrad::MaterialSpec& m) {
  const long double c = (long double)transfer_ev * 1e-6L * (long double)m.a * kAmu / 2.0L;
  return (double)((-kMe + std::sqrt(kMe * kMe + c)) );
}

}  // namespace oracle

namespace testgen {

// Deterministic Gaussian noise: Box-Muller over the (portable) mt19937 stream.
class GaussianNoise {
 public:
  explicit GaussianNoise(std::uint32_t seed) : rng_(seed) {}

  double operator()() {
    const double u1 = (rng_() + 0.5) * (1.0 / 4294967296.0);
    const double u2 = (rng_() + 0.5) * (1.0 / 4294967296.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
  }

 private:
  std::mt19937 rng_;
};

inline double lorentzian(double x, double center, double fwhm, double amplitude, double offset) {
  const double hw = 0.5 * fwhm;
  return offset + amplitude * hw * hw / ((x - center) * (x - center) + hw * hw);
}

inline double gaussian(double x, double center, double fwhm, double amplitude, double offset) {
  const double ln2x4 = 4.0 * 0.6931471805599453;
  return offset + amplitude * std::exp(-ln2x4 * (x - center) * (x - center) / (fwhm * fwhm));
}

inline nvirrad::Spectrum sampled(double x0, double x1, std::size_t n, nvirrad::SpectrumKind kind,
                                 const auto& f) {
  nvirrad::Spectrum s;
  s.kind = kind;
  s.x.reserve(n);
  s.y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(n - 1);
    s.x.push_back(x);
    s.y.push_back(f(x));
  }
  return s;
}

}  // namespace testgen
