#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nvirrad/levmar.hpp"

namespace nvirrad {

enum class SpectrumKind { pl, odmr, t1, profile };

// A measured series: wavelength [nm] vs counts (PL), microwave frequency
// [MHz] vs photodiode signal (ODMR), pulse delay [us] vs readout PL (T1), or
// transverse position [um] vs concentration (PROFILE).
struct Spectrum {
  std::vector<double> x;
  std::vector<double> y;
  SpectrumKind kind = SpectrumKind::pl;
};

// Abscissa strictly increasing and at least 8 points; throws std::domain_error.
void validate_spectrum(const Spectrum& s);

// Default ZPL analysis windows [nm].
inline constexpr double kNvMinusZplNm = 638.0;
inline constexpr double kNvZeroZplNm = 575.0;
inline constexpr double kZplHalfWindowNm = 5.0;

struct ZplArea {
  double area;       // input y units * nm
  bool clamped;      // negative raw area clamped to zero
};

// Peak area over [lo, hi] after subtracting a straight baseline through the
// mean of 3 points at each window edge. Throws std::out_of_range when the
// window is not inside the spectrum.
ZplArea zpl_area(const Spectrum& s, double window_lo, double window_hi);

// Debye-Waller decomposition parameters for the NV charge-state ratio.
struct DebyeWallerParams {
  double s_minus = 4.3;
  double s_zero = 3.3;
  double k532 = 2.5;  // relative PL rate of the two charge states at 532 nm
};

struct ChargeState {
  double area_minus;
  double area_zero;
  double xi;  // [NV-]/[NV_total] in [0, 1]
};

// xi = A- e^{S-} / (k532 A0 e^{S0} + A- e^{S-}); both areas zero is an error.
ChargeState charge_ratio(double area_minus, double area_zero, DebyeWallerParams dw = {});

// Reference ZPL area of an independently calibrated sample measured with the
// same acquisition settings.
struct Calibration {
  double area_ref;
  double ppm_ref;
};

double nv_concentration(double area_minus, const Calibration& cal);

// Peak-fit result shared by the Lorentzian and Gaussian models.
struct PeakFit {
  double center;
  double fwhm;
  double amplitude;  // signed: negative for a dip
  double offset;
  double contrast;   // |amplitude|/offset, the ODMR dip depth
  double residual_rms;
  std::array<double, 4> stderrs;  // center, fwhm, amplitude, offset
  int iterations;
  bool converged;
};

using PeakGuess = std::array<double, 4>;  // center, fwhm, amplitude, offset

// Least-squares fit of offset + amplitude*(fwhm/2)^2/((x-center)^2+(fwhm/2)^2).
// Initial parameters default to data heuristics (extremum location, half
// width at half extremum, median offset).
PeakFit fit_lorentzian(const Spectrum& s, std::optional<PeakGuess> initial = std::nullopt);

// Least-squares fit of offset + amplitude*exp(-4 ln2 (x-center)^2/fwhm^2).
PeakFit fit_gaussian(const Spectrum& s, std::optional<PeakGuess> initial = std::nullopt);

struct DecayFit {
  double t1;         // decay constant in abscissa units
  double amplitude;
  double offset;
  double residual_rms;
  std::array<double, 3> stderrs;  // t1, amplitude, offset
  int iterations;
  bool converged;
};

// Least-squares fit of offset + amplitude*exp(-t/t1). A constant signal is
// degenerate and raises fit_error rather than returning an unbounded t1.
DecayFit fit_exponential(const Spectrum& s);

// eta_eff = fwhm / (contrast * sqrt(pd_volts)), a setup-independent figure
// proportional to the shot-noise sensitivity. Units follow the fit abscissa.
double effective_sensitivity(const PeakFit& f, double pd_volts);

// Shot-noise magnetic sensitivity [T/sqrt(Hz)] of a Lorentzian ODMR dip:
//   eta = 4/(3*sqrt(3)) * (fwhm/2.80 MHz/G) / (contrast * sqrt(rate))
// The fit fwhm must be in MHz; the 2.80 MHz/G line maps it to field units.
double shot_noise_sensitivity(const PeakFit& f, double photon_rate_hz);

}  // namespace nvirrad
