#include "nvirrad/specfit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nvirrad/constants.hpp"
#include "nvirrad/errors.hpp"

namespace nvirrad {

namespace {

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double hi = v[mid];
  if (v.size() % 2 == 0) {
    std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
    return 0.5 * (v[mid - 1] + hi);
  }
  return hi;
}

// Heuristic start: extremum abscissa, half width at half extremum, median offset.
PeakGuess peak_guess(const Spectrum& s) {
  const double offset = median(s.y);
  std::size_t ext = 0;
  for (std::size_t i = 1; i < s.y.size(); ++i) {
    if (std::abs(s.y[i] - offset) > std::abs(s.y[ext] - offset)) ext = i;
  }
  const double amplitude = s.y[ext] - offset;
  const double half = 0.5 * std::abs(amplitude);

  double left = s.x.front();
  for (std::size_t i = ext; i-- > 0;) {
    if (std::abs(s.y[i] - offset) < half) {
      left = s.x[i];
      break;
    }
  }
  double right = s.x.back();
  for (std::size_t i = ext + 1; i < s.y.size(); ++i) {
    if (std::abs(s.y[i] - offset) < half) {
      right = s.x[i];
      break;
    }
  }
  double fwhm = right - left;
  if (!(fwhm > 0.0)) fwhm = 0.25 * (s.x.back() - s.x.front());
  return {s.x[ext], fwhm, amplitude, offset};
}

PeakFit run_peak_fit(const Spectrum& s, const CurveModel& model, PeakGuess initial) {
  LmFit fit = lm_fit(model, s.x, s.y, {initial.begin(), initial.end()});
  PeakFit out{};
  out.center = fit.params[0];
  out.fwhm = std::abs(fit.params[1]);  // model is even in fwhm
  out.amplitude = fit.params[2];
  out.offset = fit.params[3];
  out.contrast = out.offset > 0.0 ? std::abs(out.amplitude) / out.offset : 0.0;
  out.residual_rms = fit.residual_rms;
  std::copy(fit.stderrs.begin(), fit.stderrs.end(), out.stderrs.begin());
  out.iterations = fit.iterations;
  out.converged = fit.converged;
  if (!(out.fwhm > 0.0)) {
    throw fit_error("peak fit collapsed to zero width", fit.residual_rms);
  }
  return out;
}

}  // namespace

void validate_spectrum(const Spectrum& s) {
  if (s.x.size() != s.y.size()) {
    throw std::domain_error("spectrum: abscissa/value length mismatch");
  }
  if (s.x.size() < 8) {
    throw std::domain_error("spectrum: at least 8 points required");
  }
  for (std::size_t i = 1; i < s.x.size(); ++i) {
    if (!(s.x[i] > s.x[i - 1])) {
      throw std::domain_error("spectrum: abscissa must be strictly increasing");
    }
  }
}

ZplArea zpl_area(const Spectrum& s, double window_lo, double window_hi) {
  validate_spectrum(s);
  if (!(window_lo < window_hi)) {
    throw std::out_of_range("zpl_area: empty window");
  }
  if (window_lo < s.x.front() || window_hi > s.x.back()) {
    throw std::out_of_range("zpl_area: window outside the spectrum range");
  }
  const auto first = std::lower_bound(s.x.begin(), s.x.end(), window_lo) - s.x.begin();
  const auto last = std::upper_bound(s.x.begin(), s.x.end(), window_hi) - s.x.begin() - 1;
  if (last - first + 1 < 6) {
    throw std::domain_error("zpl_area: fewer than 6 samples inside the window");
  }

  // Baseline through the mean of 3 points at each window edge.
  double xl = 0.0, yl = 0.0, xr = 0.0, yr = 0.0;
  for (int k = 0; k < 3; ++k) {
    xl += s.x[first + k] / 3.0;
    yl += s.y[first + k] / 3.0;
    xr += s.x[last - k] / 3.0;
    yr += s.y[last - k] / 3.0;
  }
  const double slope = (yr - yl) / (xr - xl);

  double area = 0.0;
  for (auto i = first; i < last; ++i) {
    const double f0 = s.y[i] - (yl + slope * (s.x[i] - xl));
    const double f1 = s.y[i + 1] - (yl + slope * (s.x[i + 1] - xl));
    area += 0.5 * (f0 + f1) * (s.x[i + 1] - s.x[i]);
  }
  if (area < 0.0) return {0.0, true};
  return {area, false};
}

ChargeState charge_ratio(double area_minus, double area_zero, DebyeWallerParams dw) {
  if (area_minus < 0.0 || area_zero < 0.0) {
    throw std::domain_error("charge_ratio: areas must be >= 0");
  }
  if (area_minus == 0.0 && area_zero == 0.0) {
    throw std::domain_error("charge_ratio: both ZPL areas are zero, ratio undefined");
  }
  const double weighted_minus = area_minus * std::exp(dw.s_minus);
  const double weighted_zero = dw.k532 * area_zero * std::exp(dw.s_zero);
  return {area_minus, area_zero, weighted_minus / (weighted_zero + weighted_minus)};
}

double nv_concentration(double area_minus, const Calibration& cal) {
  if (!(cal.area_ref > 0.0) || !(cal.ppm_ref > 0.0)) {
    throw config_error("nv_concentration: calibration requires area_ref > 0 and ppm_ref > 0");
  }
  if (area_minus < 0.0) {
    throw std::domain_error("nv_concentration: area must be >= 0");
  }
  return cal.ppm_ref * area_minus / cal.area_ref;
}

PeakFit fit_lorentzian(const Spectrum& s, std::optional<PeakGuess> initial) {
  validate_spectrum(s);
  const auto model = [](double x, std::span<const double> p) {
    const double hw = 0.5 * p[1];
    const double dx = x - p[0];
    return p[3] + p[2] * hw * hw / (dx * dx + hw * hw);
  };
  return run_peak_fit(s, model, initial.value_or(peak_guess(s)));
}

PeakFit fit_gaussian(const Spectrum& s, std::optional<PeakGuess> initial) {
  validate_spectrum(s);
  const auto model = [](double x, std::span<const double> p) {
    const double dx = x - p[0];
    return p[3] + p[2] * std::exp(-4.0 * std::numbers::ln2 * dx * dx / (p[1] * p[1]));
  };
  return run_peak_fit(s, model, initial.value_or(peak_guess(s)));
}

DecayFit fit_exponential(const Spectrum& s) {
  validate_spectrum(s);
  const auto [lo, hi] = std::minmax_element(s.y.begin(), s.y.end());
  if (*hi - *lo <= 1e-12 * std::max(std::abs(*hi), 1.0)) {
    throw fit_error("fit_exponential: constant signal, decay time unconstrained", 0.0);
  }

  const double offset0 = s.y.back();
  const double amplitude0 = s.y.front() - offset0;
  double t1_0 = (s.x.back() - s.x.front()) / 3.0;
  for (std::size_t i = 0; i < s.y.size(); ++i) {
    if (std::abs(s.y[i] - offset0) <= std::abs(amplitude0) / std::numbers::e) {
      t1_0 = std::max(s.x[i] - s.x.front(), 1e-12);
      break;
    }
  }

  const auto model = [](double x, std::span<const double> p) {
    return p[2] + p[1] * std::exp(-x / p[0]);
  };
  LmFit fit = lm_fit(model, s.x, s.y, {t1_0, amplitude0, offset0});
  if (!(fit.params[0] > 0.0)) {
    throw fit_error("fit_exponential: converged to a nonpositive decay time", fit.residual_rms);
  }
  DecayFit out{};
  out.t1 = fit.params[0];
  out.amplitude = fit.params[1];
  out.offset = fit.params[2];
  out.residual_rms = fit.residual_rms;
  std::copy(fit.stderrs.begin(), fit.stderrs.end(), out.stderrs.begin());
  out.iterations = fit.iterations;
  out.converged = fit.converged;
  return out;
}

double effective_sensitivity(const PeakFit& f, double pd_volts) {
  if (!(f.contrast > 0.0)) {
    throw std::domain_error("effective_sensitivity: contrast must be > 0");
  }
  if (!(pd_volts > 0.0)) {
    throw std::domain_error("effective_sensitivity: photodiode level must be > 0");
  }
  return f.fwhm / (f.contrast * std::sqrt(pd_volts));
}

double shot_noise_sensitivity(const PeakFit& f, double photon_rate_hz) {
  if (!(f.contrast > 0.0)) {
    throw std::domain_error("shot_noise_sensitivity: contrast must be > 0");
  }
  if (!(photon_rate_hz > 0.0)) {
    throw std::domain_error("shot_noise_sensitivity: photon rate must be > 0");
  }
  constexpr double lineshape = 4.0 / (3.0 * std::numbers::sqrt3);
  const double fwhm_gauss = f.fwhm / kNvGyromagneticMHzPerG;  // fwhm in MHz
  return lineshape * fwhm_gauss * kGaussToTesla / (f.contrast * std::sqrt(photon_rate_hz));
}

}  // namespace nvirrad
