#pragma once

#include "nvirrad/material.hpp"

namespace nvirrad {

// Empirically calibrated vacancy -> NV- conversion yield.
inline constexpr double kDefaultNvYield = 1.7e-3;

struct NVPrediction {
  double vacancy_ppm;
  double nv_minus_ppm;
  double nitrogen_ppm;
  bool budget_limited;  // the nitrogen cap [N]/2 binds
};

// NV- concentration predicted from a vacancy concentration:
//   nv = min(yield * vacancy, nitrogen/2)
// Each NV- consumes one nitrogen as host and one as electron donor, capping
// the ensemble at half the substitutional nitrogen content.
NVPrediction predict_nv(double vacancy_ppm, double nitrogen_ppm, double yield = kDefaultNvYield);

// Fluence at which the near-surface vacancy concentration reaches half the
// nitrogen concentration (inverts the linear fluence scaling).
// step_um = 0 selects the default transport step for the energy.
double half_nitrogen_fluence(double energy_mev, const MaterialSpec& m, double nitrogen_ppm,
                             double step_um = 0.0);

}  // namespace nvirrad
