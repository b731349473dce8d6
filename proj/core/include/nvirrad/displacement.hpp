#pragma once

#include "nvirrad/material.hpp"

namespace nvirrad {

// Vacancy production by knock-on collisions at one beam energy.
struct VacancyRates {
  double primary_per_cm;     // n, primary vacancy-interstitial pairs / (cm * electron)
  double total_per_cm;       // N, stable pairs including the cascade contribution
  double cross_section_barn; // displacement cross-section sigma_d
  double e_max_ev;           // maximal energy transferable to the nucleus
};

// Maximal kinematic energy transfer to the target nucleus [eV],
//   E_max = 2E(E + 2*m0c^2)/(M*c^2)
double max_transfer_ev(double e_mev, const MaterialSpec& m);

// Displacement cross-section [barn] in the McKinley-Feshbach approximation of
// the Mott electron-nucleus cross-section, integrated over transfers between
// E_d and E_max. Zero when E_max <= E_d.
double displacement_cross_section_barn(double e_mev, const MaterialSpec& m);

// Primary vacancy pairs per cm of path per electron over a depth step of
// step_cm: n = (1 - exp(-rho*sigma_d*step))/step. Throws on step_cm <= 0.
double primary_vacancy_rate(double e_mev, const MaterialSpec& m, double step_cm);

// Primary and cascade-multiplied rates. The cascade factor
// 1 + 0.5*ln(E_max/(2*E_d)) applies above E_max = 2*E_d and is clamped to 1
// below it (a cascade cannot remove the primary pair).
VacancyRates total_vacancy_rate(double e_mev, const MaterialSpec& m, double step_cm);

// Beam energy [keV] at which E_max equals the displacement threshold;
// bisection to 0.01 keV.
double displacement_threshold_kev(const MaterialSpec& m);

}  // namespace nvirrad
