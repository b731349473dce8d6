#include "nvirrad/displacement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nvirrad/constants.hpp"
#include "nvirrad/kinematics.hpp"

namespace nvirrad {

double max_transfer_ev(double e_mev, const MaterialSpec& m) {
  if (e_mev < 0.0) {
    throw std::domain_error("max_transfer_ev: energy must be >= 0");
  }
  const double e_max_mev = 2.0 * e_mev * (e_mev + 2.0 * kElectronRestMeV) / m.nucleus_rest_mev();
  return e_max_mev * 1e6;
}

double displacement_cross_section_barn(double e_mev, const MaterialSpec& m) {
  const double e_max = max_transfer_ev(e_mev, m);
  if (e_max <= m.displacement_ev) return 0.0;

  const Kinematics k = kinematics(e_mev);
  const double beta = k.beta;
  const double beta2 = beta * beta;
  const double one_minus_beta2 = 1.0 / (k.gamma * k.gamma);  // stable form of 1 - beta^2
  const double ratio = e_max / m.displacement_ev;
  const double z_alpha = m.z / kInverseFineStructure;

  const double bracket = ratio - 1.0 +
                         2.0 * std::numbers::pi * beta * z_alpha * (std::sqrt(ratio) - 1.0) -
                         (beta2 + std::numbers::pi * beta * z_alpha) * std::log(ratio);
  const double sigma = 0.25 * m.z * m.z * one_minus_beta2 / (beta2 * beta2) * bracket;
  return std::max(sigma, 0.0);
}

double primary_vacancy_rate(double e_mev, const MaterialSpec& m, double step_cm) {
  if (!(step_cm > 0.0)) {
    throw std::domain_error("primary_vacancy_rate: step must be > 0");
  }
  const double sigma_cm2 = displacement_cross_section_barn(e_mev, m) * kBarnCm2;
  return -std::expm1(-m.atom_density_cm3 * sigma_cm2 * step_cm) / step_cm;
}

VacancyRates total_vacancy_rate(double e_mev, const MaterialSpec& m, double step_cm) {
  VacancyRates r{};
  r.e_max_ev = max_transfer_ev(e_mev, m);
  r.cross_section_barn = displacement_cross_section_barn(e_mev, m);
  if (r.cross_section_barn <= 0.0) return r;

  r.primary_per_cm = primary_vacancy_rate(e_mev, m, step_cm);
  double multiplier = 1.0;
  if (r.e_max_ev > 2.0 * m.displacement_ev) {
    multiplier = 1.0 + 0.5 * std::log(r.e_max_ev / (2.0 * m.displacement_ev));
  }
  r.total_per_cm = r.primary_per_cm * multiplier;
  return r;
}

double displacement_threshold_kev(const MaterialSpec& m) {
  double lo = 1e-3;  // MeV
  double hi = 10.0;
  // E_max is strictly increasing in E; 0.01 keV target width.
  while (hi - lo > 1e-5) {
    const double mid = 0.5 * (lo + hi);
    if (max_transfer_ev(mid, m) < m.displacement_ev) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi) * 1e3;
}

}  // namespace nvirrad
