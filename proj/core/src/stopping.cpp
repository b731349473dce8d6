#include "nvirrad/stopping.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nvirrad/constants.hpp"
#include "nvirrad/kinematics.hpp"

namespace nvirrad {

namespace {

constexpr double kTwoLnTen = 2.0 * std::numbers::ln10;

void check_domain(double e_mev, const char* where) {
  if (e_mev < kStoppingMinMeV || e_mev > kStoppingMaxMeV) {
    throw std::domain_error(std::string(where) + ": energy " + std::to_string(e_mev) +
                            " MeV outside supported domain [" +
                            std::to_string(kStoppingMinMeV) + ", " +
                            std::to_string(kStoppingMaxMeV) + "] MeV");
  }
}

}  // namespace

SternheimerCoefficients sternheimer_coefficients(const MaterialSpec& m) {
  // Plasma energy [eV] for the actual mass density of the target.
  const double plasma_ev = 28.816 * std::sqrt(m.mass_density_gcm3 * m.z / m.a);
  const double cbar = 2.0 * std::log(m.ionization_ev / plasma_ev) + 1.0;
  SternheimerCoefficients c{};
  c.cbar = cbar;
  c.m = 3.0;
  if (m.ionization_ev < 100.0) {
    c.x1 = 2.0;
    c.x0 = (cbar < 3.681) ? 0.2 : 0.326 * cbar - 1.0;
  } else {
    c.x1 = 3.0;
    c.x0 = (cbar < 5.215) ? 0.2 : 0.326 * cbar - 1.5;
  }
  // Continuity: delta(x0) = 0.
  c.a = (cbar - kTwoLnTen * c.x0) / std::pow(c.x1 - c.x0, c.m);
  return c;
}

double density_correction(double e_mev, const MaterialSpec& m) {
  if (e_mev < 0.0) {
    throw std::domain_error("density_correction: energy must be >= 0");
  }
  if (e_mev == 0.0) return 0.0;
  const Kinematics k = kinematics(e_mev);
  const double eta = k.gamma * k.beta;
  const double x = std::log10(eta);
  const SternheimerCoefficients c = sternheimer_coefficients(m);
  if (x < c.x0) return 0.0;
  if (x < c.x1) return kTwoLnTen * x - c.cbar + c.a * std::pow(c.x1 - x, c.m);
  return kTwoLnTen * x - c.cbar;
}

double shell_correction(double e_mev, const MaterialSpec& m) {
  if (e_mev < 0.0) {
    throw std::domain_error("shell_correction: energy must be >= 0");
  }
  const Kinematics k = kinematics(e_mev);
  // Barkas-Berger fit, stated validity eta >= 0.13.
  const double eta = std::max(k.gamma * k.beta, 0.13);
  const double inv2 = 1.0 / (eta * eta);
  const double inv4 = inv2 * inv2;
  const double inv6 = inv4 * inv2;
  const double i_ev = m.ionization_ev;
  const double i2 = i_ev * i_ev;
  const double i3 = i2 * i_ev;
  const double zeta =
      (0.422377 * inv2 + 0.0304043 * inv4 - 0.00038106 * inv6) * 1e-6 * i2 +
      (3.850190 * inv2 - 0.1667989 * inv4 + 0.00157955 * inv6) * 1e-9 * i3;
  return std::max(zeta, 0.0);
}

double radiation_length_gcm2(const MaterialSpec& m) {
  return 716.4 * m.a / (m.z * (m.z + 1.0) * std::log(287.0 / std::sqrt(m.z)));
}

double radiative_stopping(double e_mev, const MaterialSpec& m) {
  if (e_mev < 0.0) {
    throw std::domain_error("radiative_stopping: energy must be >= 0");
  }
  return e_mev * m.mass_density_gcm3 / radiation_length_gcm2(m);
}

double ionization_stopping(double e_mev, const MaterialSpec& m, Corrections c) {
  check_domain(e_mev, "ionization_stopping");
  const Kinematics k = kinematics(e_mev);
  const double gamma = k.gamma;
  const double beta2 = k.beta * k.beta;
  const double gb = gamma * k.beta;

  const double mec2_ev = kElectronRestMeV * 1e6;
  const double lead = (gamma - 1.0) * (gamma - 1.0) * (gamma + 1.0) * mec2_ev * mec2_ev /
                      (2.0 * m.ionization_ev * m.ionization_ev);
  const double electron_term =
      (gb * gb / 8.0 - (2.0 * gb + 1.0) * std::numbers::ln2) / ((gb + 1.0) * (gb + 1.0));

  const double delta = c.density ? density_correction(e_mev, m) : 0.0;
  const double zeta = c.shell ? shell_correction(e_mev, m) : 0.0;

  const double one_minus_beta2 = 1.0 / (gamma * gamma);  // stable form of 1 - beta^2
  const double arg = lead + one_minus_beta2 + electron_term - delta - 2.0 * zeta / m.z;
  if (!(arg > 1.0)) {
    throw std::domain_error(
        "ionization_stopping: Bethe-Bloch log argument <= 1 at " + std::to_string(e_mev) +
        " MeV; the model floor for this material lies above this energy");
  }

  const double prefactor = 2.0 * std::numbers::pi * m.atom_density_cm3 * m.z *
                           kElectronRestMeV * kClassicalElectronRadiusCm *
                           kClassicalElectronRadiusCm;
  return prefactor / beta2 * std::log(arg);
}

StoppingBreakdown total_stopping(double e_mev, const MaterialSpec& m, Corrections c) {
  const double ion = ionization_stopping(e_mev, m, c);
  const double rad = radiative_stopping(e_mev, m);
  return {ion, rad, ion + rad};
}

}  // namespace nvirrad
