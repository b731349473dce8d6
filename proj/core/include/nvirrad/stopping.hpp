#pragma once

#include "nvirrad/material.hpp"

namespace nvirrad {

// Supported kinetic-energy domain of the energy-loss model [MeV].
// Outside it the stopping functions throw instead of extrapolating.
inline constexpr double kStoppingMinMeV = 0.01;
inline constexpr double kStoppingMaxMeV = 1000.0;

// Toggles for the two small corrections to the ionization stopping power.
struct Corrections {
  bool density = true;  // Sternheimer density effect (delta)
  bool shell = true;    // Barkas-Berger shell correction (zeta)
};

struct StoppingBreakdown {
  double ionization;  // MeV/cm
  double radiative;   // MeV/cm
  double total;       // MeV/cm
};

// Density-effect coefficients in Sternheimer's standard parametrization,
//   delta(x) = 0                          x < x0
//   delta(x) = 2*ln(10)*x - cbar + a*(x1 - x)^m   x0 <= x < x1
//   delta(x) = 2*ln(10)*x - cbar          x >= x1
// with x = log10(beta*gamma). Derived from the material constants via the
// plasma energy hbar*omega_p = 28.816*sqrt(rho_mass*Z/A) eV (Sternheimer 1971).
struct SternheimerCoefficients {
  double x0;
  double x1;
  double cbar;
  double a;
  double m;
};

SternheimerCoefficients sternheimer_coefficients(const MaterialSpec& m);

// Density effect correction delta for an electron of kinetic energy e_mev.
double density_correction(double e_mev, const MaterialSpec& m);

// Shell correction zeta (Barkas-Berger empirical formula, Leo 1994 eq. 2.33).
// The formula is valid for beta*gamma >= 0.13; below that the argument is
// clamped to keep the correction finite and monotone.
double shell_correction(double e_mev, const MaterialSpec& m);

// Radiation length X0 [g/cm^2],
//   X0 = 716.4 * A / (Z*(Z+1)*ln(287/sqrt(Z)))
double radiation_length_gcm2(const MaterialSpec& m);

// Radiative (bremsstrahlung) stopping power S_r = E*rho_mass/X0 [MeV/cm].
// Exactly linear in the kinetic energy.
double radiative_stopping(double e_mev, const MaterialSpec& m);

// Ionization stopping power [MeV/cm], Bethe-Bloch modified for incident
// electrons (Leo 1994):
//   S_i = 2*pi*rho*Z*m0c^2*re^2/beta^2 * ln(arg)
//   arg = (gamma-1)^2*(gamma+1)*(m0c^2)^2/(2*I^2) + 1 - beta^2
//         + ((gamma*beta)^2/8 - (2*gamma*beta+1)*ln2)/(gamma*beta+1)^2
//         - delta - 2*zeta/Z
// with rho the atom density. Throws std::domain_error outside the supported
// energy domain or if the logarithm argument falls to <= 1.
double ionization_stopping(double e_mev, const MaterialSpec& m, Corrections c = {});

// Ionization + radiative breakdown at the same energy.
StoppingBreakdown total_stopping(double e_mev, const MaterialSpec& m, Corrections c = {});

}  // namespace nvirrad
