#pragma once

#include <cmath>
#include <stdexcept>

#include "nvirrad/constants.hpp"

namespace nvirrad {

// Relativistic state of an electron of given kinetic energy.
struct Kinematics {
  double kinetic_energy_mev;
  double gamma;  // Lorentz factor, 1 + E/m0c^2
  double beta;   // v/c in [0, 1)
};

inline Kinematics kinematics(double kinetic_energy_mev) {
  if (kinetic_energy_mev < 0.0) {
    throw std::domain_error("kinematics: kinetic energy must be >= 0 MeV");
  }
  const double gamma = 1.0 + kinetic_energy_mev / kElectronRestMeV;
  const double beta = std::sqrt(1.0 - 1.0 / (gamma * gamma));
  return {kinetic_energy_mev, gamma, beta};
}

// ppm of lattice sites <-> atoms/cm^3 (diamond convention, 1 ppm = 1.75e17 cm^-3)
inline double ppm_to_density(double ppm) {
  if (ppm < 0.0) {
    throw std::domain_error("ppm_to_density: concentration must be >= 0");
  }
  return ppm * kPpmToAtomsPerCm3;
}

inline double density_to_ppm(double atoms_per_cm3) {
  if (atoms_per_cm3 < 0.0) {
    throw std::domain_error("density_to_ppm: density must be >= 0");
  }
  return atoms_per_cm3 / kPpmToAtomsPerCm3;
}

}  // namespace nvirrad
