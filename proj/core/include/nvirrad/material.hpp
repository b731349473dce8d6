#pragma once

#include <string>

#include "nvirrad/constants.hpp"

namespace nvirrad {

// Target material constants. All fields strictly positive.
struct MaterialSpec {
  double z;                        // atomic number
  double a;                        // mass number
  double atom_density_cm3;         // atoms/cm^3
  double mass_density_gcm3;        // g/cm^3
  double ionization_ev;            // mean ionization potential I [eV]
  double displacement_ev;          // displacement threshold energy E_d [eV]

  // Nucleus rest energy M*c^2 [MeV]
  double nucleus_rest_mev() const { return a * kAmuMeV; }
};

// Throws std::domain_error if any field is not strictly positive.
void validate(const MaterialSpec& m);

// Built-in diamond target.
MaterialSpec diamond();

// Loads a material from a plain-text key=value file with keys exactly:
// z, a, atom_density_cm3, mass_density_gcm3, ionization_ev, displacement_ev.
// Unknown or missing keys are a config_error.
MaterialSpec load_material(const std::string& path);

}  // namespace nvirrad
