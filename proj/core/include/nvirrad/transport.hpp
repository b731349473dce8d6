#pragma once

#include <span>
#include <vector>

#include "nvirrad/material.hpp"
#include "nvirrad/stopping.hpp"

namespace nvirrad {

// Incident beam description. fwhm_um is the FWHM of the transverse Gaussian
// fluence profile (or the disk diameter for a uniform beam).
struct BeamSpec {
  double energy_mev;
  double peak_fluence_cm2 = 0.0;  // electrons/cm^2 on the beam axis
  double fwhm_um = 500.0;
  double step_um = 0.0;  // 0 selects the default step for the energy
};

// Default propagation step: 100 nm below 1 MeV, 1 um above.
inline double default_step_um(double energy_mev) {
  return energy_mev < 1.0 ? 0.1 : 1.0;
}

// One record per depth step, evaluated at the step entry.
struct DepthRecord {
  double depth_cm;
  double energy_mev;
  double vac_per_cm;  // stable vacancies / (cm * electron), cascade included
};

struct DepthProfile {
  std::vector<DepthRecord> records;
  double exit_energy_mev = 0.0;  // beam energy after the last executed step
  bool stopped = false;          // true if the beam fell below the model floor in the slab
  double stop_depth_cm = 0.0;    // depth reached (== thickness when not stopped)
};

// First-order depth stepping E(d + dL) = E(d) - S_total(E(d))*dL through a
// homogeneous slab, recording the vacancy rate at each step entry.
// Stops early once the energy falls below the stopping-model floor.
DepthProfile propagate(const BeamSpec& beam, const MaterialSpec& m, double thickness_cm,
                       Corrections c = {});

// Vacancy concentration [ppm] per depth record at the given fluence:
//   conc = vac_per_cm * fluence / atom_density * 1e6
std::vector<double> apply_fluence(const DepthProfile& p, double fluence_cm2,
                                  const MaterialSpec& m);

enum class BeamProfile { gaussian, uniform };

// 2-D vacancy concentration map over transverse position x depth.
struct VacancyMap {
  std::vector<double> x_um;
  std::vector<double> depth_um;
  std::vector<std::vector<double>> conc_ppm;  // [depth index][x index]
};

// Transverse map for a Gaussian (or uniform-disk) beam. The x grid spans
// [-x_extent_um/2, +x_extent_um/2] with nx points; nx must be odd and >= 3 so
// the beam axis x = 0 is sampled.
VacancyMap transverse_map(const DepthProfile& p, const BeamSpec& beam, const MaterialSpec& m,
                          double x_extent_um, int nx, BeamProfile profile = BeamProfile::gaussian);

inline VacancyMap gaussian_beam_map(const DepthProfile& p, const BeamSpec& beam,
                                    const MaterialSpec& m, double x_extent_um, int nx) {
  return transverse_map(p, beam, m, x_extent_um, nx, BeamProfile::gaussian);
}

struct SweepPoint {
  double fluence_cm2;
  double conc_ppm;
  bool beyond_range = false;  // probe depth lies past the point where the beam stopped
};

// Concentration at a fixed probe depth for a list of fluences (linear in
// fluence by construction). step_um = 0 selects the default step.
std::vector<SweepPoint> fluence_sweep(double energy_mev, const MaterialSpec& m,
                                      std::span<const double> fluences, double probe_depth_um,
                                      double step_um = 0.0, Corrections c = {});

}  // namespace nvirrad
