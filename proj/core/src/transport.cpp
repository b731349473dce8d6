#include "nvirrad/transport.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "nvirrad/displacement.hpp"
#include "nvirrad/errors.hpp"

namespace nvirrad {

namespace {

constexpr double kUmToCm = 1e-4;

double resolved_step_cm(const BeamSpec& beam) {
  const double step_um = beam.step_um > 0.0 ? beam.step_um : default_step_um(beam.energy_mev);
  return step_um * kUmToCm;
}

}  // namespace

DepthProfile propagate(const BeamSpec& beam, const MaterialSpec& m, double thickness_cm,
                       Corrections c) {
  validate(m);
  if (!(thickness_cm > 0.0)) {
    throw config_error("propagate: thickness must be > 0");
  }
  const double step_cm = resolved_step_cm(beam);
  if (!(step_cm > 0.0)) {
    throw config_error("propagate: step must be > 0");
  }
  if (step_cm > thickness_cm * (1.0 + 1e-12)) {
    throw config_error("propagate: step exceeds slab thickness");
  }

  const auto n_full = static_cast<std::size_t>(std::floor(thickness_cm / step_cm + 1e-9));
  double remainder_cm = thickness_cm - static_cast<double>(n_full) * step_cm;
  if (remainder_cm < thickness_cm * 1e-12) remainder_cm = 0.0;
  const std::size_t n_steps = n_full + (remainder_cm > 0.0 ? 1 : 0);

  DepthProfile profile;
  profile.records.reserve(n_steps);

  double energy = beam.energy_mev;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double depth_cm = static_cast<double>(i) * step_cm;
    const double dl = (i < n_full) ? step_cm : remainder_cm;
    const VacancyRates rates = total_vacancy_rate(energy, m, dl);
    profile.records.push_back({depth_cm, energy, rates.total_per_cm});

    const double next = energy - total_stopping(energy, m, c).total * dl;
    profile.stop_depth_cm = depth_cm + dl;
    if (next < kStoppingMinMeV) {
      profile.stopped = true;
      profile.exit_energy_mev = std::max(next, 0.0);
      return profile;
    }
    energy = next;
  }
  profile.exit_energy_mev = energy;
  profile.stop_depth_cm = thickness_cm;
  return profile;
}

std::vector<double> apply_fluence(const DepthProfile& p, double fluence_cm2,
                                  const MaterialSpec& m) {
  if (fluence_cm2 < 0.0) {
    throw std::domain_error("apply_fluence: fluence must be >= 0");
  }
  std::vector<double> ppm;
  ppm.reserve(p.records.size());
  for (const DepthRecord& rec : p.records) {
    ppm.push_back(rec.vac_per_cm * fluence_cm2 / m.atom_density_cm3 * 1e6);
  }
  return ppm;
}

VacancyMap transverse_map(const DepthProfile& p, const BeamSpec& beam, const MaterialSpec& m,
                          double x_extent_um, int nx, BeamProfile profile) {
  if (nx < 3 || nx % 2 == 0) {
    throw config_error("transverse_map: nx must be odd and >= 3");
  }
  if (!(x_extent_um > 0.0) || !(beam.fwhm_um > 0.0)) {
    throw config_error("transverse_map: x extent and beam width must be > 0");
  }

  VacancyMap map;
  const int mid = (nx - 1) / 2;
  const double dx = x_extent_um / static_cast<double>(nx - 1);
  map.x_um.reserve(nx);
  for (int i = 0; i < nx; ++i) {
    map.x_um.push_back(static_cast<double>(i - mid) * dx);
  }
  map.depth_um.reserve(p.records.size());
  for (const DepthRecord& rec : p.records) {
    map.depth_um.push_back(rec.depth_cm / kUmToCm);
  }

  // Column per x: the local fluence scales the same depth profile.
  std::vector<std::vector<double>> columns(nx);
  for (int i = 0; i < nx; ++i) {
    const double x = map.x_um[i];
    double local = 0.0;
    if (profile == BeamProfile::gaussian) {
      local = beam.peak_fluence_cm2 *
              std::exp(-4.0 * std::numbers::ln2 * x * x / (beam.fwhm_um * beam.fwhm_um));
    } else {
      local = std::abs(x) <= 0.5 * beam.fwhm_um ? beam.peak_fluence_cm2 : 0.0;
    }
    columns[i] = apply_fluence(p, local, m);
  }

  map.conc_ppm.assign(p.records.size(), std::vector<double>(nx, 0.0));
  for (std::size_t row = 0; row < p.records.size(); ++row) {
    for (int i = 0; i < nx; ++i) {
      map.conc_ppm[row][i] = columns[i][row];
    }
  }
  return map;
}

std::vector<SweepPoint> fluence_sweep(double energy_mev, const MaterialSpec& m,
                                      std::span<const double> fluences, double probe_depth_um,
                                      double step_um, Corrections c) {
  if (fluences.empty()) {
    throw std::domain_error("fluence_sweep: fluence list must be non-empty");
  }
  for (const double f : fluences) {
    if (f < 0.0) {
      throw std::domain_error("fluence_sweep: fluences must be >= 0");
    }
  }
  if (probe_depth_um < 0.0) {
    throw std::domain_error("fluence_sweep: probe depth must be >= 0");
  }

  BeamSpec beam{.energy_mev = energy_mev, .step_um = step_um};
  const double step_cm = resolved_step_cm(beam);
  const double probe_cm = probe_depth_um * kUmToCm;
  const double thickness_cm = probe_cm + step_cm;

  const DepthProfile profile = propagate(beam, m, thickness_cm, c);

  // Last record at or before the probe depth; the probe is covered when it
  // falls within that record's step.
  const DepthRecord* covering = nullptr;
  for (const DepthRecord& rec : profile.records) {
    if (rec.depth_cm <= probe_cm * (1.0 + 1e-9) + 1e-15) {
      covering = &rec;
    } else {
      break;
    }
  }
  bool beyond = covering == nullptr;
  double rate = 0.0;
  if (covering != nullptr) {
    if (probe_cm - covering->depth_cm > step_cm * (1.0 + 1e-9)) {
      beyond = true;  // beam stopped before reaching the probe depth
    } else {
      rate = covering->vac_per_cm;
    }
  }

  std::vector<SweepPoint> out;
  out.reserve(fluences.size());
  for (const double f : fluences) {
    out.push_back({f, rate * f / m.atom_density_cm3 * 1e6, beyond});
  }
  return out;
}

}  // namespace nvirrad
