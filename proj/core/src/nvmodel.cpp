#include "nvirrad/nvmodel.hpp"

#include <stdexcept>

#include "nvirrad/displacement.hpp"
#include "nvirrad/transport.hpp"

namespace nvirrad {

NVPrediction predict_nv(double vacancy_ppm, double nitrogen_ppm, double yield) {
  if (vacancy_ppm < 0.0 || nitrogen_ppm < 0.0 || yield < 0.0) {
    throw std::domain_error("predict_nv: inputs must be >= 0");
  }
  const double uncapped = yield * vacancy_ppm;
  const double cap = 0.5 * nitrogen_ppm;
  NVPrediction p{};
  p.vacancy_ppm = vacancy_ppm;
  p.nitrogen_ppm = nitrogen_ppm;
  p.budget_limited = uncapped > cap;
  p.nv_minus_ppm = p.budget_limited ? cap : uncapped;
  return p;
}

double half_nitrogen_fluence(double energy_mev, const MaterialSpec& m, double nitrogen_ppm,
                             double step_um) {
  if (!(nitrogen_ppm > 0.0)) {
    throw std::domain_error("half_nitrogen_fluence: nitrogen concentration must be > 0");
  }
  if (energy_mev * 1e3 < displacement_threshold_kev(m)) {
    throw std::domain_error(
        "half_nitrogen_fluence: beam energy below the displacement threshold, "
        "no vacancies are produced at any fluence");
  }
  const double step = step_um > 0.0 ? step_um : default_step_um(energy_mev);
  const double rate = total_vacancy_rate(energy_mev, m, step * 1e-4).total_per_cm;
  // conc_ppm = rate * fluence / atom_density * 1e6  ==  nitrogen_ppm / 2
  return 0.5 * nitrogen_ppm * m.atom_density_cm3 / (1e6 * rate);
}

}  // namespace nvirrad
