#include "nvirrad/material.hpp"

#include <array>
#include <stdexcept>

#include "nvirrad/errors.hpp"
#include "nvirrad/io.hpp"

namespace nvirrad {

void validate(const MaterialSpec& m) {
  const std::array<std::pair<const char*, double>, 6> fields = {{
      {"z", m.z},
      {"a", m.a},
      {"atom_density_cm3", m.atom_density_cm3},
      {"mass_density_gcm3", m.mass_density_gcm3},
      {"ionization_ev", m.ionization_ev},
      {"displacement_ev", m.displacement_ev},
  }};
  for (const auto& [name, value] : fields) {
    if (!(value > 0.0)) {
      throw std::domain_error(std::string("material field must be strictly positive: ") + name);
    }
  }
}

MaterialSpec diamond() {
  return MaterialSpec{
      .z = 6.0,
      .a = 12.01,
      .atom_density_cm3 = 1.76e23,
      .mass_density_gcm3 = 3.515,
      .ionization_ev = 79.0,
      .displacement_ev = 35.0,
  };
}

MaterialSpec load_material(const std::string& path) {
  const auto kv = read_key_value_file(path);
  const std::array<const char*, 6> keys = {
      "z", "a", "atom_density_cm3", "mass_density_gcm3", "ionization_ev", "displacement_ev"};
  MaterialSpec m{};
  std::array<double*, 6> slots = {&m.z, &m.a, &m.atom_density_cm3, &m.mass_density_gcm3,
                                  &m.ionization_ev, &m.displacement_ev};
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto it = kv.find(keys[i]);
    if (it == kv.end()) {
      throw config_error(path + ": missing material key '" + keys[i] + "'");
    }
    try {
      *slots[i] = std::stod(it->second);
    } catch (const std::exception&) {
      throw config_error(path + ": value of '" + std::string(keys[i]) + "' is not a number");
    }
  }
  if (kv.size() != keys.size()) {
    for (const auto& [key, unused] : kv) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) throw config_error(path + ": unknown material key '" + key + "'");
    }
  }
  validate(m);
  return m;
}

}  // namespace nvirrad
