// nvirrad: electron-irradiation vacancy simulation in diamond and NV ensemble
// spectroscopy analysis. Subcommands cover stopping-power and cross-section
// tables, depth profiles, 2-D concentration maps, fluence sweeps, NV yield
// prediction, PL charge-state analysis and ODMR/T1/profile curve fits.

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nvirrad/displacement.hpp"
#include "nvirrad/errors.hpp"
#include "nvirrad/io.hpp"
#include "nvirrad/kinematics.hpp"
#include "nvirrad/material.hpp"
#include "nvirrad/nvmodel.hpp"
#include "nvirrad/specfit.hpp"
#include "nvirrad/stopping.hpp"
#include "nvirrad/transport.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nvirrad::format_double;

// ---------------------------------------------------------------------------
// Output plumbing

struct Output {
  std::ostream* stream = &std::cout;
  std::ofstream file;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw nvirrad::config_error("cannot open output file: " + path);
      stream = &file;
    }
  }
  std::ostream& os() { return *stream; }
};

struct Provenance {
  std::string command;
  std::vector<std::pair<std::string, std::string>> entries;
  bool timestamp = false;

  void add(const std::string& key, double value) {
    entries.emplace_back(key, format_double(value));
  }
  void add(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }

  void write(std::ostream& os) const {
    os << "# nvirrad " << kVersion << "\n# command=" << command << "\n";
    for (const auto& [k, v] : entries) os << "# " << k << "=" << v << "\n";
    if (timestamp) {
      char buf[64];
      const std::time_t now = std::time(nullptr);
      std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      os << "# generated_at=" << buf << "\n";
    }
  }
};

// Material selection: built-in diamond unless a file is given. A bare name is
// also looked up under $NVIRRAD_MATERIAL_DIR.
nvirrad::MaterialSpec resolve_material(const std::string& path) {
  if (path.empty()) return nvirrad::diamond();
  if (std::ifstream probe(path); probe) return nvirrad::load_material(path);
  if (const char* dir = std::getenv("NVIRRAD_MATERIAL_DIR"); dir != nullptr) {
    const std::string fallback = std::string(dir) + "/" + path;
    if (std::ifstream probe(fallback); probe) return nvirrad::load_material(fallback);
  }
  throw nvirrad::config_error("material file not found: " + path);
}

nvirrad::Spectrum load_spectrum(const std::string& path, nvirrad::SpectrumKind kind) {
  const nvirrad::CsvTable t = nvirrad::read_csv(path);
  if (t.columns.size() < 2) {
    throw nvirrad::config_error(path + ": expected two CSV columns (abscissa,value)");
  }
  nvirrad::Spectrum s;
  s.kind = kind;
  s.x = t.columns[0];
  s.y = t.columns[1];
  nvirrad::validate_spectrum(s);
  return s;
}

std::vector<double> parse_fluence_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw nvirrad::config_error("bad fluence value: " + item);
    }
  }
  return out;
}

// JSON-like report: one "key": value per line.
void report_line(std::ostream& os, const char* key, double value, bool last = false) {
  os << "  \"" << key << "\": " << format_double(value) << (last ? "\n" : ",\n");
}

// ---------------------------------------------------------------------------
// Simulation scenario shared by profile/map/sweep

struct Scenario {
  double energy_mev = 155.0;
  double fluence = 0.0;
  double fwhm_um = 500.0;
  double thickness_mm = 3.0;
  double step_um = 0.0;  // 0 -> default for the energy
  std::string beam_profile = "gaussian";
  std::string material_file;
  std::string preset;
};

void apply_preset(Scenario& sc, const CLI::App* cmd) {
  if (cmd->count("--preset") == 0) return;
  Scenario base;
  if (sc.preset == "ares155") {
    base.energy_mev = 155.0;
    base.fluence = 1.5e18;
    base.fwhm_um = 500.0;
    base.thickness_mm = 3.0;
    base.step_um = 1.0;
    base.beam_profile = "gaussian";
  } else if (sc.preset == "tem200k") {
    base.energy_mev = 0.2;
    base.fluence = 0.0;  // fluence stays user-set per irradiated spot
    base.fwhm_um = 15.0;  // homogeneous disk diameter
    base.thickness_mm = 0.3;
    base.step_um = 0.1;
    base.beam_profile = "uniform";
  } else {
    throw nvirrad::config_error("unknown preset: " + sc.preset + " (ares155|tem200k)");
  }
  if (cmd->count("--energy-mev") == 0) sc.energy_mev = base.energy_mev;
  if (cmd->count("--fluence") == 0) sc.fluence = base.fluence;
  if (cmd->count("--fwhm-um") == 0) sc.fwhm_um = base.fwhm_um;
  if (cmd->count("--thickness-mm") == 0) sc.thickness_mm = base.thickness_mm;
  if (cmd->count("--step-um") == 0) sc.step_um = base.step_um;
  if (cmd->get_option_no_throw("--profile") != nullptr && cmd->count("--profile") == 0) {
    sc.beam_profile = base.beam_profile;
  }
}

void add_scenario_flags(CLI::App* cmd, Scenario& sc, bool with_beam_profile) {
  cmd->add_option("--energy-mev", sc.energy_mev, "Beam kinetic energy [MeV]");
  cmd->add_option("--fluence", sc.fluence, "Peak fluence [e-/cm^2]");
  cmd->add_option("--fwhm-um", sc.fwhm_um, "Beam FWHM (or disk diameter) [um]");
  cmd->add_option("--thickness-mm", sc.thickness_mm, "Slab thickness [mm]");
  cmd->add_option("--step-um", sc.step_um, "Depth step [um]; 0 = default for the energy");
  cmd->add_option("--material", sc.material_file, "Material key=value file");
  cmd->add_option("--preset", sc.preset, "Scenario preset: ares155 | tem200k");
  if (with_beam_profile) {
    cmd->add_option("--profile", sc.beam_profile, "Transverse profile: gaussian | uniform")
        ->check(CLI::IsMember({"gaussian", "uniform"}));
  }
}

nvirrad::BeamSpec beam_of(const Scenario& sc) {
  return {.energy_mev = sc.energy_mev, .peak_fluence_cm2 = sc.fluence, .fwhm_um = sc.fwhm_um,
          .step_um = sc.step_um > 0.0 ? sc.step_um : nvirrad::default_step_um(sc.energy_mev)};
}

void scenario_provenance(Provenance& prov, const Scenario& sc) {
  prov.add("energy_mev", sc.energy_mev);
  prov.add("fluence", sc.fluence);
  prov.add("fwhm_um", sc.fwhm_um);
  prov.add("thickness_mm", sc.thickness_mm);
  prov.add("step_um", beam_of(sc).step_um);
  prov.add("material", sc.material_file.empty() ? "diamond (built-in)" : sc.material_file);
}

// ---------------------------------------------------------------------------
// Subcommand bodies

int run_stopping_table(const std::string& out_path, const std::string& material, double emin,
                       double emax, int points, bool no_delta, bool no_zeta, bool timestamp) {
  if (points < 2 || !(emin > 0.0) || !(emax > emin)) {
    throw nvirrad::config_error("stopping-table: need emax > emin > 0 and points >= 2");
  }
  const auto m = resolve_material(material);
  const nvirrad::Corrections corr{.density = !no_delta, .shell = !no_zeta};
  Output out(out_path);
  Provenance prov{.command = "stopping-table"};
  prov.add("emin_mev", emin);
  prov.add("emax_mev", emax);
  prov.add("points", static_cast<double>(points));
  prov.add("density_correction", no_delta ? "off" : "on");
  prov.add("shell_correction", no_zeta ? "off" : "on");
  prov.add("material", material.empty() ? "diamond (built-in)" : material);
  prov.timestamp = timestamp;
  prov.write(out.os());

  out.os() << "energy_mev,s_ion_mev_per_cm,s_rad_mev_per_cm,s_total_mev_per_cm\n";
  for (int i = 0; i < points; ++i) {
    const double e = emin * std::pow(emax / emin, static_cast<double>(i) / (points - 1));
    const auto s = nvirrad::total_stopping(e, m, corr);
    out.os() << format_double(e) << ',' << format_double(s.ionization) << ','
             << format_double(s.radiative) << ',' << format_double(s.total) << '\n';
  }
  return 0;
}

int run_xsection_table(const std::string& out_path, const std::string& material, double emin,
                       double emax, int points, double step_um, bool timestamp) {
  if (points < 2 || !(emin > 0.0) || !(emax > emin)) {
    throw nvirrad::config_error("xsection-table: need emax > emin > 0 and points >= 2");
  }
  const auto m = resolve_material(material);
  Output out(out_path);
  Provenance prov{.command = "xsection-table"};
  prov.add("emin_mev", emin);
  prov.add("emax_mev", emax);
  prov.add("points", static_cast<double>(points));
  prov.add("step_um", step_um);
  prov.add("material", material.empty() ? "diamond (built-in)" : material);
  prov.timestamp = timestamp;
  prov.write(out.os());

  out.os() << "energy_mev,e_max_ev,sigma_d_barn,n_per_cm,N_per_cm\n";
  for (int i = 0; i < points; ++i) {
    const double e = emin * std::pow(emax / emin, static_cast<double>(i) / (points - 1));
    const double dl_um = step_um > 0.0 ? step_um : nvirrad::default_step_um(e);
    const auto r = nvirrad::total_vacancy_rate(e, m, dl_um * 1e-4);
    out.os() << format_double(e) << ',' << format_double(r.e_max_ev) << ','
             << format_double(r.cross_section_barn) << ',' << format_double(r.primary_per_cm)
             << ',' << format_double(r.total_per_cm) << '\n';
  }
  return 0;
}

int run_profile(const Scenario& sc, const std::string& out_path, bool timestamp) {
  const auto m = resolve_material(sc.material_file);
  const auto beam = beam_of(sc);
  const auto profile = nvirrad::propagate(beam, m, sc.thickness_mm * 0.1);
  const auto conc = nvirrad::apply_fluence(profile, sc.fluence, m);

  Output out(out_path);
  Provenance prov{.command = "profile"};
  scenario_provenance(prov, sc);
  prov.timestamp = timestamp;
  prov.write(out.os());

  out.os() << "depth_um,energy_mev,vac_per_cm,conc_ppm\n";
  for (std::size_t i = 0; i < profile.records.size(); ++i) {
    const auto& rec = profile.records[i];
    out.os() << format_double(rec.depth_cm * 1e4) << ',' << format_double(rec.energy_mev) << ','
             << format_double(rec.vac_per_cm) << ',' << format_double(conc[i]) << '\n';
  }
  out.os() << "# exit_energy_mev=" << format_double(profile.exit_energy_mev) << "\n"
           << "# beam_stopped=" << (profile.stopped ? 1 : 0) << "\n";
  return 0;
}

int run_map(const Scenario& sc, const std::string& out_path, double x_extent_um, int nx,
            bool timestamp) {
  const auto m = resolve_material(sc.material_file);
  const auto beam = beam_of(sc);
  const auto profile = nvirrad::propagate(beam, m, sc.thickness_mm * 0.1);
  const auto kind = sc.beam_profile == "uniform" ? nvirrad::BeamProfile::uniform
                                                 : nvirrad::BeamProfile::gaussian;
  const auto map = nvirrad::transverse_map(profile, beam, m, x_extent_um, nx, kind);

  Output out(out_path);
  Provenance prov{.command = "map"};
  scenario_provenance(prov, sc);
  prov.add("beam_profile", sc.beam_profile);
  prov.add("x_extent_um", x_extent_um);
  prov.add("nx", static_cast<double>(nx));
  prov.timestamp = timestamp;
  prov.write(out.os());

  out.os() << "depth_um";
  for (const double x : map.x_um) out.os() << ',' << format_double(x);
  out.os() << '\n';
  for (std::size_t row = 0; row < map.depth_um.size(); ++row) {
    out.os() << format_double(map.depth_um[row]);
    for (const double v : map.conc_ppm[row]) out.os() << ',' << format_double(v);
    out.os() << '\n';
  }
  return 0;
}

int run_sweep(const Scenario& sc, const std::string& fluences_csv, double probe_depth_um,
              const std::string& out_path, bool timestamp) {
  const auto m = resolve_material(sc.material_file);
  const auto fluences = parse_fluence_list(fluences_csv);
  const auto points =
      nvirrad::fluence_sweep(sc.energy_mev, m, fluences, probe_depth_um, sc.step_um);

  Output out(out_path);
  Provenance prov{.command = "sweep"};
  prov.add("energy_mev", sc.energy_mev);
  prov.add("probe_depth_um", probe_depth_um);
  prov.add("step_um", beam_of(sc).step_um);
  prov.add("material", sc.material_file.empty() ? "diamond (built-in)" : sc.material_file);
  prov.timestamp = timestamp;
  prov.write(out.os());

  out.os() << "fluence_e_cm2,conc_ppm,beyond_range\n";
  bool warned = false;
  for (const auto& p : points) {
    out.os() << format_double(p.fluence_cm2) << ',' << format_double(p.conc_ppm) << ','
             << (p.beyond_range ? 1 : 0) << '\n';
    if (p.beyond_range && !warned) {
      std::cerr << "warning: probe depth " << probe_depth_um
                << " um lies beyond the beam range at " << sc.energy_mev << " MeV\n";
      warned = true;
    }
  }
  return 0;
}

int run_threshold(const std::string& material, const std::string& out_path, bool timestamp) {
  const auto m = resolve_material(material);
  const double thr = nvirrad::displacement_threshold_kev(m);
  Output out(out_path);
  Provenance prov{.command = "threshold"};
  prov.add("material", material.empty() ? "diamond (built-in)" : material);
  prov.add("displacement_ev", m.displacement_ev);
  prov.timestamp = timestamp;
  prov.write(out.os());
  out.os() << "threshold_kev\n" << format_double(thr) << '\n';
  return 0;
}

int run_predict(const std::optional<double>& vacancy_ppm, const std::string& from_profile,
                double nitrogen_ppm, double yield, const std::string& out_path, bool timestamp) {
  if (vacancy_ppm.has_value() == !from_profile.empty()) {
    throw nvirrad::config_error("predict: give exactly one of --vacancy-ppm or --from-profile");
  }
  Provenance prov{.command = "predict"};
  prov.add("nitrogen_ppm", nitrogen_ppm);
  prov.add("yield", yield);
  prov.add("nitrogen_cap_ppm", 0.5 * nitrogen_ppm);
  prov.timestamp = timestamp;

  if (vacancy_ppm.has_value()) {
    const auto p = nvirrad::predict_nv(*vacancy_ppm, nitrogen_ppm, yield);
    Output out(out_path);
    prov.add("vacancy_ppm", *vacancy_ppm);
    prov.write(out.os());
    out.os() << "vacancy_ppm,nv_minus_ppm,budget_limited\n"
             << format_double(p.vacancy_ppm) << ',' << format_double(p.nv_minus_ppm) << ','
             << (p.budget_limited ? 1 : 0) << '\n';
    return 0;
  }

  const nvirrad::CsvTable table = nvirrad::read_csv(from_profile);
  const auto& conc = table.column("conc_ppm");
  Output out(out_path);
  prov.add("from_profile", from_profile);
  prov.write(out.os());
  for (const auto& name : table.header) out.os() << name << ',';
  out.os() << "nv_minus_ppm,budget_limited\n";
  for (std::size_t row = 0; row < table.rows(); ++row) {
    const auto p = nvirrad::predict_nv(conc[row], nitrogen_ppm, yield);
    for (const auto& col : table.columns) out.os() << format_double(col[row]) << ',';
    out.os() << format_double(p.nv_minus_ppm) << ',' << (p.budget_limited ? 1 : 0) << '\n';
  }
  return 0;
}

int run_analyze_pl(const std::string& input, const std::string& calibration_file,
                   double minus_center, double zero_center, double half_window,
                   const nvirrad::DebyeWallerParams& dw, const std::string& out_path,
                   bool timestamp) {
  const auto s = load_spectrum(input, nvirrad::SpectrumKind::pl);
  const auto minus = nvirrad::zpl_area(s, minus_center - half_window, minus_center + half_window);
  const auto zero = nvirrad::zpl_area(s, zero_center - half_window, zero_center + half_window);
  const auto cs = nvirrad::charge_ratio(minus.area, zero.area, dw);

  Output out(out_path);
  Provenance prov{.command = "analyze-pl"};
  prov.add("input", input);
  prov.add("minus_center_nm", minus_center);
  prov.add("zero_center_nm", zero_center);
  prov.add("half_window_nm", half_window);
  prov.add("s_minus", dw.s_minus);
  prov.add("s_zero", dw.s_zero);
  prov.add("k532", dw.k532);
  prov.timestamp = timestamp;
  prov.write(out.os());

  out.os() << "{\n";
  report_line(out.os(), "area_minus", minus.area);
  report_line(out.os(), "area_minus_clamped", minus.clamped ? 1 : 0);
  report_line(out.os(), "area_zero", zero.area);
  report_line(out.os(), "area_zero_clamped", zero.clamped ? 1 : 0);
  if (!calibration_file.empty()) {
    const auto kv = nvirrad::read_key_value_file(calibration_file);
    if (!kv.contains("area_ref") || !kv.contains("ppm_ref")) {
      throw nvirrad::config_error(calibration_file + ": needs area_ref and ppm_ref");
    }
    const nvirrad::Calibration cal{std::stod(kv.at("area_ref")), std::stod(kv.at("ppm_ref"))};
    report_line(out.os(), "nv_minus_ppm", nvirrad::nv_concentration(minus.area, cal));
  }
  report_line(out.os(), "xi", cs.xi, true);
  out.os() << "}\n";
  return 0;
}

void write_fit_csv(Output& out, const nvirrad::Spectrum& s,
                   const std::function<double(double)>& model) {
  out.os() << "abscissa,data,fit,residual\n";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const double fit = model(s.x[i]);
    out.os() << format_double(s.x[i]) << ',' << format_double(s.y[i]) << ','
             << format_double(fit) << ',' << format_double(s.y[i] - fit) << '\n';
  }
}

int run_fit_odmr(const std::string& input, const std::string& out_path, double pd_volts,
                 double photon_rate, bool timestamp) {
  const auto s = load_spectrum(input, nvirrad::SpectrumKind::odmr);
  const auto f = nvirrad::fit_lorentzian(s);

  Provenance prov{.command = "fit-odmr"};
  prov.add("input", input);
  prov.timestamp = timestamp;
  prov.write(std::cout);
  std::cout << "{\n";
  report_line(std::cout, "center_mhz", f.center);
  report_line(std::cout, "fwhm_mhz", f.fwhm);
  report_line(std::cout, "amplitude", f.amplitude);
  report_line(std::cout, "offset", f.offset);
  report_line(std::cout, "contrast", f.contrast);
  report_line(std::cout, "residual_rms", f.residual_rms);
  report_line(std::cout, "stderr_center", f.stderrs[0]);
  report_line(std::cout, "stderr_fwhm", f.stderrs[1]);
  report_line(std::cout, "iterations", f.iterations);
  if (pd_volts > 0.0) {
    report_line(std::cout, "eta_eff_au_per_sqrt_hz", nvirrad::effective_sensitivity(f, pd_volts));
  }
  if (photon_rate > 0.0) {
    report_line(std::cout, "eta_t_per_sqrt_hz", nvirrad::shot_noise_sensitivity(f, photon_rate));
  }
  report_line(std::cout, "converged", f.converged ? 1 : 0, true);
  std::cout << "}\n";

  if (!out_path.empty()) {
    Output out(out_path);
    prov.write(out.os());
    write_fit_csv(out, s, [&](double x) {
      const double hw = 0.5 * f.fwhm;
      return f.offset + f.amplitude * hw * hw / ((x - f.center) * (x - f.center) + hw * hw);
    });
  }
  return 0;
}

int run_fit_t1(const std::string& input, const std::string& out_path, bool timestamp) {
  const auto s = load_spectrum(input, nvirrad::SpectrumKind::t1);
  const auto f = nvirrad::fit_exponential(s);

  Provenance prov{.command = "fit-t1"};
  prov.add("input", input);
  prov.timestamp = timestamp;
  prov.write(std::cout);
  std::cout << "{\n";
  report_line(std::cout, "t1_us", f.t1);
  report_line(std::cout, "amplitude", f.amplitude);
  report_line(std::cout, "offset", f.offset);
  report_line(std::cout, "residual_rms", f.residual_rms);
  report_line(std::cout, "stderr_t1", f.stderrs[0]);
  report_line(std::cout, "iterations", f.iterations);
  report_line(std::cout, "converged", f.converged ? 1 : 0, true);
  std::cout << "}\n";

  if (!out_path.empty()) {
    Output out(out_path);
    prov.write(out.os());
    write_fit_csv(out, s, [&](double x) { return f.offset + f.amplitude * std::exp(-x / f.t1); });
  }
  return 0;
}

int run_fit_profile(const std::string& input, const std::string& out_path, bool timestamp) {
  const auto s = load_spectrum(input, nvirrad::SpectrumKind::profile);
  const auto f = nvirrad::fit_gaussian(s);

  Provenance prov{.command = "fit-profile"};
  prov.add("input", input);
  prov.timestamp = timestamp;
  prov.write(std::cout);
  std::cout << "{\n";
  report_line(std::cout, "center_um", f.center);
  report_line(std::cout, "fwhm_um", f.fwhm);
  report_line(std::cout, "amplitude", f.amplitude);
  report_line(std::cout, "offset", f.offset);
  report_line(std::cout, "residual_rms", f.residual_rms);
  report_line(std::cout, "stderr_fwhm", f.stderrs[1]);
  report_line(std::cout, "iterations", f.iterations);
  report_line(std::cout, "converged", f.converged ? 1 : 0, true);
  std::cout << "}\n";

  if (!out_path.empty()) {
    Output out(out_path);
    prov.write(out.os());
    write_fit_csv(out, s, [&](double x) {
      const double dx = x - f.center;
      return f.offset +
             f.amplitude * std::exp(-4.0 * 0.6931471805599453 * dx * dx / (f.fwhm * f.fwhm));
    });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"electron-irradiation vacancy simulation and NV spectroscopy analysis"};
  app.require_subcommand(1);
  bool timestamp = false;
  app.add_flag("--timestamp", timestamp, "Add a generation timestamp to provenance headers");

  // stopping-table
  auto* c_stop = app.add_subcommand("stopping-table", "Stopping-power table on a log energy grid");
  std::string st_out, st_material;
  double st_emin = 0.2, st_emax = 500.0;
  int st_points = 200;
  bool st_no_delta = false, st_no_zeta = false;
  c_stop->add_option("-o,--output", st_out, "Output CSV (default stdout)");
  c_stop->add_option("--material", st_material, "Material key=value file");
  c_stop->add_option("--emin-mev", st_emin, "Grid lower bound [MeV]");
  c_stop->add_option("--emax-mev", st_emax, "Grid upper bound [MeV]");
  c_stop->add_option("--points", st_points, "Grid point count");
  c_stop->add_flag("--no-density-correction", st_no_delta, "Disable the density effect");
  c_stop->add_flag("--no-shell-correction", st_no_zeta, "Disable the shell correction");

  // xsection-table
  auto* c_xs =
      app.add_subcommand("xsection-table", "Displacement cross-section and vacancy-rate table");
  std::string xs_out, xs_material;
  double xs_emin = 0.15, xs_emax = 500.0, xs_step = 0.0;
  int xs_points = 200;
  c_xs->add_option("-o,--output", xs_out, "Output CSV (default stdout)");
  c_xs->add_option("--material", xs_material, "Material key=value file");
  c_xs->add_option("--emin-mev", xs_emin, "Grid lower bound [MeV]");
  c_xs->add_option("--emax-mev", xs_emax, "Grid upper bound [MeV]");
  c_xs->add_option("--points", xs_points, "Grid point count");
  c_xs->add_option("--step-um", xs_step, "Depth step for the rate [um]; 0 = per-energy default");

  // profile
  auto* c_prof = app.add_subcommand("profile", "Depth profile of beam energy and vacancy rate");
  Scenario sc_prof;
  std::string prof_out;
  c_prof->add_option("-o,--output", prof_out, "Output CSV (default stdout)");
  add_scenario_flags(c_prof, sc_prof, false);

  // map
  auto* c_map = app.add_subcommand("map", "2-D vacancy concentration map (transverse x depth)");
  Scenario sc_map;
  std::string map_out;
  double map_extent = 1500.0;
  int map_nx = 61;
  c_map->add_option("-o,--output", map_out, "Output CSV (default stdout)");
  add_scenario_flags(c_map, sc_map, true);
  c_map->add_option("--x-extent-um", map_extent, "Full transverse extent [um]");
  c_map->add_option("--nx", map_nx, "Transverse sample count (odd)");

  // sweep
  auto* c_sweep = app.add_subcommand("sweep", "Concentration vs fluence at a probe depth");
  Scenario sc_sweep;
  std::string sweep_out, sweep_fluences = "1e16,1e17,1e18,1e19,1e20";
  double sweep_probe = 0.0;
  c_sweep->add_option("-o,--output", sweep_out, "Output CSV (default stdout)");
  c_sweep->add_option("--energy-mev", sc_sweep.energy_mev, "Beam kinetic energy [MeV]");
  c_sweep->add_option("--step-um", sc_sweep.step_um, "Depth step [um]; 0 = default");
  c_sweep->add_option("--material", sc_sweep.material_file, "Material key=value file");
  c_sweep->add_option("--fluences", sweep_fluences, "Comma-separated fluence list [e-/cm^2]");
  c_sweep->add_option("--probe-depth-um", sweep_probe, "Probe depth [um]");

  // threshold
  auto* c_thr = app.add_subcommand("threshold", "Displacement threshold beam energy");
  std::string thr_out, thr_material;
  c_thr->add_option("-o,--output", thr_out, "Output CSV (default stdout)");
  c_thr->add_option("--material", thr_material, "Material key=value file");

  // predict
  auto* c_pred = app.add_subcommand("predict", "NV- prediction from vacancy concentration");
  std::string pred_out, pred_profile;
  double pred_vac = 0.0, pred_n = 200.0, pred_yield = nvirrad::kDefaultNvYield;
  auto* vac_opt = c_pred->add_option("--vacancy-ppm", pred_vac, "Vacancy concentration [ppm]");
  c_pred->add_option("--from-profile", pred_profile, "Profile CSV with a conc_ppm column");
  c_pred->add_option("--nitrogen-ppm", pred_n, "Substitutional nitrogen content [ppm]");
  c_pred->add_option("--yield", pred_yield, "Vacancy to NV- conversion yield");
  c_pred->add_option("-o,--output", pred_out, "Output CSV (default stdout)");

  // analyze-pl
  auto* c_pl = app.add_subcommand("analyze-pl", "ZPL areas and charge-state decomposition");
  std::string pl_input, pl_out, pl_cal;
  double pl_minus = nvirrad::kNvMinusZplNm, pl_zero = nvirrad::kNvZeroZplNm;
  double pl_halfwin = nvirrad::kZplHalfWindowNm;
  nvirrad::DebyeWallerParams dw{};
  c_pl->add_option("input", pl_input, "PL spectrum CSV (wavelength_nm,counts)")->required();
  c_pl->add_option("-o,--output", pl_out, "Report output (default stdout)");
  c_pl->add_option("--calibration", pl_cal, "key=value file with area_ref, ppm_ref");
  c_pl->add_option("--minus-center-nm", pl_minus, "NV- ZPL center [nm]");
  c_pl->add_option("--zero-center-nm", pl_zero, "NV0 ZPL center [nm]");
  c_pl->add_option("--half-window-nm", pl_halfwin, "ZPL window half width [nm]");
  c_pl->add_option("--s-minus", dw.s_minus, "NV- Debye-Waller exponent");
  c_pl->add_option("--s-zero", dw.s_zero, "NV0 Debye-Waller exponent");
  c_pl->add_option("--k532", dw.k532, "Relative PL rate under 532 nm");

  // fit-odmr / fit-t1 / fit-profile
  auto* c_odmr = app.add_subcommand("fit-odmr", "Lorentzian ODMR fit and sensitivity");
  std::string odmr_input, odmr_out;
  double odmr_volts = 0.0, odmr_rate = 0.0;
  c_odmr->add_option("input", odmr_input, "ODMR CSV (frequency_mhz,signal)")->required();
  c_odmr->add_option("-o,--output", odmr_out, "Fit CSV (abscissa,data,fit,residual)");
  c_odmr->add_option("--pd-volts", odmr_volts, "Photodiode level for eta_eff");
  c_odmr->add_option("--photon-rate", odmr_rate, "Detected photon rate [1/s] for eta");

  auto* c_t1 = app.add_subcommand("fit-t1", "Single-exponential T1 fit");
  std::string t1_input, t1_out;
  c_t1->add_option("input", t1_input, "T1 CSV (delay_us,signal)")->required();
  c_t1->add_option("-o,--output", t1_out, "Fit CSV (abscissa,data,fit,residual)");

  auto* c_gp = app.add_subcommand("fit-profile", "Gaussian lateral-profile fit");
  std::string gp_input, gp_out;
  c_gp->add_option("input", gp_input, "Profile CSV (x_um,value)")->required();
  c_gp->add_option("-o,--output", gp_out, "Fit CSV (abscissa,data,fit,residual)");

  try {
    app.parse(argc, argv);

    if (c_stop->parsed()) {
      return run_stopping_table(st_out, st_material, st_emin, st_emax, st_points, st_no_delta,
                                st_no_zeta, timestamp);
    }
    if (c_xs->parsed()) {
      return run_xsection_table(xs_out, xs_material, xs_emin, xs_emax, xs_points, xs_step,
                                timestamp);
    }
    if (c_prof->parsed()) {
      apply_preset(sc_prof, c_prof);
      return run_profile(sc_prof, prof_out, timestamp);
    }
    if (c_map->parsed()) {
      apply_preset(sc_map, c_map);
      return run_map(sc_map, map_out, map_extent, map_nx, timestamp);
    }
    if (c_sweep->parsed()) {
      return run_sweep(sc_sweep, sweep_fluences, sweep_probe, sweep_out, timestamp);
    }
    if (c_thr->parsed()) {
      return run_threshold(thr_material, thr_out, timestamp);
    }
    if (c_pred->parsed()) {
      std::optional<double> vac;
      if (vac_opt->count() > 0) vac = pred_vac;
      return run_predict(vac, pred_profile, pred_n, pred_yield, pred_out, timestamp);
    }
    if (c_pl->parsed()) {
      return run_analyze_pl(pl_input, pl_cal, pl_minus, pl_zero, pl_halfwin, dw, pl_out,
                            timestamp);
    }
    if (c_odmr->parsed()) {
      return run_fit_odmr(odmr_input, odmr_out, odmr_volts, odmr_rate, timestamp);
    }
    if (c_t1->parsed()) {
      return run_fit_t1(t1_input, t1_out, timestamp);
    }
    if (c_gp->parsed()) {
      return run_fit_profile(gp_input, gp_out, timestamp);
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text on stdout, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // error + usage pointer on stderr
    return 2;
  } catch (const nvirrad::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const nvirrad::fit_error& e) {
    std::cerr << "fit error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
