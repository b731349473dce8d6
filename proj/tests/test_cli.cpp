// End-to-end CLI tests: every subcommand runs against committed golden files.
// Commands execute with tests/ as the working directory so the provenance
// headers carry stable relative paths. Regenerate goldens by rerunning the
// same invocations and committing the outputs (see update_goldens.sh).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = NVIRRAD_CLI_PATH;
const std::string kDataDir = NVIRRAD_TEST_DATA_DIR;   // tests/data
const std::string kGoldenDir = NVIRRAD_GOLDEN_DIR;    // tests/golden
const std::string kRunDir = kDataDir + "/..";         // tests/

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd = "cd '" + kRunDir + "' && '" + kCli + "' " + args + " > " + out_path +
                          " 2> " + err_path;
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(kRunDir + "/" + out_path);
  r.err = slurp(kRunDir + "/" + err_path);
  std::remove((kRunDir + "/" + out_path).c_str());
  std::remove((kRunDir + "/" + err_path).c_str());
  return r;
}

void check_golden(const std::string& actual, const char* golden_name) {
  const std::string expected = slurp(kGoldenDir + "/" + golden_name);
  REQUIRE(!expected.empty());
  if (actual == expected) {
    CHECK(actual == expected);
    return;
  }
  // Locate the first differing line for the failure message.
  std::istringstream a(actual), e(expected);
  std::string la, le;
  int line = 0;
  while (true) {
    ++line;
    const bool ga = static_cast<bool>(std::getline(a, la));
    const bool ge = static_cast<bool>(std::getline(e, le));
    if (!ga && !ge) break;
    if (la != le || ga != ge) {
      FAIL_CHECK("golden mismatch vs " << golden_name << " at line " << line
                                       << "\n  actual:   " << la << "\n  expected: " << le);
      return;
    }
  }
  FAIL_CHECK("golden mismatch vs " << golden_name << " (content differs)");
}

double last_csv_value(const std::string& text, int column) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos) last = line;
  }
  std::istringstream row(last);
  std::string cell;
  for (int i = 0; i <= column; ++i) std::getline(row, cell, ',');
  return std::stod(cell);
}

}  // namespace

TEST_CASE("cli: no arguments is a usage error (exit 2)") {
  const auto r = run("");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("subcommand") != std::string::npos);
}

TEST_CASE("cli: unknown flag is a usage error (exit 2)") {
  CHECK(run("--bogus-flag").exit_code == 2);
  CHECK(run("profile --bogus-flag 1").exit_code == 2);
}

TEST_CASE("cli: missing input file exits 2") {
  CHECK(run("fit-t1 data/no_such_file.csv").exit_code == 2);
  CHECK(run("profile --material data/no_such_material.txt").exit_code == 2);
}

TEST_CASE("cli: domain errors exit 3") {
  // ZPL window outside the committed spectrum range.
  const auto r = run("analyze-pl data/pl_irradiated.csv --minus-center-nm 900");
  CHECK(r.exit_code == 3);
  // Beam energy outside the stopping model domain.
  CHECK(run("profile --energy-mev 0.001 --thickness-mm 0.001 --step-um 0.1").exit_code == 3);
}

TEST_CASE("cli: stopping-table golden") {
  const auto r = run("stopping-table --emin-mev 0.2 --emax-mev 500 --points 13");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "stopping_table.csv");
}

TEST_CASE("cli: stopping-table is idempotent byte-for-byte") {
  const std::string args = "stopping-table --emin-mev 0.5 --emax-mev 50 --points 7";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: xsection-table golden") {
  const auto r = run("xsection-table --emin-mev 0.15 --emax-mev 500 --points 13");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "xsection_table.csv");
}

TEST_CASE("cli: profile golden (coarse ares155)") {
  const auto r = run("profile --preset ares155 --step-um 50");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "profile_ares155_coarse.csv");
}

TEST_CASE("cli: full-resolution ares155 profile ends near 149 MeV") {
  const auto r = run("profile --energy-mev 155 --thickness-mm 3 --step-um 1 --fluence 1.5e18");
  REQUIRE(r.exit_code == 0);
  const double last_energy = last_csv_value(r.out, 1);
  CHECK(last_energy > 148.0);
  CHECK(last_energy < 150.0);
}

TEST_CASE("cli: map goldens for both beam shapes") {
  const auto gauss =
      run("map --preset ares155 --thickness-mm 0.2 --step-um 50 --x-extent-um 1000 --nx 5");
  REQUIRE(gauss.exit_code == 0);
  check_golden(gauss.out, "map_ares155_coarse.csv");

  const auto disk = run(
      "map --preset tem200k --fluence 1e18 --thickness-mm 0.05 --step-um 5 --x-extent-um 30 "
      "--nx 5");
  REQUIRE(disk.exit_code == 0);
  check_golden(disk.out, "map_tem200k_coarse.csv");
}

TEST_CASE("cli: sweep golden") {
  const auto r = run("sweep --energy-mev 155 --fluences 1e16,1e17,1e18,1.5e18");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "sweep_155mev.csv");
}

TEST_CASE("cli: threshold golden") {
  const auto r = run("threshold");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "threshold.csv");
}

TEST_CASE("cli: predict goldens (scalar and from-profile)") {
  const auto scalar = run("predict --vacancy-ppm 118 --nitrogen-ppm 200");
  REQUIRE(scalar.exit_code == 0);
  check_golden(scalar.out, "predict_scalar.csv");

  const auto chained = run("predict --from-profile golden/profile_ares155_coarse.csv "
                           "--nitrogen-ppm 200");
  REQUIRE(chained.exit_code == 0);
  check_golden(chained.out, "predict_from_profile.csv");
}

TEST_CASE("cli: analyze-pl golden") {
  const auto r = run("analyze-pl data/pl_irradiated.csv --calibration data/calibration.txt");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "analyze_pl_irradiated.txt");
}

TEST_CASE("cli: fit-odmr golden report and fit CSV") {
  const auto r = run("fit-odmr data/odmr_irradiated.csv --pd-volts 1.0 --photon-rate 1e12 "
                     "-o fit_odmr.tmp.csv");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "fit_odmr_report.txt");
  check_golden(slurp(kRunDir + "/fit_odmr.tmp.csv"), "fit_odmr_curve.csv");
  std::remove((kRunDir + "/fit_odmr.tmp.csv").c_str());
}

TEST_CASE("cli: fit-t1 golden") {
  const auto r = run("fit-t1 data/t1_decay.csv");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "fit_t1_report.txt");
}

TEST_CASE("cli: fit-profile golden") {
  const auto r = run("fit-profile data/nv_profile.csv");
  REQUIRE(r.exit_code == 0);
  check_golden(r.out, "fit_profile_report.txt");
}
