#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "nvirrad/errors.hpp"
#include "nvirrad/kinematics.hpp"
#include "nvirrad/material.hpp"

using namespace nvirrad;

TEST_CASE("kinematics at rest") {
  const auto k = kinematics(0.0);
  CHECK(k.gamma == 1.0);
  CHECK(k.beta == 0.0);
}

TEST_CASE("kinematics closed-form anchors") {
  // Oracle: gamma = 1 + E/m0c^2 evaluated in long double.
  const auto k1 = kinematics(0.511);
  const long double g1 = 1.0L + 0.511L / oracle::kMe;
  CHECK(k1.gamma == doctest::Approx((double)g1).epsilon(1e-12));
  CHECK(k1.beta == doctest::Approx(std::sqrt((double)(1.0L - 1.0L / (g1 * g1)))).epsilon(1e-12));

  const auto k2 = kinematics(155.0);
  const long double g2 = 1.0L + 155.0L / oracle::kMe;
  CHECK(k2.gamma == doctest::Approx(304.327).epsilon(1e-5));
  CHECK(k2.gamma == doctest::Approx((double)g2).epsilon(1e-12));
  CHECK(k2.beta == doctest::Approx(0.999995).epsilon(1e-6));
}

TEST_CASE("kinematics rejects negative energy") {
  CHECK_THROWS_AS(kinematics(-1e-9), std::domain_error);
}

TEST_CASE("kinematics is strictly monotone in energy") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = std::pow(10.0, u(rng) - 1.5);
    const double b = a * (1.0 + std::pow(10.0, -u(rng)));
    const auto ka = kinematics(a);
    const auto kb = kinematics(b);
    REQUIRE(ka.gamma < kb.gamma);
    REQUIRE(ka.beta < kb.beta);
  }
}

TEST_CASE("ppm conversion") {
  CHECK(ppm_to_density(1.0) == doctest::Approx(1.75e17).epsilon(1e-14));
  CHECK(ppm_to_density(0.0) == 0.0);
  CHECK(ppm_to_density(200.0) == doctest::Approx(3.5e19).epsilon(1e-14));
  CHECK_THROWS_AS(ppm_to_density(-1.0), std::domain_error);
  CHECK_THROWS_AS(density_to_ppm(-1.0), std::domain_error);
}

TEST_CASE("ppm round-trip is identity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double ppm = std::pow(10.0, u(rng));
    CHECK(density_to_ppm(ppm_to_density(ppm)) == doctest::Approx(ppm).epsilon(1e-12));
  }
}

TEST_CASE("diamond preset") {
  const auto m = diamond();
  CHECK(m.z == 6.0);
  CHECK(m.a == 12.01);
  CHECK(m.atom_density_cm3 == 1.76e23);
  CHECK(m.mass_density_gcm3 == 3.515);
  CHECK(m.ionization_ev == 79.0);
  CHECK(m.displacement_ev == 35.0);
  CHECK(m.nucleus_rest_mev() == doctest::Approx(12.01 * 931.49410242).epsilon(1e-14));
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("material validation rejects non-positive fields") {
  auto m = diamond();
  m.displacement_ev = 0.0;
  CHECK_THROWS_AS(validate(m), std::domain_error);
  m = diamond();
  m.a = -12.01;
  CHECK_THROWS_AS(validate(m), std::domain_error);
}

TEST_CASE("material file loading") {
  const char* path = "test_material_tmp.txt";
  {
    std::ofstream out(path);
    out << "# silicon-ish target for loader tests\n"
        << "z = 14\n"
        << "a = 28.085\n"
        << "atom_density_cm3 = 5.0e22\n"
        << "mass_density_gcm3 = 2.329\n"
        << "ionization_ev = 173\n"
        << "displacement_ev = 21\n";
  }
  const auto m = load_material(path);
  CHECK(m.z == 14.0);
  CHECK(m.ionization_ev == 173.0);
  CHECK(m.displacement_ev == 21.0);
  std::remove(path);
}

TEST_CASE("material file errors") {
  const char* path = "test_material_bad_tmp.txt";
  {
    std::ofstream out(path);
    out << "z = 6\na = 12.01\n";  // missing the rest
  }
  CHECK_THROWS_AS(load_material(path), config_error);
  {
    std::ofstream out(path);
    out << "z = 6\na = 12.01\natom_density_cm3 = 1.76e23\nmass_density_gcm3 = 3.515\n"
        << "ionization_ev = 79\ndisplacement_ev = 35\nbogus_key = 1\n";
  }
  CHECK_THROWS_AS(load_material(path), config_error);
  CHECK_THROWS_AS(load_material("no_such_file_anywhere.txt"), config_error);
  std::remove(path);
}
