#include <doctest.h>

#include <random>

#include "nled/errors.hpp"
#include "nled/units.hpp"

using namespace nled;

TEST_CASE("modern constants match the reference table") {
  const auto k = constants("modern");
  CHECK(k.e == doctest::Approx(4.8032e-10).epsilon(1e-4));
  CHECK(k.m_e == doctest::Approx(9.1094e-28).epsilon(1e-4));
  CHECK(k.c == doctest::Approx(2.9979e10).epsilon(1e-4));
  CHECK(k.preset_name == "modern");
}

TEST_CASE("historical1934 preset closes the printed radius/field pair") {
  const auto k = constants("historical1934");
  CHECK(k.e == 4.77e-10);
  const double r0 = 2.28e-13;
  CHECK(k.e / (r0 * r0) == doctest::Approx(9.18e15).epsilon(5e-3));
  CHECK(k.m_e == constants("modern").m_e);
  CHECK(k.c == constants("modern").c);
}

TEST_CASE("unknown preset is a configuration error") {
  try {
    constants("foo");
    FAIL("expected an exception");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Configuration);
  }
}

TEST_CASE("all constants are strictly positive") {
  for (auto name : {kPresetModern, kPresetHistorical1934}) {
    const auto k = constants(name);
    CHECK(k.e > 0.0);
    CHECK(k.m_e > 0.0);
    CHECK(k.c > 0.0);
  }
}

TEST_CASE("statvolt/cm to V/m conversion") {
  CHECK(statvolt_per_cm_to_volt_per_m(9.18e15) == doctest::Approx(2.75e20).epsilon(2e-3));
  CHECK(statvolt_per_cm_to_volt_per_m(0.0) == 0.0);
  CHECK(statvolt_per_cm_to_volt_per_m(1.0) == doctest::Approx(2.9979e4).epsilon(1e-4));
}

TEST_CASE("conversion is linear") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e18, 1e18);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double lhs = statvolt_per_cm_to_volt_per_m(a + b);
    const double rhs = statvolt_per_cm_to_volt_per_m(a) + statvolt_per_cm_to_volt_per_m(b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(std::abs(a) + std::abs(b)));
  }
}

TEST_CASE("classical electron radius") {
  CHECK(classical_electron_radius(constants("modern")) == doctest::Approx(2.8179e-13).epsilon(1e-4));
  CHECK(classical_electron_radius(constants("historical1934")) == doctest::Approx(2.78e-13).epsilon(2e-3));

  auto k = constants("modern");
  const double base = classical_electron_radius(k);
  k.e *= 2.0;
  CHECK(classical_electron_radius(k) == doctest::Approx(4.0 * base).epsilon(1e-15));
  k = constants("modern");
  k.m_e *= 3.0;
  CHECK(classical_electron_radius(k) == doctest::Approx(base / 3.0).epsilon(1e-15));
}
