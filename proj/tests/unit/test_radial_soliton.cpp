#include <doctest.h>

#include <cmath>
#include <vector>

#include "nled/constitutive.hpp"
#include "nled/errors.hpp"
#include "nled/finite_difference.hpp"
#include "nled/radial_soliton.hpp"
#include "oracles.hpp"

using namespace nled;

namespace {

constexpr double kE = 4.77e-10;
constexpr double kR0 = 2.28e-13;
constexpr double kE0 = kE / (kR0 * kR0);

double max_rel(const std::vector<double>& got, const RadialGrid& g, double (*ref)(double)) {
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, oracle::rel_err(got[i], ref(g.r()[i])));
  return worst;
}

}  // namespace

TEST_CASE("grid construction") {
  const auto g = RadialGrid::log_spaced(1e-3, 1e3, 7);
  REQUIRE(g.size() == 7);
  CHECK(g.r().front() == doctest::Approx(1e-3));
  CHECK(g.r().back() == doctest::Approx(1e3));
  CHECK(g.r()[3] == doctest::Approx(1.0));
  CHECK(g.radius_at(-1.0) == doctest::Approx(1e-4));
  CHECK(g.jacobian(2.0) == 2.0);

  const auto lin = RadialGrid::linear(1.0, 2.0, 11);
  CHECK(lin.step() == doctest::Approx(0.1));
  CHECK(lin.jacobian(1.5) == 1.0);
  CHECK(lin.tail(5).size() == 6);

  CHECK_THROWS_AS(RadialGrid::log_spaced(0.0, 1.0, 10), Error);
  CHECK_THROWS_AS(RadialGrid::linear(2.0, 1.0, 10), Error);
  CHECK(parse_grid_spacing("linear") == GridSpacing::Linear);
  CHECK_THROWS_AS(parse_grid_spacing("cubic"), Error);
}

TEST_CASE("displacement profile") {
  const auto g = RadialGrid::log_spaced(1.0, 2.0, 2);
  const auto D = displacement_profile(1.0, g);
  CHECK(D[0] == 1.0);
  CHECK(D[1] == doctest::Approx(0.25));
  const auto p = displacement_profile(kE, RadialGrid::log_spaced(kR0, 2 * kR0, 2));
  CHECK(p[0] == doctest::Approx(9.18e15).epsilon(5e-3));
  CHECK_THROWS_AS(displacement_profile(0.0, g), Error);
}

TEST_CASE("born-infeld field profile fixtures") {
  const auto bi = LagrangianModel::born_infeld(kE0);
  const double r0 = *soliton_radius(bi, kE);
  CHECK(r0 == doctest::Approx(kR0).epsilon(1e-14));
  const auto g = RadialGrid::log_spaced(1e-6 * r0, 10 * r0, 3);
  const auto E = field_profile(bi, kE, g);
  CHECK(E[0] == doctest::Approx(kE0).epsilon(1e-11));
  CHECK(E[1] > 0.0);
  const double coulomb = kE / (100.0 * r0 * r0);
  CHECK(E[2] == doctest::Approx(coulomb / std::sqrt(1.0 + 1e-4)).epsilon(1e-13));
  CHECK(std::abs(E[2] / coulomb - 1.0) <= 5e-5);

  const auto at_r0 = field_profile(bi, kE, RadialGrid::log_spaced(r0, 2 * r0, 2));
  CHECK(at_r0[0] / kE0 == doctest::Approx(0.70711).epsilon(1e-5));
}

TEST_CASE("born-infeld profiles against closed forms on 400 points") {
  const double e = 1.0, E0 = 1.0, r0 = 1.0;
  const auto bi = LagrangianModel::born_infeld(E0);
  const auto g = RadialGrid::log_spaced(1e-3 * r0, 1e3 * r0, 400);

  const auto E = field_profile(bi, e, g);
  CHECK(max_rel(E, g, [](double r) { return oracle::bi_field(1.0, 1.0, r); }) <= 1e-10);

  const auto eps = permittivity_profile(bi, e, g);
  CHECK(max_rel(eps, g, [](double r) { return oracle::bi_permittivity(1.0, r); }) <= 1e-10);

  const auto rho = charge_density_profile(bi, e, g);
  CHECK(max_rel(rho, g, [](double r) { return oracle::bi_charge_density(1.0, 1.0, r); }) <= 1e-8);
}

TEST_CASE("closed-form agreement is scale free") {
  const auto bi = LagrangianModel::born_infeld(kE0);
  const auto g = RadialGrid::log_spaced(1e-3 * kR0, 1e3 * kR0, 400);
  const auto E = field_profile(bi, kE, g);
  const auto rho = charge_density_profile(bi, kE, g);
  double worst_E = 0.0, worst_rho = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    worst_E = std::max(worst_E, oracle::rel_err(E[i], oracle::bi_field(kE, kR0, g.r()[i])));
    worst_rho = std::max(worst_rho, oracle::rel_err(rho[i], oracle::bi_charge_density(kE, kR0, g.r()[i])));
  }
  CHECK(worst_E <= 1e-10);
  CHECK(worst_rho <= 1e-8);
}

TEST_CASE("charge density fixtures") {
  const auto bi = LagrangianModel::born_infeld(1.0);
  const auto g = RadialGrid::log_spaced(0.5, 20.0, 200);
  const auto rho = charge_density_profile(bi, 1.0, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.r()[i];
    if (std::abs(r - 1.0) < 1e-12) CHECK(rho[i] == doctest::Approx(0.056269).epsilon(1e-5));
  }
  const auto one = charge_density_profile(bi, 1.0, RadialGrid::log_spaced(1.0, 2.0, 200));
  CHECK(one[0] == doctest::Approx(1.0 / (4.0 * std::sqrt(2.0) * M_PI)).epsilon(1e-8));
  const auto far = charge_density_profile(bi, 1.0, RadialGrid::log_spaced(10.0, 20.0, 200));
  CHECK(far[0] == doctest::Approx(1.0 / (2.0 * M_PI * 1e7)).epsilon(1e-3));
  CHECK_THROWS_AS(charge_density_profile(bi, 1.0, RadialGrid::log_spaced(1.0, 2.0, 4)), Error);
}

TEST_CASE("integrated charge equals e") {
  const auto bi = LagrangianModel::born_infeld(1.0);
  const auto g = RadialGrid::log_spaced(1e-4, 1e4, 400);
  const auto rho = charge_density_profile(bi, 1.0, g);
  std::vector<double> integrand(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.r()[i];
    integrand[i] = rho[i] * 4.0 * M_PI * r * r * r;  // d(ln r) measure
  }
  CHECK(gregory_integral(integrand, g.step()) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("Gauss consistency of D") {
  const auto g = RadialGrid::log_spaced(1e-3, 1e3, 400);
  const auto D = displacement_profile(2.0, g);
  std::vector<double> flux(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) flux[i] = g.r()[i] * g.r()[i] * D[i];
  const auto d = stencil_derivative(flux, g.step());
  for (double v : d) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("permittivity fixtures and monotonicity") {
  const auto bi = LagrangianModel::born_infeld(1.0);
  const auto g = RadialGrid::log_spaced(0.1, 10.0, 3);
  const auto eps = permittivity_profile(bi, 1.0, g);
  CHECK(eps[0] == doctest::Approx(100.0).epsilon(5e-5));
  CHECK(eps[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(eps[2] == doctest::Approx(1.00005).epsilon(1e-6));

  const auto dense = permittivity_profile(bi, 1.0, RadialGrid::log_spaced(1e-3, 1e3, 400));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    CHECK(dense[i] >= 1.0);
    if (i > 0) CHECK(dense[i] <= dense[i - 1]);
  }
}

TEST_CASE("potential") {
  const auto bi = LagrangianModel::born_infeld(1.0);
  const auto center = central_potential(bi, 1.0);
  CHECK(center.value == doctest::Approx(1.8541).epsilon(1e-4));
  CHECK(center.value == doctest::Approx(oracle::bi_central_potential_quadrature()).epsilon(1e-10));
  CHECK(center.value == doctest::Approx(oracle::bi_central_potential_gamma()).epsilon(1e-10));
  CHECK(std::abs(center.value - center.coarse_value) <= center.coarse_error);

  const auto scaled = central_potential(LagrangianModel::born_infeld(kE0), kE);
  CHECK(scaled.value == doctest::Approx(oracle::bi_central_potential_gamma() * kE / kR0).epsilon(1e-10));

  const auto g = RadialGrid::log_spaced(1e-2, 10.0, 61);
  const auto phi = potential_profile(bi, 1.0, g);
  CHECK(phi.back() == doctest::Approx(0.1).epsilon(5e-5));
  for (std::size_t i = 1; i < phi.size(); ++i) CHECK(phi[i] < phi[i - 1]);

  // phi(r) = phi(0) - integral_0^r E: check one interior node against the oracle quadrature.
  boost::math::quadrature::tanh_sinh<double> ts;
  const double head = ts.integrate([](double x) { return 1.0 / std::sqrt(1.0 + x * x * x * x); }, 0.0, g.r()[30]);
  CHECK(phi[30] == doctest::Approx(oracle::bi_central_potential_gamma() - head).epsilon(1e-9));

  const auto mx = potential_profile(LagrangianModel::maxwell(), 3.0, g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(mx[i] == doctest::Approx(3.0 / g.r()[i]).epsilon(1e-13));
  CHECK_THROWS_AS(central_potential(LagrangianModel::maxwell(), 1.0), Error);
}

TEST_CASE("log model stops at sqrt(2) r0") {
  const auto lg = LagrangianModel::log_schroedinger(1.0);
  try {
    field_profile(lg, 1.0, RadialGrid::log_spaced(0.1, 10.0, 50));
    FAIL("expected NoSolution");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NoSolution);
    CHECK(err.diagnostic("r") < std::sqrt(2.0));
  }
  const auto prof = solve_soliton(lg, 1.0, RadialGrid::log_spaced(1e-2, 1e2, 400));
  REQUIRE(prof.inversion_failed_below_r.has_value());
  CHECK(*prof.inversion_failed_below_r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(prof.grid.r().front() >= std::sqrt(2.0) * (1 - 1e-12));
  CHECK(prof.E_center.kind == "unavailable");
  CHECK_FALSE(prof.E_center.value.has_value());
  for (std::size_t i = 0; i < prof.grid.size(); ++i) CHECK(std::isfinite(prof.rho[i]));
}

TEST_CASE("full profile invariants") {
  const auto bi = LagrangianModel::born_infeld(kE0);
  const auto prof = solve_soliton(bi, kE, RadialGrid::log_spaced(1e-4 * kR0, 1e4 * kR0, 400));
  REQUIRE(prof.grid.size() == 400);
  CHECK_FALSE(prof.inversion_failed_below_r.has_value());
  CHECK(prof.E_center.kind == "analytic_limit");
  CHECK(*prof.E_center.value == kE0);
  CHECK(prof.phi_center.kind == "quadrature_limit");
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    const double r = prof.grid.r()[i];
    CHECK(prof.D[i] == kE / (r * r));
    CHECK(prof.E[i] <= prof.D[i]);
    CHECK(prof.eps[i] == prof.D[i] / prof.E[i]);
    CHECK(prof.u[i] > 0.0);
  }
  const auto mx = solve_soliton(LagrangianModel::maxwell(), 1.0, RadialGrid::log_spaced(1.0, 10.0, 20));
  CHECK(mx.E_center.kind == "unbounded");
  CHECK(mx.phi_center.kind == "unbounded");
  for (double rho : mx.rho) CHECK(rho == 0.0);
}
