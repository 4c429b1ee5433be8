#include "nled/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nled/field_kinematics.hpp"
#include "nled/interaction.hpp"

namespace nled {

namespace {

Vec3 uniform_vec(std::mt19937_64& rng, std::uniform_real_distribution<double>& u) {
  const double x = u(rng);
  const double y = u(rng);
  const double z = u(rng);
  return {x, y, z};
}

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v;
  do {
    const double x = n(rng);
    const double y = n(rng);
    const double z = n(rng);
    v = {x, y, z};
  } while (v.squaredNorm() < 1e-12);
  return v.normalized();
}

}  // namespace

InvariantSuiteReport run_invariant_suite(std::size_t draws, std::size_t boosts, std::uint64_t seed,
                                         double max_beta) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> speed(0.0, max_beta);
  constexpr double kC = 2.99792458e10;

  InvariantSuiteReport out;
  out.draws = draws;
  out.boosts = boosts;
  for (std::size_t i = 0; i < draws; ++i) {
    FieldVectors F;
    F.E = uniform_vec(rng, unit);
    F.H = uniform_vec(rng, unit);
    const auto sides = fierz_identity_sides(F);
    const double denom = 1.0 + std::abs(sides.lhs);
    out.max_rel_err_fierz = std::max(out.max_rel_err_fierz, std::abs(sides.lhs - sides.rhs) / denom);

    const auto em = energy_momentum_density(F, kC);
    const double eight_pi2 = 64.0 * M_PI * M_PI;
    const double cg = kC * em.g.norm();
    const double em_form = eight_pi2 * (em.U * em.U - cg * cg);
    out.max_rel_err_energy_momentum =
        std::max(out.max_rel_err_energy_momentum, std::abs(em_form - sides.lhs) / denom);
  }
  for (std::size_t i = 0; i < boosts; ++i) {
    FieldVectors F;
    F.E = uniform_vec(rng, unit);
    F.H = uniform_vec(rng, unit);
    const double b = speed(rng);
    const Vec3 beta = b * random_direction(rng);
    const auto before = invariants(F);
    const auto after = invariants(boost(F, beta));
    const double scale = F.E.squaredNorm() + F.H.squaredNorm();
    if (scale == 0.0) continue;
    const double err = std::max(std::abs(after.I1 - before.I1), std::abs(after.I2 - before.I2)) / scale;
    out.max_rel_err_boost = std::max(out.max_rel_err_boost, err);
  }
  return out;
}

InteractionSuiteReport run_interaction_suite(std::size_t draws, std::uint64_t seed, double c, double beta) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> speed(0.0, 0.95);

  InteractionSuiteReport out;
  out.draws = draws;
  for (std::size_t i = 0; i < draws; ++i) {
    ChargeState s;
    s.rho = unit(rng);
    s.v = c * speed(rng) * random_direction(rng);
    s.e = unit(rng);
    FourPotential p;
    p.phi = unit(rng);
    p.A = uniform_vec(rng, unit);

    const auto forms = interaction_lagrangian_density(s, p, c);
    const double scale = std::max(1.0, std::abs(forms.form_a));
    out.max_form_discrepancy = std::max(out.max_form_discrepancy, std::abs(forms.form_a - forms.form_b) / scale);

    const auto em = interaction_energy_momentum(s.e, p, c);
    out.max_identity_residual = std::max(out.max_identity_residual,
                                         em.identity_residual / std::max(1.0, std::abs(em.potential_square)));

    const auto [s_boosted, p_boosted] = boost_frame(s, p, beta * random_direction(rng), c);
    const auto boosted = interaction_lagrangian_density(s_boosted, p_boosted, c);
    out.max_boost_discrepancy = std::max(out.max_boost_discrepancy, std::abs(boosted.form_a - forms.form_a) / scale);
  }
  return out;
}

}  // namespace nled
