#include "nled/energetics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nled/constitutive.hpp"
#include "nled/errors.hpp"
#include "nled/finite_difference.hpp"

namespace nled {

namespace {

struct RadialSetup {
  double r_s;
  double x_cut;
  double unit;  // e^2 / r_s
};

RadialSetup radial_setup(const LagrangianModel& m, double e, std::optional<double> cutoff_r) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    throw Error(ErrorKind::Configuration, "charge must be finite and > 0", {{"e", e}});
  }
  if (cutoff_r && !(*cutoff_r > 0.0 && std::isfinite(*cutoff_r))) {
    throw Error(ErrorKind::Configuration, "cutoff radius must be finite and > 0", {{"cutoff_r", *cutoff_r}});
  }
  const double r_s = soliton_radius(m, e).value_or(cutoff_r.value_or(1.0));
  return {r_s, cutoff_r ? *cutoff_r / r_s : 0.0, e * e / r_s};
}

// Dimensionless radial integrand f(E, D) * 4 pi r^2 * r_s / (e^2 / r_s) at r = x r_s.
template <class Density>
Integrand scaled_integrand(const LagrangianModel& m, double e, const RadialSetup& s, Density density) {
  return [&m, e, s, density](double x) {
    const double r = x * s.r_s;
    const double D = e / (r * r);
    const double E = field_from_displacement(m, D).E;
    return density(E, D) * 4.0 * M_PI * r * r * s.r_s / s.unit;
  };
}

RefinedIntegral scaled_by(RefinedIntegral r, double unit) {
  r.value *= unit;
  r.error *= unit;
  r.coarse_value *= unit;
  r.coarse_error *= unit;
  return r;
}

}  // namespace

double energy_density(const LagrangianModel& m, double E) {
  return energy_density(m, E, displacement_from_field(m, E));
}

double energy_density(const LagrangianModel& m, double E, double D) {
  return E * D / (4.0 * M_PI) - lagrangian_static(m, E);
}

EnergyResult total_energy(const LagrangianModel& m, double e, const QuadratureSpec& quad,
                          std::optional<double> cutoff_r) {
  const auto setup = radial_setup(m, e, cutoff_r);
  const auto g = scaled_integrand(m, e, setup, [&m](double E, double D) { return energy_density(m, E, D); });
  EnergyResult out;
  out.scaled = integrate_half_line(g, setup.x_cut, quad);
  out.U = out.scaled.value * setup.unit;
  out.error = out.scaled.error * setup.unit;
  out.length_scale = setup.r_s;
  out.cutoff_r = cutoff_r;
  return out;
}

double born_infeld_energy_coefficient(const QuadratureSpec& quad) {
  return total_energy(LagrangianModel::born_infeld(1.0), 1.0, quad).scaled.value;
}

std::string_view to_string(RadiusConvention c) noexcept {
  return c == RadiusConvention::Paper ? "paper" : "energy-consistent";
}

RadiusConvention parse_radius_convention(std::string_view name) {
  if (name == "paper") return RadiusConvention::Paper;
  if (name == "energy-consistent") return RadiusConvention::EnergyConsistent;
  throw Error(ErrorKind::Configuration,
              "unknown radius convention '" + std::string(name) + "' (expected paper or energy-consistent)");
}

double effective_radius(RadiusConvention convention, const PhysicalConstants& k, ModelKind kind,
                        const QuadratureSpec& quad) {
  if (kind != ModelKind::BornInfeld) {
    throw Error(ErrorKind::Unsupported,
                "effective radius is defined for born-infeld only, got " + std::string(to_string(kind)));
  }
  const double C = born_infeld_energy_coefficient(quad);
  const double r_e = classical_electron_radius(k);
  return convention == RadiusConvention::Paper ? r_e / C : C * r_e;
}

double mass_from_energy(double U, const PhysicalConstants& k) {
  if (!(U >= 0.0)) {
    throw Error(ErrorKind::Configuration, "energy must be >= 0", {{"U", U}});
  }
  return U / (k.c * k.c);
}

StressSummary stress_integrals(const LagrangianModel& m, double e, const QuadratureSpec& quad,
                               std::optional<double> cutoff_r) {
  const auto setup = radial_setup(m, e, cutoff_r);
  const auto energy = scaled_integrand(m, e, setup, [&m](double E, double D) { return energy_density(m, E, D); });
  // T_rr + T_theta_theta + T_phi_phi = E D / 4 pi - 3 L.
  const auto trace = scaled_integrand(m, e, setup, [&m](double E, double D) {
    return E * D / (4.0 * M_PI) - 3.0 * lagrangian_static(m, E);
  });

  StressSummary out;
  out.energy_scaled = integrate_half_line(energy, setup.x_cut, quad);
  out.laue_scaled = integrate_half_line(trace, setup.x_cut, quad);
  const auto U = scaled_by(out.energy_scaled, setup.unit);
  const auto laue = scaled_by(out.laue_scaled, setup.unit);
  out.U_total = U.value;
  out.quad_error = U.error;
  out.laue_trace = laue.value;
  out.laue_quad_error = laue.error;
  // Static field, H = 0: the Poynting vector E x H / 4 pi vanishes pointwise.
  out.momentum = Vec3::Zero();
  out.cutoff_r = cutoff_r;
  out.length_scale = setup.r_s;
  return out;
}

double check_stress_divergence(const SolitonProfile& profile) {
  const auto& grid = profile.grid;
  const std::size_t n = grid.size();
  if (n < 5 || profile.u.size() != n || profile.E.size() != n || profile.D.size() != n) {
    throw Error(ErrorKind::Configuration, "stress divergence check needs a complete profile of >= 5 points",
                {{"points", double(n)}});
  }
  const auto du_ds = stencil_derivative(profile.u, grid.step());
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.r()[i];
    const double dT = du_ds[i] / grid.jacobian(r);
    const double anisotropy = 2.0 * profile.E[i] * profile.D[i] / (4.0 * M_PI * r);
    worst = std::max(worst, std::abs(dT + anisotropy));
    scale = std::max({scale, std::abs(dT), std::abs(anisotropy)});
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

}  // namespace nled
