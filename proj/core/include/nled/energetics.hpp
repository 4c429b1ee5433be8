#pragma once

#include <optional>
#include <string_view>

#include "nled/field_kinematics.hpp"
#include "nled/lagrangian.hpp"
#include "nled/quadrature.hpp"
#include "nled/radial_soliton.hpp"
#include "nled/units.hpp"

namespace nled {

/// T44 of a static radial field: u = E D / 4 pi - L(E). D is recomputed from E.
double energy_density(const LagrangianModel& m, double E);

/// Same with the displacement supplied, e.g. D = e / r^2 on a soliton profile. Near the
/// Born-Infeld limit the supplied D is far better resolved than D(E).
double energy_density(const LagrangianModel& m, double E, double D);

struct EnergyResult {
  double U = 0.0;      ///< erg
  double error = 0.0;  ///< erg, estimated absolute quadrature error
  /// Length scale r_s used for the substitution x = r / r_s (r0 when the model has one).
  double length_scale = 0.0;
  std::optional<double> cutoff_r;
  /// The dimensionless integral U / (e^2 / r_s) at both refinement levels.
  RefinedIntegral scaled;
};

/// U = integral u 4 pi r^2 dr from the cutoff (or the origin) to infinity.
/// Without a cutoff, Maxwell raises Error{Divergent}; log models raise Error{NoSolution}.
EnergyResult total_energy(const LagrangianModel& m, double e, const QuadratureSpec& quad = {},
                          std::optional<double> cutoff_r = std::nullopt);

/// U / (e^2 / r0) for Born-Infeld, computed by quadrature (Gamma(1/4)^2 / (6 sqrt(pi)) = 1.23605...).
double born_infeld_energy_coefficient(const QuadratureSpec& quad = {});

enum class RadiusConvention { Paper, EnergyConsistent };

std::string_view to_string(RadiusConvention c) noexcept;
RadiusConvention parse_radius_convention(std::string_view name);

/// Effective soliton radius from the electron constants.
///
/// Paper: r_e / C, which reproduces the historical 2.28e-13 cm figure.
/// EnergyConsistent: C r_e, the radius at which the field energy equals m_e c^2.
/// The two differ by C^2 ~ 1.53. Only Born-Infeld is supported.
double effective_radius(RadiusConvention convention, const PhysicalConstants& k,
                        ModelKind kind = ModelKind::BornInfeld, const QuadratureSpec& quad = {});

/// m = U / c^2.
double mass_from_energy(double U, const PhysicalConstants& k);

/// Rest-frame integrals of the field stress tensor.
struct StressSummary {
  double U_total = 0.0;     ///< erg
  double laue_trace = 0.0;  ///< sum_i integral T_ii dV, erg
  Vec3 momentum = Vec3::Zero();
  double quad_error = 0.0;       ///< erg, error estimate of U_total
  double laue_quad_error = 0.0;  ///< erg, error estimate of laue_trace
  std::optional<double> cutoff_r;
  double length_scale = 0.0;
  RefinedIntegral energy_scaled;  ///< U / (e^2 / r_s)
  RefinedIntegral laue_scaled;    ///< laue_trace / (e^2 / r_s)

  /// Each Cartesian integral T_xx = T_yy = T_zz by spherical symmetry.
  double per_axis_trace() const noexcept { return laue_trace / 3.0; }
};

/// T_rr = E D / 4 pi - L, T_theta_theta = T_phi_phi = -L; laue_trace integrates their sum.
StressSummary stress_integrals(const LagrangianModel& m, double e, const QuadratureSpec& quad = {},
                               std::optional<double> cutoff_r = std::nullopt);

/// max_i |dT_rr/dr + (2/r)(T_rr - T_theta_theta)| over the profile, normalized by the largest
/// magnitude of either term. Uses T_rr = u and T_rr - T_theta_theta = E D / 4 pi.
double check_stress_divergence(const SolitonProfile& profile);

}  // namespace nled
