#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nled/lagrangian.hpp"
#include "nled/quadrature.hpp"

namespace nled {

enum class GridSpacing { Log, Linear };

std::string_view to_string(GridSpacing spacing) noexcept;
GridSpacing parse_grid_spacing(std::string_view name);

/// Strictly increasing radii, uniform in ln r (Log) or in r (Linear). r = 0 is never a node.
class RadialGrid {
 public:
  static RadialGrid log_spaced(double r_min, double r_max, std::size_t points);
  static RadialGrid linear(double r_min, double r_max, std::size_t points);

  const std::vector<double>& r() const noexcept { return r_; }
  std::size_t size() const noexcept { return r_.size(); }
  GridSpacing spacing() const noexcept { return spacing_; }

  /// Spacing in the uniform coordinate (ln r or r).
  double step() const noexcept { return step_; }
  /// Radius at uniform-coordinate offset k * step from node 0; k may be negative or past the end.
  double radius_at(double k) const noexcept;
  /// dr/ds at radius r.
  double jacobian(double r) const noexcept;

  /// Nodes [first, size()).
  RadialGrid tail(std::size_t first) const;

 private:
  RadialGrid(std::vector<double> r, GridSpacing spacing, double origin, double step);

  std::vector<double> r_;
  GridSpacing spacing_;
  double origin_;
  double step_;
};

/// sqrt(e / field_scale) when the model has a field scale (r0 for Born-Infeld and log models).
std::optional<double> soliton_radius(const LagrangianModel& m, double e);

/// D(r) = e / r^2.
std::vector<double> displacement_profile(double e, const RadialGrid& grid);

/// E(r) by per-radius inversion of the constitutive relation. A radius where the inversion
/// has no solution raises Error{NoSolution} with an extra diagnostic "r".
std::vector<double> field_profile(const LagrangianModel& m, double e, const RadialGrid& grid);

/// rho = div E / 4 pi by a 9-point stencil in the grid coordinate, padded with ghost radii
/// so interior and edge nodes get centered stencils. Inside the core it differentiates r^2 E;
/// in the tail it differentiates r^2 (D - E), which keeps full relative precision where
/// rho ~ r^-7. Needs at least 5 grid points.
std::vector<double> charge_density_profile(const LagrangianModel& m, double e, const RadialGrid& grid);

/// epsilon = D / E.
std::vector<double> permittivity_profile(const LagrangianModel& m, double e, const RadialGrid& grid);

/// phi(r) = integral_r^inf E dr': adaptive quadrature between nodes plus the tail
/// e / r_max - integral_{r_max}^inf (D - E) dr.
std::vector<double> potential_profile(const LagrangianModel& m, double e, const RadialGrid& grid,
                                      const QuadratureSpec& quad = {});

/// phi(0) = integral_0^inf E dr. Divergent for Maxwell; NoSolution for models whose
/// inversion fails near the origin.
RefinedIntegral central_potential(const LagrangianModel& m, double e, const QuadratureSpec& quad = {});

/// A value at r = 0 is never sampled; it is either a limit or unavailable.
struct CentralValue {
  std::optional<double> value;
  std::string kind;  ///< "analytic_limit", "quadrature_limit", "unbounded" or "unavailable"
};

struct SolitonProfile {
  RadialGrid grid;
  std::vector<double> D;
  std::vector<double> E;
  std::vector<double> rho;
  std::vector<double> eps;
  std::vector<double> u;
  std::vector<double> phi;
  std::optional<double> r0;
  std::optional<double> E0;
  /// Set when the constitutive relation cannot be inverted near the origin; the profile
  /// then covers only the nodes at or beyond this radius.
  std::optional<double> inversion_failed_below_r;
  CentralValue E_center;
  CentralValue phi_center;
};

/// Full profile on the valid part of the grid.
SolitonProfile solve_soliton(const LagrangianModel& m, double e, const RadialGrid& grid,
                             const QuadratureSpec& quad = {});

}  // namespace nled
