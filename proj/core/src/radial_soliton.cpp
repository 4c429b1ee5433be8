#include "nled/radial_soliton.hpp"

#include <cmath>
#include <string>

#include "nled/constitutive.hpp"
#include "nled/energetics.hpp"
#include "nled/errors.hpp"
#include "nled/finite_difference.hpp"

namespace nled {

namespace {

constexpr std::size_t kMinProfilePoints = 5;
constexpr std::size_t kGhosts = 4;

void require_charge(double e) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    throw Error(ErrorKind::Configuration, "charge must be finite and > 0", {{"e", e}});
  }
}

void require_profile_points(const RadialGrid& grid) {
  if (grid.size() < kMinProfilePoints) {
    throw Error(ErrorKind::Configuration, "radial grid too coarse for profile derivatives",
                {{"points", double(grid.size())}, {"min_points", double(kMinProfilePoints)}});
  }
}

double field_at(const LagrangianModel& m, double e, double r) {
  try {
    return field_from_displacement(m, e / (r * r)).E;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NoSolution) throw;
    auto diag = err.diagnostics();
    diag.emplace_back("r", r);
    throw Error(ErrorKind::NoSolution, std::string(m.name()) + ": no field solution at this radius",
                std::move(diag));
  }
}

std::vector<double> check_grid_points(std::vector<double> r, GridSpacing spacing) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !(r[i] > 0.0) || (i > 0 && !(r[i] > r[i - 1]))) {
      throw Error(ErrorKind::Configuration,
                  std::string("radial grid must be positive and strictly increasing (") +
                      std::string(to_string(spacing)) + " spacing)",
                  {{"index", double(i)}, {"r", r[i]}});
    }
  }
  return r;
}

void require_range(double r_min, double r_max, std::size_t points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max) || points < 2) {
    throw Error(ErrorKind::Configuration, "grid needs 0 < r_min < r_max and at least 2 points",
                {{"r_min", r_min}, {"r_max", r_max}, {"points", double(points)}});
  }
}

}  // namespace

std::string_view to_string(GridSpacing spacing) noexcept {
  return spacing == GridSpacing::Log ? "log" : "linear";
}

GridSpacing parse_grid_spacing(std::string_view name) {
  if (name == "log") return GridSpacing::Log;
  if (name == "linear") return GridSpacing::Linear;
  throw Error(ErrorKind::Configuration, "grid spacing must be 'log' or 'linear', got '" + std::string(name) + "'");
}

RadialGrid::RadialGrid(std::vector<double> r, GridSpacing spacing, double origin, double step)
    : r_(check_grid_points(std::move(r), spacing)), spacing_(spacing), origin_(origin), step_(step) {}

RadialGrid RadialGrid::log_spaced(double r_min, double r_max, std::size_t points) {
  require_range(r_min, r_max, points);
  const double origin = std::log(r_min);
  const double step = (std::log(r_max) - origin) / double(points - 1);
  std::vector<double> r(points);
  for (std::size_t i = 0; i < points; ++i) r[i] = std::exp(origin + double(i) * step);
  r.front() = r_min;
  r.back() = r_max;
  return RadialGrid(std::move(r), GridSpacing::Log, origin, step);
}

RadialGrid RadialGrid::linear(double r_min, double r_max, std::size_t points) {
  require_range(r_min, r_max, points);
  const double step = (r_max - r_min) / double(points - 1);
  std::vector<double> r(points);
  for (std::size_t i = 0; i < points; ++i) r[i] = r_min + double(i) * step;
  r.back() = r_max;
  return RadialGrid(std::move(r), GridSpacing::Linear, r_min, step);
}

double RadialGrid::radius_at(double k) const noexcept {
  const double s = origin_ + k * step_;
  return spacing_ == GridSpacing::Log ? std::exp(s) : s;
}

double RadialGrid::jacobian(double r) const noexcept { return spacing_ == GridSpacing::Log ? r : 1.0; }

RadialGrid RadialGrid::tail(std::size_t first) const {
  if (first >= r_.size()) {
    throw Error(ErrorKind::Configuration, "grid tail is empty", {{"first", double(first)}});
  }
  return RadialGrid(std::vector<double>(r_.begin() + std::ptrdiff_t(first), r_.end()), spacing_,
                    origin_ + double(first) * step_, step_);
}

std::optional<double> soliton_radius(const LagrangianModel& m, double e) {
  require_charge(e);
  if (const auto scale = m.field_scale()) return std::sqrt(e / *scale);
  return std::nullopt;
}

std::vector<double> displacement_profile(double e, const RadialGrid& grid) {
  require_charge(e);
  std::vector<double> D(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) D[i] = e / (grid.r()[i] * grid.r()[i]);
  return D;
}

std::vector<double> field_profile(const LagrangianModel& m, double e, const RadialGrid& grid) {
  require_charge(e);
  std::vector<double> E(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) E[i] = field_at(m, e, grid.r()[i]);
  return E;
}

std::vector<double> charge_density_profile(const LagrangianModel& m, double e, const RadialGrid& grid) {
  require_charge(e);
  require_profile_points(grid);
  const std::size_t n = grid.size();
  const std::size_t total = n + 2 * kGhosts;

  std::vector<double> core(total, 0.0);  // r^2 E
  std::vector<double> tail(total, 0.0);  // r^2 (D - E)
  std::vector<double> E(total, 0.0);
  std::vector<double> excess(total, 0.0);
  std::vector<char> valid(total, 0);
  for (std::size_t j = 0; j < total; ++j) {
    const bool ghost = j < kGhosts || j >= kGhosts + n;
    const double r = ghost ? grid.radius_at(double(j) - double(kGhosts)) : grid.r()[j - kGhosts];
    if (ghost) {
      if (!(r > 0.0) || !std::isfinite(r)) continue;
      try {
        E[j] = field_at(m, e, r);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NoSolution) throw;
        continue;
      }
    } else {
      E[j] = field_at(m, e, r);
    }
    excess[j] = displacement_excess(m, E[j]);
    core[j] = r * r * E[j];
    tail[j] = r * r * excess[j];
    valid[j] = 1;
  }

  const auto d_core = stencil_derivative(core, valid, grid.step(), kGhosts, n);
  const auto d_tail = stencil_derivative(tail, valid, grid.step(), kGhosts, n);
  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.r()[i];
    const std::size_t j = i + kGhosts;
    // div D = 0 away from the origin, so div E = -div (D - E).
    const double d = std::abs(excess[j]) < E[j] ? -d_tail[i] : d_core[i];
    rho[i] = d / (4.0 * M_PI * r * r * grid.jacobian(r));
  }
  return rho;
}

std::vector<double> permittivity_profile(const LagrangianModel& m, double e, const RadialGrid& grid) {
  const auto D = displacement_profile(e, grid);
  const auto E = field_profile(m, e, grid);
  std::vector<double> eps(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) eps[i] = D[i] / E[i];
  return eps;
}

std::vector<double> potential_profile(const LagrangianModel& m, double e, const RadialGrid& grid,
                                      const QuadratureSpec& quad) {
  require_charge(e);
  const std::size_t n = grid.size();
  const double r_max = grid.r().back();
  const double unit = e / soliton_radius(m, e).value_or(r_max);

  // Beyond the grid, E = D - (D - E) and the D part integrates to e / r_max exactly.
  const Integrand tail_integrand = [&](double t) {
    const double r = r_max / t;
    return displacement_excess(m, field_at(m, e, r)) * r_max / (t * t) / unit;
  };
  std::vector<double> phi(n);
  phi[n - 1] = e / r_max - integrate(tail_integrand, 0.0, 1.0, quad).value * unit;

  for (std::size_t i = n - 1; i-- > 0;) {
    const Integrand segment = [&](double k) {
      const double r = grid.radius_at(k);
      return field_at(m, e, r) * grid.jacobian(r) * grid.step() / unit;
    };
    phi[i] = phi[i + 1] + integrate(segment, double(i), double(i + 1), quad).value * unit;
  }
  return phi;
}

RefinedIntegral central_potential(const LagrangianModel& m, double e, const QuadratureSpec& quad) {
  const double r_s = soliton_radius(m, e).value_or(1.0);
  const Integrand g = [&](double x) { return field_at(m, e, x * r_s) * r_s * r_s / e; };
  auto out = integrate_half_line(g, 0.0, quad);
  const double unit = e / r_s;
  out.value *= unit;
  out.error *= unit;
  out.coarse_value *= unit;
  out.coarse_error *= unit;
  return out;
}

SolitonProfile solve_soliton(const LagrangianModel& m, double e, const RadialGrid& grid,
                             const QuadratureSpec& quad) {
  require_charge(e);
  require_profile_points(grid);

  std::optional<double> failed_below;
  std::size_t first = 0;
  if (const auto peak = displacement_peak(m)) {
    const double r_b = std::sqrt(e / peak->D);
    while (first < grid.size() && e / (grid.r()[first] * grid.r()[first]) > peak->D) ++first;
    if (first > 0) failed_below = r_b;
    if (grid.size() - first < kMinProfilePoints) {
      throw Error(ErrorKind::NoSolution,
                  std::string(m.name()) + ": fewer than 5 grid points lie outside the inversion boundary",
                  {{"inversion_failed_below_r", r_b}, {"D_max_attainable", peak->D}});
    }
  }

  SolitonProfile p{first == 0 ? grid : grid.tail(first), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  p.r0 = soliton_radius(m, e);
  p.E0 = m.E0();
  p.inversion_failed_below_r = failed_below;
  p.D = displacement_profile(e, p.grid);
  p.E = field_profile(m, e, p.grid);
  p.rho = charge_density_profile(m, e, p.grid);
  p.eps.resize(p.grid.size());
  p.u.resize(p.grid.size());
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    p.eps[i] = p.D[i] / p.E[i];
    p.u[i] = energy_density(m, p.E[i], p.D[i]);
  }
  p.phi = potential_profile(m, e, p.grid, quad);

  if (const auto limit = field_limit(m)) {
    p.E_center = {*limit, "analytic_limit"};
  } else if (displacement_peak(m)) {
    p.E_center = {std::nullopt, "unavailable"};
  } else {
    p.E_center = {std::nullopt, "unbounded"};
  }
  try {
    p.phi_center = {central_potential(m, e, quad).value, "quadrature_limit"};
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Divergent) {
      p.phi_center = {std::nullopt, "unbounded"};
    } else if (err.kind() == ErrorKind::NoSolution) {
      p.phi_center = {std::nullopt, "unavailable"};
    } else {
      throw;
    }
  }
  return p;
}

}  // namespace nled
