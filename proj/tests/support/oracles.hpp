#pragma once

// Closed forms and independent numerical references for the test suites. Nothing here calls
// into the library's quadrature, inversion or differentiation code.

#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace nled::oracle {

/// Born-Infeld field of a point charge, e / sqrt(r^4 + r0^4).
inline double bi_field(double e, double r0, double r) {
  const double r2 = r * r;
  const double r02 = r0 * r0;
  return e / std::sqrt(r2 * r2 + r02 * r02);
}

/// Born-Infeld charge density e r0^4 / (2 pi r (r^4 + r0^4)^{3/2}).
inline double bi_charge_density(double e, double r0, double r) {
  const double r4 = r * r * r * r;
  const double r04 = r0 * r0 * r0 * r0;
  return e * r04 / (2.0 * M_PI * r * std::pow(r4 + r04, 1.5));
}

/// Born-Infeld permittivity sqrt((r^4 + r0^4) / r^4).
inline double bi_permittivity(double r0, double r) {
  const double x = r0 / r;
  return std::sqrt(1.0 + x * x * x * x);
}

/// Born-Infeld energy density at x = r / r0: (E0^2/4pi)(sqrt(1 + x^4)/x^2 - 1).
inline double bi_energy_density(double E0, double x) {
  return E0 * E0 / (4.0 * M_PI) * (std::sqrt(1.0 + x * x * x * x) / (x * x) - 1.0);
}

/// Gamma(1/4)^2 / (6 sqrt(pi)), the Born-Infeld self-energy in units of e^2 / r0.
inline double bi_energy_coefficient_gamma() {
  const double g = std::tgamma(0.25);
  return g * g / (6.0 * std::sqrt(M_PI));
}

/// Gamma(1/4)^2 / (4 sqrt(pi)), the Born-Infeld central potential in units of e / r0.
inline double bi_central_potential_gamma() {
  const double g = std::tgamma(0.25);
  return g * g / (4.0 * std::sqrt(M_PI));
}

/// integral_0^inf (sqrt(1 + x^4) - x^2) dx by double-exponential quadrature.
inline double bi_energy_coefficient_quadrature() {
  boost::math::quadrature::exp_sinh<double> integrator;
  const auto f = [](double x) {
    const double x2 = x * x;
    return 1.0 / (std::sqrt(1.0 + x2 * x2) + x2);  // == sqrt(1+x^4) - x^2 without cancellation
  };
  return integrator.integrate(f);
}

/// integral_0^inf dx / sqrt(1 + x^4) by double-exponential quadrature.
inline double bi_central_potential_quadrature() {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([](double x) { return 1.0 / std::sqrt(1.0 + x * x * x * x); });
}

/// Central-difference derivative with step h.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

}  // namespace nled::oracle
