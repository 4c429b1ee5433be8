#pragma once

#include <cstddef>
#include <functional>

namespace nled {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  std::size_t max_subdiv = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< |Kronrod - Gauss| summed over the final partition
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss-Kronrod on a finite interval. Endpoints are never evaluated.
/// The worst interval is bisected until error <= max(abs_tol, rel_tol |value|); the
/// partition is summed left to right pairwise so the value is independent of bisection order.
/// Throws Error{NumericalFailure} with the achieved error when max_subdiv is exhausted.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// A half-line integral evaluated at two tolerance levels.
struct RefinedIntegral {
  double value = 0.0;
  double error = 0.0;
  double coarse_value = 0.0;
  double coarse_error = 0.0;  ///< should bound |value - coarse_value|
};

/// Integral of g over [x_cut, inf) for a dimensionless integrand with natural scale x ~ 1.
///
/// [x_cut, 1] is split by decades and [1, inf) is mapped through x = 1/t. With x_cut = 0
/// the inner decades are accumulated until they are negligible; if three consecutive
/// decades fail to contract the integral is reported as Error{Divergent} rather than
/// returning a large number. The coarse pass uses tolerances 100x looser.
RefinedIntegral integrate_half_line(const Integrand& g, double x_cut, const QuadratureSpec& spec);

/// Deterministic pairwise sum.
double pairwise_sum(const double* values, std::size_t n) noexcept;

}  // namespace nled
