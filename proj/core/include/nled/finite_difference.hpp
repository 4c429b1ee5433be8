#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nled {

/// Fornberg weights w_i such that f'(x0) ~= sum_i w_i f(nodes[i]).
std::vector<double> first_derivative_weights(double x0, std::span<const double> nodes);

/// First derivative of samples on a uniform coordinate with spacing h.
///
/// `f` may be padded with ghost samples; the derivative is returned for indices
/// [first, first + count). Samples with valid[j] == 0 are never touched. Each target uses
/// `stencil` consecutive valid samples, centered where possible and shifted one-sided at
/// the ends of its valid run.
std::vector<double> stencil_derivative(std::span<const double> f, std::span<const char> valid, double h,
                                       std::size_t first, std::size_t count, std::size_t stencil = 9);

/// Same, all samples valid, derivative at every sample.
std::vector<double> stencil_derivative(std::span<const double> f, double h, std::size_t stencil = 9);

/// Integral of uniformly spaced samples by the trapezoid rule with fourth-order Gregory end
/// corrections (plain trapezoid below 8 samples).
double gregory_integral(std::span<const double> f, double h);

}  // namespace nled
