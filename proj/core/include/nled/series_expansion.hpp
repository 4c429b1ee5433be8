#pragma once

#include <optional>

#include "nled/lagrangian.hpp"

namespace nled {

/// Least-squares estimate of the small-field Taylor coefficients of L(I1, I2).
struct CoefficientEstimate {
  double c1_hat = 0.0;
  double c20_hat = 0.0;
  double c02_hat = 0.0;
  /// Present only with higher_order: coefficients of I1 I2, I1^3 and I1 I2^2.
  std::optional<double> gamma_hat;
  std::optional<double> xi_hat;
  std::optional<double> zeta_hat;
  /// 2-norm condition number of the column-scaled design matrix.
  double condition = 0.0;
  /// max |L_i - fit_i| over the sampled configurations.
  double residual = 0.0;
  /// max |L_i|, the yardstick for the residual.
  double sample_scale = 0.0;
};

/// Samples L at field magnitude a = sample_scale * field_scale on a fixed set of (E, H)
/// configurations: pure E, pure H, H parallel to E, H perpendicular to E and three oblique
/// Pythagorean-triple angles, with |H| = a/2 for the mixed ones. Models without a field
/// scale (Maxwell) use a = sample_scale.
///
/// Requires 0 < sample_scale <= 0.05 (Error{Configuration}); a design condition number
/// above 1e8 raises Error{NumericalFailure}.
CoefficientEstimate estimate_taylor_coefficients(const LagrangianModel& m, double sample_scale,
                                                 bool higher_order = false);

/// Quartic truncation L_N = I1/8pi + c20_hat I1^2 + c02_hat I2^2 as a Polynomial model.
LagrangianModel polynomial_from_model(const LagrangianModel& m, double sample_scale);

}  // namespace nled
