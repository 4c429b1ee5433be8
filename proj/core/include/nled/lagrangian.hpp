#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nled/field_kinematics.hpp"

namespace nled {

enum class ModelKind { Maxwell, BornInfeld, LogSchroedinger, Polynomial, MieSqrt };

/// CLI/config spelling: "maxwell", "born-infeld", "log-schroedinger", "polynomial", "mie-sqrt".
std::string_view to_string(ModelKind kind) noexcept;
/// Throws Error{Configuration} on an unknown name.
ModelKind parse_model_kind(std::string_view name);

/// Coefficients of the quartic/sextic weak-field Lagrangian
///   L = I1/8pi + alpha I1^2 + beta I2^2 + gamma I1 I2 + xi I1^3 + zeta I1 I2^2.
struct PolynomialCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
};

/// Immutable descriptor of a nonlinear vacuum Lagrangian L(I1, I2).
///
/// Every model is normalized so that its weak-field limit is +I1/8pi.
class LagrangianModel {
 public:
  static LagrangianModel maxwell();
  /// L = (E0^2/4pi) (1 - sqrt(1 - I1/E0^2 - I2^2/E0^4)).
  static LagrangianModel born_infeld(double E0);
  /// L = (E0^2/8pi) ln(1 + I1/E0^2).
  static LagrangianModel log_schroedinger(double E0);
  static LagrangianModel polynomial(const PolynomialCoefficients& coeffs);
  /// Sign branch of the square-root potential term s * sqrt(|A_mu A^mu|); s must be +1 or -1.
  static LagrangianModel mie_sqrt(int sign);

  ModelKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

  /// Limiting/characteristic field E0 for Born-Infeld and log models.
  std::optional<double> E0() const noexcept { return E0_; }
  const PolynomialCoefficients& coeffs() const noexcept { return coeffs_; }
  int mie_sign() const noexcept { return mie_sign_; }

  /// Field strength at which the nonlinearity becomes O(1): E0 when the model has one,
  /// 1/sqrt(16 pi |alpha|) (or the sextic analogue) for polynomials, none for Maxwell.
  std::optional<double> field_scale() const noexcept;

 private:
  LagrangianModel() = default;

  ModelKind kind_ = ModelKind::Maxwell;
  std::optional<double> E0_;
  PolynomialCoefficients coeffs_;
  int mie_sign_ = 1;
};

/// L as a function of the two field invariants. Throws Error{DomainExceeded} outside the
/// model's domain and Error{Unsupported} for MieSqrt (which needs a potential).
double lagrangian_of_invariants(const LagrangianModel& m, double I1, double I2);

double lagrangian_density(const LagrangianModel& m, const FieldVectors& F);

/// MieSqrt evaluation s * sqrt(|I3|); other models ignore the potential.
double lagrangian_density(const LagrangianModel& m, const FieldVectors& F, const FourPotential& A);

/// L(E, H = 0) for a field magnitude E >= 0, using a cancellation-free radicand near E0.
double lagrangian_static(const LagrangianModel& m, double E);

/// Partial derivatives dL/dI1 and dL/dI2.
struct InvariantPartials {
  double dI1 = 0.0;
  double dI2 = 0.0;
};

/// Requires strict interior of the domain; the boundary itself raises DomainExceeded.
InvariantPartials lagrangian_partials(const LagrangianModel& m, double I1, double I2);

/// Gradient of L with respect to E: 2 E dL/dI1 + H dL/dI2.
Vec3 dL_dE(const LagrangianModel& m, const FieldVectors& F);

/// Coefficients of the small-field expansion L = c1 I1 + c20 I1^2 + c02 I2^2 + ...
struct TaylorReference {
  double c1 = 0.0;
  double c20 = 0.0;
  double c02 = 0.0;
};

/// Throws Error{Unsupported} for MieSqrt.
TaylorReference taylor_reference(const LagrangianModel& m);

}  // namespace nled
