#include "nled/series_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "nled/errors.hpp"

namespace nled {

namespace {

constexpr double kMaxCondition = 1e8;

// (E, H) in units of the sample amplitude.
std::vector<FieldVectors> design_configurations(bool higher_order) {
  auto cfg = [](Vec3 E, Vec3 H) { return FieldVectors{E, H}; };
  const Vec3 x = Vec3::UnitX();
  std::vector<FieldVectors> out = {
      cfg(x, Vec3::Zero()),
      cfg(Vec3::Zero(), Vec3::UnitY()),
      cfg(x, 0.5 * x),
      cfg(x, 0.5 * Vec3::UnitY()),
      cfg(x, 0.5 * Vec3(3.0 / 5.0, 4.0 / 5.0, 0.0)),
      cfg(x, 0.5 * Vec3(4.0 / 5.0, 3.0 / 5.0, 0.0)),
      cfg(x, 0.5 * Vec3(5.0 / 13.0, 12.0 / 13.0, 0.0)),
  };
  if (higher_order) {
    // A second |H| separates I2^2 from I1 I2^2.
    out.push_back(cfg(x, Vec3(3.0 / 5.0, 4.0 / 5.0, 0.0) / 3.0));
    out.push_back(cfg(x, Vec3(12.0 / 13.0, 5.0 / 13.0, 0.0) / 3.0));
    out.push_back(cfg(x, Vec3(-3.0 / 5.0, 4.0 / 5.0, 0.0) / 3.0));
  }
  return out;
}

}  // namespace

CoefficientEstimate estimate_taylor_coefficients(const LagrangianModel& m, double sample_scale,
                                                 bool higher_order) {
  if (!(sample_scale > 0.0 && sample_scale <= 0.05)) {
    throw Error(ErrorKind::Configuration, "sample_scale must lie in (0, 0.05]", {{"sample_scale", sample_scale}});
  }
  if (m.kind() == ModelKind::MieSqrt) {
    throw Error(ErrorKind::Unsupported, "mie-sqrt has no small-field expansion in I1, I2");
  }
  const double a = sample_scale * m.field_scale().value_or(1.0);
  const double a2 = a * a;
  const double a4 = a2 * a2;
  const double a6 = a4 * a2;

  const auto configs = design_configurations(higher_order);
  const Eigen::Index rows = Eigen::Index(configs.size());
  const Eigen::Index cols = higher_order ? 6 : 3;
  // Columns are scaled by a^2, a^4 (and a^6) so that entries are O(1).
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd L(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const FieldVectors F{a * configs[std::size_t(i)].E, a * configs[std::size_t(i)].H};
    const auto inv = invariants(F);
    const double i1 = inv.I1 / a2;
    const double i2 = inv.I2 / a2;
    A(i, 0) = i1;
    A(i, 1) = i1 * i1;
    A(i, 2) = i2 * i2;
    if (higher_order) {
      A(i, 3) = i1 * i2;
      A(i, 4) = i1 * i1 * i1;
      A(i, 5) = i1 * i2 * i2;
    }
    L(i) = lagrangian_density(m, F);
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(condition <= kMaxCondition)) {
    throw Error(ErrorKind::NumericalFailure, "ill-conditioned coefficient design", {{"condition", condition}});
  }
  const Eigen::VectorXd z = svd.solve(L);
  const Eigen::VectorXd fit = A * z;

  CoefficientEstimate out;
  out.c1_hat = z(0) / a2;
  out.c20_hat = z(1) / a4;
  out.c02_hat = z(2) / a4;
  if (higher_order) {
    out.gamma_hat = z(3) / a4;
    out.xi_hat = z(4) / a6;
    out.zeta_hat = z(5) / a6;
  }
  out.condition = condition;
  out.residual = (L - fit).cwiseAbs().maxCoeff();
  out.sample_scale = L.cwiseAbs().maxCoeff();
  return out;
}

LagrangianModel polynomial_from_model(const LagrangianModel& m, double sample_scale) {
  const auto est = estimate_taylor_coefficients(m, sample_scale);
  PolynomialCoefficients k;
  k.alpha = est.c20_hat;
  k.beta = est.c02_hat;
  return LagrangianModel::polynomial(k);
}

}  // namespace nled
