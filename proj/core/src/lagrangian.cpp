#include "nled/lagrangian.hpp"

#include <cmath>
#include <string>

#include "nled/errors.hpp"

namespace nled {

namespace {

constexpr double kEightPi = 8.0 * M_PI;

void require_positive_field(double E0, std::string_view model) {
  if (!(E0 > 0.0) || !std::isfinite(E0)) {
    throw Error(ErrorKind::Configuration,
                std::string(model) + " requires a finite limiting field E0 > 0", {{"E0", E0}});
  }
}

[[noreturn]] void domain_exceeded(const LagrangianModel& m, const std::string& what, double value) {
  throw Error(ErrorKind::DomainExceeded,
              std::string(m.name()) + ": " + what + " outside the model domain",
              {{what, value}});
}

[[noreturn]] void mie_unsupported() {
  throw Error(ErrorKind::Unsupported,
              "mie-sqrt depends on the four-potential and has no field-only evaluation");
}

// Born-Infeld: with x = I1/E0^2 + I2^2/E0^4, L = (E0^2/4pi) x / (1 + sqrt(1 - x)).
double born_infeld(double E0, double x, double radicand) {
  return E0 * E0 / (4.0 * M_PI) * x / (1.0 + std::sqrt(radicand));
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::Maxwell: return "maxwell";
    case ModelKind::BornInfeld: return "born-infeld";
    case ModelKind::LogSchroedinger: return "log-schroedinger";
    case ModelKind::Polynomial: return "polynomial";
    case ModelKind::MieSqrt: return "mie-sqrt";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (auto kind : {ModelKind::Maxwell, ModelKind::BornInfeld, ModelKind::LogSchroedinger,
                    ModelKind::Polynomial, ModelKind::MieSqrt}) {
    if (name == to_string(kind)) return kind;
  }
  throw Error(ErrorKind::Configuration,
              "unknown model kind '" + std::string(name) +
                  "' (expected maxwell, born-infeld, log-schroedinger, polynomial or mie-sqrt)");
}

LagrangianModel LagrangianModel::maxwell() { return {}; }

LagrangianModel LagrangianModel::born_infeld(double E0) {
  require_positive_field(E0, "born-infeld");
  LagrangianModel m;
  m.kind_ = ModelKind::BornInfeld;
  m.E0_ = E0;
  return m;
}

LagrangianModel LagrangianModel::log_schroedinger(double E0) {
  require_positive_field(E0, "log-schroedinger");
  LagrangianModel m;
  m.kind_ = ModelKind::LogSchroedinger;
  m.E0_ = E0;
  return m;
}

LagrangianModel LagrangianModel::polynomial(const PolynomialCoefficients& coeffs) {
  for (double v : {coeffs.alpha, coeffs.beta, coeffs.gamma, coeffs.xi, coeffs.zeta}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::Configuration, "polynomial coefficients must be finite");
    }
  }
  LagrangianModel m;
  m.kind_ = ModelKind::Polynomial;
  m.coeffs_ = coeffs;
  return m;
}

LagrangianModel LagrangianModel::mie_sqrt(int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::Configuration, "mie-sqrt sign must be +1 or -1", {{"sign", sign}});
  }
  LagrangianModel m;
  m.kind_ = ModelKind::MieSqrt;
  m.mie_sign_ = sign;
  return m;
}

std::optional<double> LagrangianModel::field_scale() const noexcept {
  if (E0_) return E0_;
  if (kind_ == ModelKind::Polynomial) {
    if (coeffs_.alpha != 0.0) return 1.0 / std::sqrt(16.0 * M_PI * std::abs(coeffs_.alpha));
    if (coeffs_.xi != 0.0) return std::pow(24.0 * M_PI * std::abs(coeffs_.xi), -0.25);
  }
  return std::nullopt;
}

double lagrangian_of_invariants(const LagrangianModel& m, double I1, double I2) {
  switch (m.kind()) {
    case ModelKind::Maxwell:
      return I1 / kEightPi;
    case ModelKind::BornInfeld: {
      const double E0 = *m.E0();
      const double x = I1 / (E0 * E0) + (I2 / (E0 * E0)) * (I2 / (E0 * E0));
      const double radicand = 1.0 - x;
      if (radicand < 0.0) domain_exceeded(m, "radicand", radicand);
      return born_infeld(E0, x, radicand);
    }
    case ModelKind::LogSchroedinger: {
      const double E0 = *m.E0();
      const double u = I1 / (E0 * E0);
      if (!(u > -1.0)) domain_exceeded(m, "I1", I1);
      return E0 * E0 / kEightPi * std::log1p(u);
    }
    case ModelKind::Polynomial: {
      const auto& k = m.coeffs();
      return I1 / kEightPi + k.alpha * I1 * I1 + k.beta * I2 * I2 + k.gamma * I1 * I2 +
             k.xi * I1 * I1 * I1 + k.zeta * I1 * I2 * I2;
    }
    case ModelKind::MieSqrt:
      mie_unsupported();
  }
  return 0.0;
}

double lagrangian_density(const LagrangianModel& m, const FieldVectors& F) {
  const auto inv = invariants(F);
  return lagrangian_of_invariants(m, inv.I1, inv.I2);
}

double lagrangian_density(const LagrangianModel& m, const FieldVectors& F, const FourPotential& A) {
  if (m.kind() != ModelKind::MieSqrt) return lagrangian_density(m, F);
  const double I3 = A.A.squaredNorm() - A.phi * A.phi;
  return m.mie_sign() * std::sqrt(std::abs(I3));
}

double lagrangian_static(const LagrangianModel& m, double E) {
  if (m.kind() == ModelKind::BornInfeld) {
    const double E0 = *m.E0();
    const double y = E / E0;
    const double radicand = (1.0 - y) * (1.0 + y);
    if (radicand < 0.0) domain_exceeded(m, "radicand", radicand);
    return born_infeld(E0, y * y, radicand);
  }
  return lagrangian_of_invariants(m, E * E, 0.0);
}

InvariantPartials lagrangian_partials(const LagrangianModel& m, double I1, double I2) {
  switch (m.kind()) {
    case ModelKind::Maxwell:
      return {1.0 / kEightPi, 0.0};
    case ModelKind::BornInfeld: {
      const double E0 = *m.E0();
      const double E02 = E0 * E0;
      const double radicand = 1.0 - I1 / E02 - (I2 / E02) * (I2 / E02);
      if (!(radicand > 0.0)) domain_exceeded(m, "radicand", radicand);
      const double root = std::sqrt(radicand);
      return {1.0 / (kEightPi * root), I2 / (4.0 * M_PI * E02 * root)};
    }
    case ModelKind::LogSchroedinger: {
      const double E0 = *m.E0();
      const double arg = 1.0 + I1 / (E0 * E0);
      if (!(arg > 0.0)) domain_exceeded(m, "I1", I1);
      return {1.0 / (kEightPi * arg), 0.0};
    }
    case ModelKind::Polynomial: {
      const auto& k = m.coeffs();
      return {1.0 / kEightPi + 2.0 * k.alpha * I1 + k.gamma * I2 + 3.0 * k.xi * I1 * I1 +
                  k.zeta * I2 * I2,
              2.0 * k.beta * I2 + k.gamma * I1 + 2.0 * k.zeta * I1 * I2};
    }
    case ModelKind::MieSqrt:
      mie_unsupported();
  }
  return {};
}

Vec3 dL_dE(const LagrangianModel& m, const FieldVectors& F) {
  const auto inv = invariants(F);
  const auto p = lagrangian_partials(m, inv.I1, inv.I2);
  return 2.0 * p.dI1 * F.E + p.dI2 * F.H;
}

TaylorReference taylor_reference(const LagrangianModel& m) {
  switch (m.kind()) {
    case ModelKind::Maxwell:
      return {1.0 / kEightPi, 0.0, 0.0};
    case ModelKind::BornInfeld: {
      const double E02 = *m.E0() * *m.E0();
      return {1.0 / kEightPi, 1.0 / (32.0 * M_PI * E02), 1.0 / (kEightPi * E02)};
    }
    case ModelKind::LogSchroedinger: {
      const double E02 = *m.E0() * *m.E0();
      return {1.0 / kEightPi, -1.0 / (16.0 * M_PI * E02), 0.0};
    }
    case ModelKind::Polynomial:
      return {1.0 / kEightPi, m.coeffs().alpha, m.coeffs().beta};
    case ModelKind::MieSqrt:
      throw Error(ErrorKind::Unsupported, "mie-sqrt has no small-field expansion in I1, I2");
  }
  return {};
}

}  // namespace nled
