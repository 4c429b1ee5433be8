#pragma once

#include <optional>

#include <Eigen/Core>

namespace nled {

using Vec3 = Eigen::Vector3d;

/// Electric and magnetic field at a point, Gaussian units (statvolt/cm, gauss).
struct FieldVectors {
  Vec3 E = Vec3::Zero();
  Vec3 H = Vec3::Zero();
};

/// Scalar and vector potential, A_mu = (i phi, A).
struct FourPotential {
  double phi = 0.0;
  Vec3 A = Vec3::Zero();
};

/// The five Lorentz scalars built from the field bivector and the potential.
///
/// I1 = E^2 - H^2 and I2 = E.H are the gauge-invariant pair (the tensor forms are
/// F_{mu nu}F^{mu nu}/4 = -I1/2 and F_{mu nu}F*^{mu nu}/4 = -I2). I3 = A.A - phi^2.
/// I4 and I5 are Minkowski squared norms, signature (-,+,+,+), of the contractions
/// F_{mu nu}A^nu = (E.A, phi E + A x H) and F*_{mu nu}A^nu = (H.A, phi H - A x E).
/// I3..I5 are only present when a potential was supplied.
struct InvariantSet {
  double I1 = 0.0;
  double I2 = 0.0;
  std::optional<double> I3;
  std::optional<double> I4;
  std::optional<double> I5;
};

InvariantSet invariants(const FieldVectors& F, const std::optional<FourPotential>& A = std::nullopt);

/// Both sides of the electromagnetic Fierz identity
///   (E^2 + H^2)^2 - 4|E x H|^2 = (E^2 - H^2)^2 + 4(E.H)^2.
struct FierzSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

FierzSides fierz_identity_sides(const FieldVectors& F);

struct EnergyMomentumDensity {
  double U = 0.0;        ///< (E^2 + H^2) / 8 pi, erg/cm^3
  Vec3 g = Vec3::Zero(); ///< (E x H) / 4 pi c
};

/// Satisfies (8 pi)^2 (U^2 - c^2 |g|^2) == fierz_identity_sides(F).lhs.
EnergyMomentumDensity energy_momentum_density(const FieldVectors& F, double c);

/// Fields seen from a frame moving with velocity beta*c. Throws Error{DomainExceeded} for |beta| >= 1.
FieldVectors boost(const FieldVectors& F, const Vec3& beta);

/// Gauge transformation by chi = k0 * (ct) + grad_chi . x, i.e. phi -> phi - k0, A -> A + grad_chi.
FourPotential gauge_shift(const FourPotential& A, double dchi_dct, const Vec3& grad_chi);

}  // namespace nled
