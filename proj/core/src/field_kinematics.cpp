#include "nled/field_kinematics.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "nled/errors.hpp"

namespace nled {

namespace {

double minkowski_norm2(double time_part, const Vec3& space_part) {
  return -time_part * time_part + space_part.squaredNorm();
}

}  // namespace

InvariantSet invariants(const FieldVectors& F, const std::optional<FourPotential>& A) {
  InvariantSet out;
  out.I1 = F.E.squaredNorm() - F.H.squaredNorm();
  out.I2 = F.E.dot(F.H);
  if (A) {
    out.I3 = A->A.squaredNorm() - A->phi * A->phi;
    out.I4 = minkowski_norm2(F.E.dot(A->A), A->phi * F.E + A->A.cross(F.H));
    out.I5 = minkowski_norm2(F.H.dot(A->A), A->phi * F.H - A->A.cross(F.E));
  }
  return out;
}

FierzSides fierz_identity_sides(const FieldVectors& F) {
  const double e2 = F.E.squaredNorm();
  const double h2 = F.H.squaredNorm();
  const double s = e2 + h2;
  const double d = e2 - h2;
  const double eh = F.E.dot(F.H);
  return {s * s - 4.0 * F.E.cross(F.H).squaredNorm(), d * d + 4.0 * eh * eh};
}

EnergyMomentumDensity energy_momentum_density(const FieldVectors& F, double c) {
  return {(F.E.squaredNorm() + F.H.squaredNorm()) / (8.0 * M_PI),
          F.E.cross(F.H) / (4.0 * M_PI * c)};
}

FieldVectors boost(const FieldVectors& F, const Vec3& beta) {
  const double b2 = beta.squaredNorm();
  if (!(b2 < 1.0)) {
    throw Error(ErrorKind::DomainExceeded, "boost speed must satisfy |beta| < 1",
                {{"beta", std::sqrt(b2)}});
  }
  if (b2 == 0.0) return F;
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const Vec3 n = beta / std::sqrt(b2);

  const Vec3 E_par = n.dot(F.E) * n;
  const Vec3 H_par = n.dot(F.H) * n;
  FieldVectors out;
  out.E = E_par + gamma * (F.E - E_par + beta.cross(F.H));
  out.H = H_par + gamma * (F.H - H_par - beta.cross(F.E));
  return out;
}

FourPotential gauge_shift(const FourPotential& A, double dchi_dct, const Vec3& grad_chi) {
  return {A.phi - dchi_dct, A.A + grad_chi};
}

}  // namespace nled
