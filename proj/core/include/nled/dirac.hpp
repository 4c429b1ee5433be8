#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nled/field_kinematics.hpp"

namespace nled {

using SpinMatrix = Eigen::Matrix4cd;

/// Dirac-Pauli representation: beta = diag(1, 1, -1, -1), alpha_i = [[0, sigma_i], [sigma_i, 0]].
struct DiracBasis {
  std::array<SpinMatrix, 3> alpha;
  SpinMatrix beta;
};

DiracBasis dirac_basis();

struct SlashSquare {
  SpinMatrix M;  ///< (beta eps + c alpha.p)^2
  /// Frobenius norm of M - (eps^2 + c^2 |p|^2) I; zero by the anticommutation relations.
  double residual_anticommutation = 0.0;
  /// Frobenius norm of M - (-(eps^2 - c^2 |p|^2)) I, i.e. the deviation from reading the
  /// linear form as an exact matrix square root of e^2 A_mu A^mu. Generically nonzero.
  double residual_square_root_reading = 0.0;
};

SlashSquare slash_square(double eps, const Vec3& p, double c);

/// beta m c^2.
SpinMatrix mass_term(double m, double c);

/// {A, B} = AB + BA.
SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Reported only; not expected to vanish.
  bool informational = false;
};

/// The anticommutation table, Hermiticity, slash-square and mass-term identities, plus the
/// informational residual of the square-root reading at the fixture eps = 3, p = (1, 2, 3), c = 1.
std::vector<IdentityCheck> verify_dirac_identities(double c = 1.0, double m = 1.0);

}  // namespace nled
