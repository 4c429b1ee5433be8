#pragma once

#include <utility>

#include "nled/field_kinematics.hpp"

namespace nled {

/// A moving charge distribution element.
struct ChargeState {
  double rho = 0.0;       ///< esu/cm^3
  Vec3 v = Vec3::Zero();  ///< cm/s, |v| < c
  double e = 0.0;         ///< total charge, esu
};

/// S_w = phi - (v/c).A. Throws Error{DomainExceeded} for |v| >= c.
double electrokinetic_potential(double phi, const Vec3& v, const Vec3& A, double c);

/// The interaction Lagrangian density in two independent forms.
struct InteractionForms {
  double form_a = 0.0;  ///< rho * S_w
  double form_b = 0.0;  ///< -(1/c) j_mu A_mu with j = (i c rho, rho v), A = (i phi, A)
};

InteractionForms interaction_lagrangian_density(const ChargeState& s, const FourPotential& p, double c);

struct InteractionEnergyMomentum {
  double eps_e = 0.0;            ///< e phi
  Vec3 p_e = Vec3::Zero();       ///< e A / c
  double potential_square = 0.0; ///< e^2 A_mu A^mu = e^2 (A.A - phi^2)
  /// |e^2 A_mu A^mu - (-eps_e^2 + c^2 |p_e|^2)|, zero up to rounding.
  double identity_residual = 0.0;
};

InteractionEnergyMomentum interaction_energy_momentum(double e, const FourPotential& p, double c);

/// Charge element and potential seen from a frame moving with velocity beta*c. rho transforms
/// as the time component of the current four-vector, rho' = gamma rho (1 - beta.v / c).
std::pair<ChargeState, FourPotential> boost_frame(const ChargeState& s, const FourPotential& p,
                                                  const Vec3& beta, double c);

}  // namespace nled
