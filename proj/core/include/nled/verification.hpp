#pragma once

#include <cstddef>
#include <cstdint>

namespace nled {

/// Random-draw checks of the field identities: Fierz (both sides), the energy-momentum
/// density form of its left side, and boost invariance of I1, I2.
struct InvariantSuiteReport {
  std::size_t draws = 0;
  std::size_t boosts = 0;
  /// max |lhs - rhs| / (1 + |lhs|) over draws in [-1, 1]^6.
  double max_rel_err_fierz = 0.0;
  /// max |(8pi)^2 (U^2 - c^2 g^2) - lhs| / (1 + |lhs|).
  double max_rel_err_energy_momentum = 0.0;
  /// max |I' - I| / (E^2 + H^2) over I1 and I2, with |beta| <= max_beta.
  double max_rel_err_boost = 0.0;
};

InvariantSuiteReport run_invariant_suite(std::size_t draws, std::size_t boosts, std::uint64_t seed,
                                         double max_beta = 0.9);

/// Random-draw checks of the interaction Lagrangian identities.
struct InteractionSuiteReport {
  std::size_t draws = 0;
  /// max |form_a - form_b| / max(1, |form_a|).
  double max_form_discrepancy = 0.0;
  /// max identity_residual / max(1, |e^2 A_mu A^mu|).
  double max_identity_residual = 0.0;
  /// max |form_a' - form_a| / max(1, |form_a|) under boosts of speed beta in random directions.
  double max_boost_discrepancy = 0.0;
};

InteractionSuiteReport run_interaction_suite(std::size_t draws, std::uint64_t seed, double c, double beta = 0.6);

}  // namespace nled
