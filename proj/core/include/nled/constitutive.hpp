#pragma once

#include <optional>

#include "nled/lagrangian.hpp"

namespace nled {

/// Static (H = 0) constitutive relation D = 4 pi |dL/dE| and its inverse.
///
/// All quantities here are magnitudes of radial fields; E >= 0, D >= 0.

double displacement_from_field(const LagrangianModel& m, double E);

/// dD/dE at field magnitude E.
double displacement_slope(const LagrangianModel& m, double E);

/// D(E) - E evaluated without cancellation, i.e. 4 pi times the vacuum polarization.
/// Maxwell: 0. Stays accurate to full relative precision in the weak-field tail.
double displacement_excess(const LagrangianModel& m, double E);

/// Upper end of the field domain (E0 for Born-Infeld), if the model has one.
std::optional<double> field_limit(const LagrangianModel& m) noexcept;

/// Maximum of D(E) for models whose constitutive curve turns over.
struct DisplacementPeak {
  double E = 0.0;
  double D = 0.0;
};

/// Log model: (E0, E0/2). Polynomial: first positive zero of dD/dE, if any.
std::optional<DisplacementPeak> displacement_peak(const LagrangianModel& m);

enum class Branch { Unique, LowerOfTwo };

struct InversionResult {
  double E = 0.0;
  int iterations = 0;
  /// |D(E) - D| / D.
  double residual = 0.0;
  Branch branch = Branch::Unique;
  /// True when adjacent doubles in E already bracket the root; close to the Born-Infeld
  /// limit D(E) varies faster than E can be resolved and the residual is reported as is.
  bool resolution_limited = false;
};

struct InversionOptions {
  double rel_tol = 1e-13;
  int max_iterations = 200;
};

/// Solves displacement_from_field(m, E) = D by bracketing plus safeguarded Newton.
///
/// Models with a turning point return the lower root (connected to E = 0) tagged
/// Branch::LowerOfTwo. Throws Error{NoSolution} with diagnostics {D, D_max_attainable}
/// above the attainable maximum and Error{ConvergenceFailure} after max_iterations.
InversionResult field_from_displacement(const LagrangianModel& m, double D,
                                        const InversionOptions& options = {});

}  // namespace nled
