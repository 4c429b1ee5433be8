#include "nled/constitutive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nled/errors.hpp"

namespace nled {

namespace {

void require_magnitude(double E, const char* what) {
  if (!(E >= 0.0) || !std::isfinite(E)) {
    throw Error(ErrorKind::Configuration, std::string(what) + " must be a finite magnitude >= 0",
                {{what, E}});
  }
}

[[noreturn]] void mie_unsupported() {
  throw Error(ErrorKind::Unsupported, "mie-sqrt has no static constitutive relation");
}

// 1 - (E/E0)^2 for Born-Infeld, throwing at or beyond the limiting field.
double born_infeld_radicand(const LagrangianModel& m, double E) {
  const double y = E / *m.E0();
  const double radicand = (1.0 - y) * (1.0 + y);
  if (!(radicand > 0.0)) {
    throw Error(ErrorKind::DomainExceeded, "born-infeld: field at or beyond the limiting field E0",
                {{"E", E}, {"E0", *m.E0()}});
  }
  return radicand;
}

}  // namespace

double displacement_from_field(const LagrangianModel& m, double E) {
  require_magnitude(E, "E");
  switch (m.kind()) {
    case ModelKind::Maxwell:
      return E;
    case ModelKind::BornInfeld:
      return E / std::sqrt(born_infeld_radicand(m, E));
    case ModelKind::LogSchroedinger: {
      const double y = E / *m.E0();
      return E / (1.0 + y * y);
    }
    case ModelKind::Polynomial:
      return E + displacement_excess(m, E);
    case ModelKind::MieSqrt:
      mie_unsupported();
  }
  return 0.0;
}

double displacement_slope(const LagrangianModel& m, double E) {
  require_magnitude(E, "E");
  switch (m.kind()) {
    case ModelKind::Maxwell:
      return 1.0;
    case ModelKind::BornInfeld: {
      const double radicand = born_infeld_radicand(m, E);
      return 1.0 / (radicand * std::sqrt(radicand));
    }
    case ModelKind::LogSchroedinger: {
      const double y2 = (E / *m.E0()) * (E / *m.E0());
      return (1.0 - y2) / ((1.0 + y2) * (1.0 + y2));
    }
    case ModelKind::Polynomial: {
      const auto& k = m.coeffs();
      const double E2 = E * E;
      return 1.0 + 4.0 * M_PI * (12.0 * k.alpha * E2 + 30.0 * k.xi * E2 * E2);
    }
    case ModelKind::MieSqrt:
      mie_unsupported();
  }
  return 0.0;
}

double displacement_excess(const LagrangianModel& m, double E) {
  require_magnitude(E, "E");
  switch (m.kind()) {
    case ModelKind::Maxwell:
      return 0.0;
    case ModelKind::BornInfeld: {
      const double y = E / *m.E0();
      const double root = std::sqrt(born_infeld_radicand(m, E));
      return E * y * y / (root * (1.0 + root));
    }
    case ModelKind::LogSchroedinger: {
      const double y2 = (E / *m.E0()) * (E / *m.E0());
      return -E * y2 / (1.0 + y2);
    }
    case ModelKind::Polynomial: {
      const auto& k = m.coeffs();
      const double E3 = E * E * E;
      return 4.0 * M_PI * (4.0 * k.alpha * E3 + 6.0 * k.xi * E3 * E * E);
    }
    case ModelKind::MieSqrt:
      mie_unsupported();
  }
  return 0.0;
}

std::optional<double> field_limit(const LagrangianModel& m) noexcept {
  if (m.kind() == ModelKind::BornInfeld) return m.E0();
  return std::nullopt;
}

std::optional<DisplacementPeak> displacement_peak(const LagrangianModel& m) {
  switch (m.kind()) {
    case ModelKind::LogSchroedinger:
      return DisplacementPeak{*m.E0(), 0.5 * *m.E0()};
    case ModelKind::Polynomial: {
      // dD/dE = 1 + 48 pi alpha y + 120 pi xi y^2 with y = E^2.
      const double a = 120.0 * M_PI * m.coeffs().xi;
      const double b = 48.0 * M_PI * m.coeffs().alpha;
      double y = std::numeric_limits<double>::infinity();
      if (a == 0.0) {
        if (b < 0.0) y = -1.0 / b;
      } else {
        const double disc = b * b - 4.0 * a;
        if (disc >= 0.0) {
          const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
          for (double root : {q / a, q != 0.0 ? 1.0 / q : -1.0}) {
            if (root > 0.0) y = std::min(y, root);
          }
        }
      }
      if (!std::isfinite(y)) return std::nullopt;
      const double E = std::sqrt(y);
      return DisplacementPeak{E, displacement_from_field(m, E)};
    }
    default:
      return std::nullopt;
  }
}

InversionResult field_from_displacement(const LagrangianModel& m, double D,
                                        const InversionOptions& options) {
  require_magnitude(D, "D");
  if (m.kind() == ModelKind::MieSqrt) mie_unsupported();

  InversionResult out;
  const auto peak = displacement_peak(m);
  out.branch = peak ? Branch::LowerOfTwo : Branch::Unique;
  if (D == 0.0) return out;
  if (peak && D > peak->D) {
    throw Error(ErrorKind::NoSolution,
                std::string(m.name()) + ": displacement exceeds the attainable maximum",
                {{"D", D}, {"D_max_attainable", peak->D}});
  }

  auto residual = [&](double E) { return displacement_from_field(m, E) - D; };

  // Bracket [lo, hi] with residual(lo) < 0 <= residual(hi).
  double lo = 0.0;
  double hi = 0.0;
  double f_hi = 0.0;
  const auto limit = field_limit(m);
  if (peak) {
    hi = peak->E;
    f_hi = peak->D - D;
  } else {
    hi = limit ? std::min(D, 0.5 * *limit) : D;
    f_hi = residual(hi);
    while (f_hi < 0.0) {
      if (++out.iterations > 4 * options.max_iterations) {
        throw Error(ErrorKind::ConvergenceFailure, "could not bracket the field",
                    {{"D", D}, {"E_hi", hi}});
      }
      double next = limit ? std::min(2.0 * hi, 0.5 * (hi + *limit)) : 2.0 * hi;
      // The midpoint of the last two doubles below E0 rounds up onto E0 itself.
      if (limit && next >= *limit) next = std::nextafter(*limit, 0.0);
      if (!std::isfinite(next)) {
        throw Error(ErrorKind::ConvergenceFailure, "field bracket overflowed", {{"D", D}});
      }
      if (!(next > hi)) {
        // hi is the last double below the limiting field; D(hi) still falls short.
        out.E = hi;
        out.residual = std::abs(f_hi) / D;
        out.resolution_limited = true;
        return out;
      }
      lo = hi;
      hi = next;
      f_hi = residual(hi);
    }
    // Strong nonlinearity puts the root decades below E = D; tighten from below
    // so Newton does not crawl down from a bracket starting at zero.
    while (lo == 0.0) {
      const double trial = hi / 8.0;
      if (++out.iterations > 4 * options.max_iterations || trial == 0.0) break;
      const double f_trial = residual(trial);
      if (f_trial < 0.0) {
        lo = trial;
      } else {
        hi = trial;
        f_hi = f_trial;
      }
    }
  }

  const double tol = options.rel_tol * D;
  double E = hi;
  double fE = f_hi;
  for (int it = 0; it < options.max_iterations; ++it) {
    ++out.iterations;
    if (std::abs(fE) <= tol) {
      out.E = E;
      out.residual = std::abs(fE) / D;
      return out;
    }
    if (fE < 0.0) {
      lo = E;
    } else {
      hi = E;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) {
      const double f_lo = residual(lo);
      const double f_hi_final = residual(hi);
      out.E = std::abs(f_lo) < std::abs(f_hi_final) ? lo : hi;
      out.residual = std::min(std::abs(f_lo), std::abs(f_hi_final)) / D;
      out.resolution_limited = out.residual > options.rel_tol;
      return out;
    }
    const double slope = displacement_slope(m, E);
    double next = 0.5 * (lo + hi);
    if (slope > 0.0 && std::isfinite(slope)) {
      const double newton = E - fE / slope;
      if (newton > lo && newton < hi) next = newton;
    }
    if (next == E) next = 0.5 * (lo + hi);
    E = next;
    fE = residual(E);
  }
  throw Error(ErrorKind::ConvergenceFailure, "field inversion did not converge",
              {{"D", D}, {"E", E}, {"residual", std::abs(fE) / D}});
}

}  // namespace nled
