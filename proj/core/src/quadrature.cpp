#include "nled/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>
#include <vector>

#include "nled/errors.hpp"

namespace nled {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    throw Error(ErrorKind::NumericalFailure, "non-finite integrand value", {{"a", a}, {"b", b}});
  }
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

QuadratureSpec loosened(const QuadratureSpec& spec, double factor) {
  return {spec.rel_tol * factor, spec.abs_tol * factor, spec.max_subdiv};
}

struct Accumulator {
  std::vector<double> values;
  std::vector<double> errors;
  void add(const QuadratureResult& r) {
    values.push_back(r.value);
    errors.push_back(r.error);
  }
  double value() const { return pairwise_sum(values.data(), values.size()); }
  double error() const { return pairwise_sum(errors.data(), errors.size()); }
};

// Integral over [x_cut, inf) at one tolerance level. Pieces get a small share of the
// absolute tolerance so that the floor applies to the total.
std::pair<double, double> half_line_once(const Integrand& g, double x_cut, const QuadratureSpec& spec) {
  const QuadratureSpec piece{spec.rel_tol, spec.abs_tol * 1e-3, spec.max_subdiv};
  Accumulator acc;
  double scale = 0.0;  // sum of |piece|, the termination yardstick when pieces cancel
  auto add_piece = [&](const Integrand& f, double a, double b) {
    const auto r = integrate(f, a, b, piece);
    acc.add(r);
    scale += std::abs(r.value);
    return r;
  };

  // Outer part [max(1, x_cut), inf) via x = 1/t, t in (0, 1/max(1, x_cut)].
  const double outer_start = std::max(1.0, x_cut);
  const Integrand mapped = [&g](double t) { return g(1.0 / t) / (t * t); };
  add_piece(mapped, 0.0, 1.0 / outer_start);
  if (x_cut >= 1.0) return {acc.value(), acc.error()};

  if (x_cut > 0.0) {
    double upper = 1.0;
    while (upper > x_cut) {
      const double lower = std::max(x_cut, 0.1 * upper);
      add_piece(g, lower, upper);
      upper = lower;
    }
    return {acc.value(), acc.error()};
  }

  // No cutoff: walk inward by decades, watching the pieces contract.
  constexpr int kMaxDecades = 80;
  constexpr int kNonContracting = 3;
  double upper = 1.0;
  double previous = 0.0;
  int stalled = 0;
  for (int k = 0; k < kMaxDecades; ++k) {
    const double lower = 0.1 * upper;
    const auto r = add_piece(g, lower, upper);
    upper = lower;
    const double magnitude = std::abs(r.value);
    if (k > 0) {
      stalled = (magnitude > 0.0 && magnitude >= 0.9 * previous) ? stalled + 1 : 0;
      if (stalled >= kNonContracting) {
        throw Error(ErrorKind::Divergent,
                    "inner partial integrals grow without bound as the cutoff shrinks",
                    {{"last_cutoff", upper}, {"last_piece", r.value}, {"partial_sum", acc.value()}});
      }
    }
    previous = magnitude;
    if (k > 0 && stalled == 0 && magnitude <= 0.01 * spec.rel_tol * scale) {
      add_piece(g, 0.0, upper);
      return {acc.value(), acc.error()};
    }
  }
  throw Error(ErrorKind::NumericalFailure, "inner integral did not settle within the decade budget",
              {{"partial_sum", acc.value()}, {"last_cutoff", upper}});
}

}  // namespace

double pairwise_sum(const double* values, std::size_t n) noexcept {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += values[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, n - half);
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  QuadratureResult out;
  if (a == b) return out;
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw Error(ErrorKind::Configuration, "integration limits must be finite", {{"a", a}, {"b", b}});
  }

  std::priority_queue<Segment> worst_first;
  Segment first = gauss_kronrod(f, a, b);
  out.evaluations = 15;
  double total = first.value;
  double error = first.error;
  worst_first.push(first);

  auto converged = [&] { return error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  while (!converged()) {
    if (worst_first.size() >= spec.max_subdiv) {
      throw Error(ErrorKind::NumericalFailure, "quadrature tolerance not met within max_subdiv",
                  {{"achieved_error", error}, {"value", total}, {"a", a}, {"b", b}});
    }
    const Segment s = worst_first.top();
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > std::min(s.a, s.b) && mid < std::max(s.a, s.b))) {
      throw Error(ErrorKind::NumericalFailure, "interval became too small to bisect",
                  {{"achieved_error", error}, {"at", s.a}});
    }
    worst_first.pop();
    const Segment left = gauss_kronrod(f, s.a, mid);
    const Segment right = gauss_kronrod(f, mid, s.b);
    out.evaluations += 30;
    total += left.value + right.value - s.value;
    error += left.error + right.error - s.error;
    worst_first.push(left);
    worst_first.push(right);
  }

  std::vector<Segment> parts;
  parts.reserve(worst_first.size());
  while (!worst_first.empty()) {
    parts.push_back(worst_first.top());
    worst_first.pop();
  }
  std::sort(parts.begin(), parts.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  std::vector<double> values(parts.size());
  std::vector<double> errors(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    values[i] = parts[i].value;
    errors[i] = parts[i].error;
  }
  out.value = pairwise_sum(values.data(), values.size());
  out.error = pairwise_sum(errors.data(), errors.size());
  out.intervals = parts.size();
  return out;
}

RefinedIntegral integrate_half_line(const Integrand& g, double x_cut, const QuadratureSpec& spec) {
  if (!(x_cut >= 0.0) || !std::isfinite(x_cut)) {
    throw Error(ErrorKind::Configuration, "cutoff must be finite and >= 0", {{"x_cut", x_cut}});
  }
  RefinedIntegral out;
  std::tie(out.value, out.error) = half_line_once(g, x_cut, spec);
  std::tie(out.coarse_value, out.coarse_error) = half_line_once(g, x_cut, loosened(spec, 100.0));
  return out;
}

}  // namespace nled
