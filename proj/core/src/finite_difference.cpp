#include "nled/finite_difference.hpp"

#include <algorithm>
#include <stdexcept>

#include "nled/errors.hpp"
#include "nled/quadrature.hpp"

namespace nled {

std::vector<double> first_derivative_weights(double x0, std::span<const double> nodes) {
  const std::size_t n = nodes.size();
  // c[i][k]: weight of node i for derivative order k (k = 0, 1).
  std::vector<double> c0(n, 0.0);
  std::vector<double> c1(n, 0.0);
  if (n == 0) return c1;
  double a = 1.0;
  double dz = nodes[0] - x0;
  c0[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, 1);
    double b = 1.0;
    const double dz_prev = dz;
    dz = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double d = nodes[i] - nodes[j];
      b *= d;
      if (j == i - 1) {
        if (mn >= 1) c1[i] = a * (c0[i - 1] - dz_prev * c1[i - 1]) / b;
        c0[i] = -a * dz_prev * c0[i - 1] / b;
      }
      if (mn >= 1) c1[j] = (dz * c1[j] - c0[j]) / d;
      c0[j] = dz * c0[j] / d;
    }
    a = b;
  }
  return c1;
}

std::vector<double> stencil_derivative(std::span<const double> f, std::span<const char> valid, double h,
                                       std::size_t first, std::size_t count, std::size_t stencil) {
  if (valid.size() != f.size() || first + count > f.size()) {
    throw Error(ErrorKind::Configuration, "stencil_derivative: inconsistent sample arrays");
  }
  // Bounds of the run of valid samples containing each index.
  const std::size_t n = f.size();
  std::vector<std::size_t> run_start(n), run_end(n);
  for (std::size_t j = 0; j < n; ++j) run_start[j] = (j > 0 && valid[j] && valid[j - 1]) ? run_start[j - 1] : j;
  for (std::size_t j = n; j-- > 0;) run_end[j] = (j + 1 < n && valid[j] && valid[j + 1]) ? run_end[j + 1] : j;

  std::vector<double> out(count, 0.0);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t j = first + t;
    if (!valid[j]) continue;
    const std::size_t run_lo = run_start[j];
    const std::size_t run_hi = run_end[j];
    const std::size_t run = run_hi - run_lo + 1;
    const std::size_t width = std::min(stencil, run);
    if (width < 2) {
      throw Error(ErrorKind::Configuration, "stencil_derivative: isolated sample", {{"index", double(j)}});
    }
    const std::size_t half = width / 2;
    std::size_t lo = j >= half ? j - half : 0;
    lo = std::clamp(lo, run_lo, run_hi + 1 - width);

    std::vector<double> nodes(width);
    for (std::size_t i = 0; i < width; ++i) {
      nodes[i] = (static_cast<double>(lo + i) - static_cast<double>(j)) * h;
    }
    const auto w = first_derivative_weights(0.0, nodes);
    std::vector<double> terms(width);
    for (std::size_t i = 0; i < width; ++i) terms[i] = w[i] * f[lo + i];
    out[t] = pairwise_sum(terms.data(), terms.size());
  }
  return out;
}

std::vector<double> stencil_derivative(std::span<const double> f, double h, std::size_t stencil) {
  const std::vector<char> valid(f.size(), 1);
  return stencil_derivative(f, valid, h, 0, f.size(), stencil);
}

double gregory_integral(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  std::vector<double> w(n, 1.0);
  if (n >= 8) {
    constexpr double kEnd[4] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0, 1.0};
    for (std::size_t i = 0; i < 4; ++i) {
      w[i] = kEnd[i];
      w[n - 1 - i] = kEnd[i];
    }
  } else {
    w.front() = w.back() = 0.5;
  }
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) terms[i] = w[i] * f[i];
  return h * pairwise_sum(terms.data(), n);
}

}  // namespace nled
