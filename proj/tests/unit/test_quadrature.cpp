#include <doctest.h>

#include <cmath>
#include <vector>

#include "nled/errors.hpp"
#include "nled/quadrature.hpp"

using namespace nled;

TEST_CASE("polynomials and smooth functions") {
  const auto r = integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 3.0);
  CHECK(r.value == doctest::Approx(20.0 - 8.0).epsilon(1e-14));
  CHECK(r.error <= 1e-10);

  const auto s = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));

  const auto rev = integrate([](double x) { return std::exp(x); }, 1.0, 0.0);
  CHECK(rev.value == doctest::Approx(1.0 - M_E).epsilon(1e-13));
}

TEST_CASE("endpoint singularities are handled by subdivision") {
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-10, 0.0, 5000});
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.intervals > 1);
}

TEST_CASE("failure carries the achieved error") {
  try {
    integrate([](double x) { return std::sin(1.0 / x) / x; }, 0.0, 1.0, {1e-14, 0.0, 20});
    FAIL("expected NumericalFailure");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NumericalFailure);
    CHECK(std::isfinite(err.diagnostic("achieved_error")));
  }
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, INFINITY), Error);
}

TEST_CASE("half-line integrals") {
  const QuadratureSpec spec;
  const auto a = integrate_half_line([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, spec);
  CHECK(a.value == doctest::Approx(M_PI / 2).epsilon(1e-11));
  CHECK(std::abs(a.value - a.coarse_value) <= a.coarse_error + 1e-15);

  const auto b = integrate_half_line([](double x) { return std::exp(-x); }, 2.0, spec);
  CHECK(b.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-11));

  const auto c = integrate_half_line([](double x) { return 1.0 / (x * x); }, 0.5, spec);
  CHECK(c.value == doctest::Approx(2.0).epsilon(1e-11));

  const auto d = integrate_half_line([](double x) { return std::log(x) / (1.0 + x * x); }, 0.0, spec);
  CHECK(std::abs(d.value) <= 1e-9);
}

TEST_CASE("divergent inner integrals are reported as such") {
  try {
    integrate_half_line([](double x) { return 1.0 / (x * x * (1.0 + x * x)); }, 0.0, {});
    FAIL("expected Divergent");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Divergent);
  }
  CHECK_THROWS_AS(integrate_half_line([](double x) { return 1.0 / x / (1.0 + x); }, 0.0, {}), Error);
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v.data(), v.size()) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(pairwise_sum(nullptr, 0) == 0.0);
  std::vector<double> w{1e16, 1.0, -1e16, 1.0};
  CHECK(pairwise_sum(w.data(), w.size()) == pairwise_sum(w.data(), w.size()));
}

TEST_CASE("results are deterministic") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(5 * x); };
  const auto a = integrate_half_line(f, 0.0, {});
  const auto b = integrate_half_line(f, 0.0, {});
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
}
