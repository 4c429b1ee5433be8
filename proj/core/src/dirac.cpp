#include "nled/dirac.hpp"

#include <complex>

#include "nled/errors.hpp"

namespace nled {

namespace {

using cplx = std::complex<double>;

SpinMatrix block_offdiag(const Eigen::Matrix2cd& sigma) {
  SpinMatrix m = SpinMatrix::Zero();
  m.topRightCorner<2, 2>() = sigma;
  m.bottomLeftCorner<2, 2>() = sigma;
  return m;
}

}  // namespace

DiracBasis dirac_basis() {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd sx;
  sx << 0.0, 1.0, 1.0, 0.0;
  Eigen::Matrix2cd sy;
  sy << 0.0, -i, i, 0.0;
  Eigen::Matrix2cd sz;
  sz << 1.0, 0.0, 0.0, -1.0;

  DiracBasis b;
  b.alpha = {block_offdiag(sx), block_offdiag(sy), block_offdiag(sz)};
  b.beta = SpinMatrix::Zero();
  b.beta.diagonal() << 1.0, 1.0, -1.0, -1.0;
  return b;
}

SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b) { return a * b + b * a; }

SlashSquare slash_square(double eps, const Vec3& p, double c) {
  const auto basis = dirac_basis();
  SpinMatrix slash = eps * basis.beta;
  for (int k = 0; k < 3; ++k) slash += c * p(k) * basis.alpha[std::size_t(k)];

  SlashSquare out;
  out.M = slash * slash;
  const double p2 = c * c * p.squaredNorm();
  const SpinMatrix id = SpinMatrix::Identity();
  out.residual_anticommutation = (out.M - (eps * eps + p2) * id).norm();
  out.residual_square_root_reading = (out.M - (-(eps * eps - p2)) * id).norm();
  return out;
}

SpinMatrix mass_term(double m, double c) {
  if (!(m >= 0.0)) throw Error(ErrorKind::Configuration, "mass must be >= 0", {{"m", m}});
  return m * c * c * dirac_basis().beta;
}

std::vector<IdentityCheck> verify_dirac_identities(double c, double m) {
  const auto b = dirac_basis();
  const SpinMatrix id = SpinMatrix::Identity();
  std::vector<IdentityCheck> out;
  auto exact = [&](std::string name, double residual) { out.push_back({std::move(name), residual, 0.0, residual == 0.0, false}); };

  const char* axes = "123";
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const SpinMatrix expected = (i == j ? 2.0 : 0.0) * id;
      exact(std::string("{alpha") + axes[i] + ", alpha" + axes[j] + "} = " + (i == j ? "2I" : "0"),
            (anticommutator(b.alpha[std::size_t(i)], b.alpha[std::size_t(j)]) - expected).norm());
    }
    exact(std::string("{alpha") + axes[i] + ", beta} = 0", anticommutator(b.alpha[std::size_t(i)], b.beta).norm());
    exact(std::string("alpha") + axes[i] + " Hermitian",
          (b.alpha[std::size_t(i)] - b.alpha[std::size_t(i)].adjoint()).norm());
  }
  exact("beta^2 = I", (b.beta * b.beta - id).norm());
  exact("beta Hermitian", (b.beta - b.beta.adjoint()).norm());

  const SpinMatrix mass = mass_term(m, c);
  const double mc2 = m * c * c;
  const double mass_tol = 1e-12 * (1.0 + mc2 * mc2);
  auto approx = [&](std::string name, double residual, double tol) {
    out.push_back({std::move(name), residual, tol, residual <= tol, false});
  };
  approx("(beta m c^2)^2 = (m c^2)^2 I", (mass * mass - mc2 * mc2 * id).norm(), mass_tol);
  for (int i = 0; i < 3; ++i) {
    approx(std::string("{beta m c^2, c alpha") + axes[i] + "} = 0",
           anticommutator(mass, c * b.alpha[std::size_t(i)]).norm(), mass_tol * (1.0 + c));
  }

  const auto fixture = slash_square(3.0, Vec3(1.0, 2.0, 3.0), 1.0);
  approx("(3 beta + alpha.(1,2,3))^2 = 23 I", fixture.residual_anticommutation, 1e-12);
  out.push_back({"square-root reading: M vs -(eps^2 - c^2 p^2) I", fixture.residual_square_root_reading, 0.0, true, true});
  return out;
}

}  // namespace nled
