#include "nled/interaction.hpp"

#include <cmath>
#include <complex>

#include "nled/errors.hpp"

namespace nled {

namespace {

void require_subluminal(const Vec3& v, double c) {
  if (!(v.norm() < c)) {
    throw Error(ErrorKind::DomainExceeded, "charge velocity must satisfy |v| < c",
                {{"v", v.norm()}, {"c", c}});
  }
}

// Boost of a four-vector (t, x) with t the time-like component already multiplied by c.
std::pair<double, Vec3> boost_four_vector(double t, const Vec3& x, const Vec3& beta) {
  const double b2 = beta.squaredNorm();
  if (b2 == 0.0) return {t, x};
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  const Vec3 n = beta / std::sqrt(b2);
  const double x_par = n.dot(x);
  const double t_new = gamma * (t - beta.dot(x));
  const double x_par_new = gamma * (x_par - std::sqrt(b2) * t);
  return {t_new, x + (x_par_new - x_par) * n};
}

}  // namespace

double electrokinetic_potential(double phi, const Vec3& v, const Vec3& A, double c) {
  require_subluminal(v, c);
  return phi - v.dot(A) / c;
}

InteractionForms interaction_lagrangian_density(const ChargeState& s, const FourPotential& p, double c) {
  InteractionForms out;
  out.form_a = s.rho * electrokinetic_potential(p.phi, s.v, p.A, c);

  using cplx = std::complex<double>;
  const cplx i(0.0, 1.0);
  const cplx j4 = i * c * s.rho;
  const cplx a4 = i * p.phi;
  const cplx contraction = j4 * a4 + s.rho * s.v.dot(p.A);
  out.form_b = (-contraction / c).real();
  return out;
}

InteractionEnergyMomentum interaction_energy_momentum(double e, const FourPotential& p, double c) {
  InteractionEnergyMomentum out;
  out.eps_e = e * p.phi;
  out.p_e = e * p.A / c;
  out.potential_square = e * e * (p.A.squaredNorm() - p.phi * p.phi);
  out.identity_residual =
      std::abs(out.potential_square - (-out.eps_e * out.eps_e + c * c * out.p_e.squaredNorm()));
  return out;
}

std::pair<ChargeState, FourPotential> boost_frame(const ChargeState& s, const FourPotential& p,
                                                  const Vec3& beta, double c) {
  require_subluminal(s.v, c);
  if (!(beta.squaredNorm() < 1.0)) {
    throw Error(ErrorKind::DomainExceeded, "boost speed must satisfy |beta| < 1", {{"beta", beta.norm()}});
  }
  const auto [c_rho, j] = boost_four_vector(c * s.rho, s.rho * s.v, beta);
  const auto [phi, A] = boost_four_vector(p.phi, p.A, beta);
  ChargeState out = s;
  out.rho = c_rho / c;
  out.v = out.rho != 0.0 ? Vec3(j / out.rho) : Vec3(s.v);
  return {out, FourPotential{phi, A}};
}

}  // namespace nled
