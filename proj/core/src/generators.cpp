#include "photodissim/generators.hpp"

#include <sstream>

#include "photodissim/error.hpp"

namespace photodissim {

namespace {

double checked_splitting(const HamiltonianParams& p) {
  const double w = p.splitting();
  if (!(w > 0.0)) {
    std::ostringstream os;
    os << "level splitting sqrt(mu^2 + nu^2) is zero (mu=" << p.mu << ", nu=" << p.nu << ")";
    throw Error(ErrorCode::DegenerateHamiltonian, os.str());
  }
  return w;
}

}  // namespace

Matrix2 hamiltonian_matrix(const HamiltonianParams& p, double t) {
  const cplx e = std::polar(1.0, p.lambda * t);
  Matrix2 h;
  h << p.omega0 + p.mu, p.nu * std::conj(e), p.nu * e, p.omega0 - p.mu;
  return h;
}

Matrix4 hamiltonian_superop(const HamiltonianParams& p, double t) {
  const cplx e = std::polar(1.0, p.lambda * t);
  const cplx ne = p.nu * e;
  const cplx nb = p.nu * std::conj(e);
  Matrix4 m;
  m << 0.0, 0.0, ne, -nb,
       0.0, 0.0, -ne, nb,
       nb, -nb, -2.0 * p.mu, 0.0,
       -ne, ne, 0.0, 2.0 * p.mu;
  return kI * m;
}

Matrix4 dissipator_superop(const DissipationCombos& k) {
  const cplx A = k.A, D = k.D, B = k.B, C = k.C;
  const cplx Bc = std::conj(B), Cc = std::conj(C);
  Matrix4 m;
  m << -D, D, -C, -Cc,
       D, -D, C, Cc,
       -Cc, Cc, -A, B,
       -C, C, Bc, -A;
  return m;
}

DissipationCombos read_dissipator(const Matrix4& m) {
  return combos_from_entries(-m(2, 2).real(), m(2, 3), m(1, 2), m(1, 0).real());
}

Matrix4 basis_change(const HamiltonianParams& p, double t) {
  const double w = checked_splitting(p);
  const double mu = p.mu, nu = p.nu;
  const cplx e = std::polar(1.0, p.lambda * t);
  const cplx eb = std::conj(e);
  const double wp = w + mu, wm = w - mu;
  Matrix4 u;
  u << wp, wm, nu * e, nu * eb,
       wm, wp, -nu * e, -nu * eb,
       -nu * eb, nu * eb, wp, -wm * eb * eb,
       -nu * e, nu * e, -wm * e * e, wp;
  return u / (2.0 * w);
}

DissipationCombos transformed_dissipator(const DissipationCombos& k, const HamiltonianParams& p, double t) {
  const double w = checked_splitting(p);
  const double mu = p.mu, nu = p.nu, lt = p.lambda * t;
  const cplx Be = k.B * std::polar(1.0, 2.0 * lt);
  const cplx Ce = k.C * std::polar(1.0, -lt);
  const double n2 = nu * nu / (2.0 * w * w);
  const double mn = mu * nu / (w * w);
  const double g = 2.0 * k.D - k.A;

  const double At = k.A + n2 * (g + Be.real()) - 2.0 * mn * Ce.real();
  const cplx Bt = std::polar(1.0, -2.0 * lt) *
                  cplx((1.0 - n2) * Be.real() + 2.0 * mn * Ce.real() - n2 * g,
                       mu / w * Be.imag() - 2.0 * nu / w * Ce.imag());
  const cplx Ct = std::polar(1.0, lt) *
                  cplx((1.0 - 4.0 * n2) * Ce.real() - 0.5 * mn * (g + Be.real()),
                       mu / w * Ce.imag() + nu / (2.0 * w) * Be.imag());
  const double Dt = k.D - n2 * (g + Be.real()) + 2.0 * mn * Ce.real();
  return combos_from_entries(At, Bt, Ct, Dt);
}

double berry_phase(const HamiltonianParams& p) {
  const double w = checked_splitting(p);
  return 0.5 * p.lambda * (1.0 - p.mu / w);
}

Vector4 EffectiveHamiltonianDiag::diagonal() const {
  const double f = frequency();
  return Vector4(0.0, 0.0, cplx(0.0, -2.0 * f), cplx(0.0, 2.0 * f));
}

EffectiveHamiltonianDiag effective_hamiltonian_adiabatic(const HamiltonianParams& p) {
  EffectiveHamiltonianDiag h;
  h.splitting = checked_splitting(p);
  h.berry_shift = berry_phase(p);
  h.adiabaticity_ratio = std::abs(p.lambda) / h.splitting;
  h.adiabatic_warning = h.adiabaticity_ratio > kAdiabaticThreshold;
  return h;
}

}  // namespace photodissim
