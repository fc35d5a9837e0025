#include "photodissim/propagators.hpp"

#include <sstream>

#include "photodissim/error.hpp"

namespace photodissim {

namespace {

constexpr double kSincCutoff = 1e-12;
// Below this |x| = |(2 Omega t)^2| the oscillator uses a Taylor series.
constexpr double kTaylorCutoff = 1e-4;

}  // namespace

Matrix2 exact_unitary_propagator(const HamiltonianParams& p, double t) {
  const double m = p.mu - 0.5 * p.lambda;
  const double W = std::hypot(m, p.nu);
  const double c = std::cos(W * t);
  const double s = W < kSincCutoff ? t : std::sin(W * t) / W;
  Matrix2 inner;
  inner << cplx(c, -m * s), cplx(0.0, -p.nu * s),
           cplx(0.0, -p.nu * s), cplx(c, m * s);
  const cplx ph = std::polar(1.0, -0.5 * p.lambda * t);
  inner.row(0) *= ph;
  inner.row(1) *= std::conj(ph);
  return inner;
}

Matrix2 instantaneous_basis_2x2(const HamiltonianParams& p, double t) {
  const double w = p.splitting();
  if (!(w > 0.0)) throw Error(ErrorCode::DegenerateHamiltonian, "level splitting is zero");
  // mu + omega without cancellation for mu < 0
  const double wp = p.mu >= 0.0 ? p.mu + w : p.nu * p.nu / (w - p.mu);
  if (!(wp > tol::kConstruction * w)) {
    std::ostringstream os;
    os << "eigenvector gauge is singular at mu = -omega (mu=" << p.mu << ", nu=" << p.nu << ")";
    throw Error(ErrorCode::SingularGauge, os.str());
  }
  const cplx e = std::polar(1.0, p.lambda * t);
  Matrix2 m;
  m << wp, -p.nu * std::conj(e), p.nu * e, wp;
  return m / std::sqrt(2.0 * w * wp);
}

DiagonalityCheck adiabatic_diagonality(const HamiltonianParams& p, double t) {
  DiagonalityCheck out;
  out.transformed = instantaneous_basis_2x2(p, t).adjoint() * exact_unitary_propagator(p, t) *
                    instantaneous_basis_2x2(p, 0.0);
  out.off_diagonal = std::max(std::abs(out.transformed(0, 1)), std::abs(out.transformed(1, 0)));
  return out;
}

double damped_frequency(double omega, double alpha) {
  return std::sqrt(std::abs(omega * omega - 0.25 * alpha * alpha));
}

Matrix4 dissipative_propagator(double omega, double alpha, double lambda, double t) {
  const double decay = std::exp(-alpha * t);
  const double e2 = std::exp(-2.0 * alpha * t);

  // damped c = e^{-alpha t} cos(2 Omega t), s = e^{-alpha t} sin(2 Omega t) / Omega
  const double x = 4.0 * (omega * omega - 0.25 * alpha * alpha) * t * t;
  double c = 0.0, s = 0.0;
  if (std::abs(x) < kTaylorCutoff) {
    c = decay * (1.0 - x / 2.0 + x * x / 24.0);
    s = decay * 2.0 * t * (1.0 - x / 6.0 + x * x / 120.0);
  } else if (x > 0.0) {
    const double W = damped_frequency(omega, alpha);
    c = decay * std::cos(2.0 * W * t);
    s = decay * std::sin(2.0 * W * t) / W;
  } else {
    const double W = damped_frequency(omega, alpha);
    const double up = std::exp((2.0 * W - alpha) * t);
    const double down = std::exp(-(2.0 * W + alpha) * t);
    c = 0.5 * (up + down);
    s = 0.5 * (up - down) / W;
  }

  const cplx ph = std::polar(1.0, -lambda * t);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = m(1, 1) = 0.5 * (1.0 + e2);
  m(0, 1) = m(1, 0) = 0.5 * (1.0 - e2);
  m(2, 2) = ph * cplx(c, -omega * s);
  m(2, 3) = ph * (0.5 * alpha * s);
  m(3, 2) = std::conj(ph) * (0.5 * alpha * s);
  m(3, 3) = std::conj(ph) * cplx(c, omega * s);
  return m;
}

}  // namespace photodissim
