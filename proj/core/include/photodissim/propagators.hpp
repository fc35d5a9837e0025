#pragma once

#include "photodissim/types.hpp"

namespace photodissim {

/// Closed-form unitary U(t) for the traceless part of H(t):
///   U = e^{-i lambda t sigma3 / 2}[cos(W t) - i (2mu - lambda)/(2W) sin(W t) sigma3 - i nu/W sin(W t) sigma1],
/// W = sqrt((mu - lambda/2)^2 + nu^2). The global phase e^{-i w0 t} is omitted.
Matrix2 exact_unitary_propagator(const HamiltonianParams& p, double t);

/// Columns are the instantaneous eigenvectors of H(t), eigenvalues (w0 + omega, w0 - omega).
/// Throws DegenerateHamiltonian for omega = 0 and SingularGauge when mu + omega vanishes.
Matrix2 instantaneous_basis_2x2(const HamiltonianParams& p, double t);

struct DiagonalityCheck {
  /// T^dagger(t) U(t) T(0)
  Matrix2 transformed;
  /// max |off-diagonal entry|
  double off_diagonal = 0.0;
};

DiagonalityCheck adiabatic_diagonality(const HamiltonianParams& p, double t);
inline double adiabatic_diagonality_check(const HamiltonianParams& p, double t) {
  return adiabatic_diagonality(p, t).off_diagonal;
}

/// sqrt(|omega^2 - alpha^2/4|): Omega below critical damping, Omega-bar above.
double damped_frequency(double omega, double alpha);
inline bool is_overdamped(double omega, double alpha) { return alpha > 2.0 * omega; }

/// Propagator in the instantaneous eigenbasis for mu = 0 and the one-parameter
/// dissipation a = alpha (b = c = beta = gamma = 0):
///   M(t) = e^{-alpha t} blockdiag(e^{alpha t sigma1}, Xi(t)).
/// Both damping branches and the critical point are handled.
Matrix4 dissipative_propagator(double omega, double alpha, double lambda, double t);

}  // namespace photodissim
