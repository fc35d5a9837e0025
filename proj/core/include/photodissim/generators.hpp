#pragma once

#include "photodissim/dissipation.hpp"
#include "photodissim/types.hpp"

namespace photodissim {

/// H(t) = [[w0+mu, nu e^{-i lambda t}], [nu e^{i lambda t}, w0-mu]].
Matrix2 hamiltonian_matrix(const HamiltonianParams& p, double t);

/// Matrix acting on (rho1, rho2, rho3, rho4) that reproduces -i[H(t), rho].
/// Works for any parameters, including a degenerate splitting.
Matrix4 hamiltonian_superop(const HamiltonianParams& p, double t);

Matrix4 dissipator_superop(const DissipationCombos& k);
inline Matrix4 dissipator_superop(const DissipationParams& p) { return dissipator_superop(combos(p)); }

/// Reads (A, B, C, D) back from a matrix of dissipator shape.
DissipationCombos read_dissipator(const Matrix4& m);

/// The unitary 4x4 change of basis U(t) to the instantaneous eigenbasis of H(t).
/// Throws DegenerateHamiltonian when the splitting vanishes.
Matrix4 basis_change(const HamiltonianParams& p, double t);

/// Closed-form dissipator entries in the instantaneous eigenbasis, i.e. the
/// entries of U(t) L U(t)^dagger.
DissipationCombos transformed_dissipator(const DissipationCombos& k, const HamiltonianParams& p, double t);

/// Geometric frequency shift lambda_B = (lambda/2)(1 - mu/omega).
double berry_phase(const HamiltonianParams& p);

struct EffectiveHamiltonianDiag {
  double berry_shift = 0.0;
  double splitting = 0.0;
  /// lambda / omega
  double adiabaticity_ratio = 0.0;
  /// set when lambda / omega exceeds kAdiabaticThreshold
  bool adiabatic_warning = false;

  /// omega + lambda_B
  double frequency() const noexcept { return splitting + berry_shift; }
  /// (0, 0, -2i(omega + lambda_B), 2i(omega + lambda_B))
  Vector4 diagonal() const;
  Matrix4 matrix() const { return diagonal().asDiagonal(); }
};

EffectiveHamiltonianDiag effective_hamiltonian_adiabatic(const HamiltonianParams& p);

}  // namespace photodissim
