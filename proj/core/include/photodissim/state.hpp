#pragma once

#include <array>

#include "photodissim/types.hpp"

namespace photodissim {

/// Vectorized density matrix (rho1, rho2, rho3, rho4) for
///   rho = [[rho1, rho3], [rho4, rho2]].
/// Carries no invariant of its own: integrators work on arbitrary vectors.
class StateVector4 {
 public:
  StateVector4() = default;
  explicit StateVector4(const Vector4& v) : v_(v) {}
  StateVector4(cplx r1, cplx r2, cplx r3, cplx r4) { v_ << r1, r2, r3, r4; }

  const Vector4& vec() const noexcept { return v_; }
  cplx operator[](int i) const { return v_(i); }

  cplx rho1() const { return v_(0); }
  cplx rho2() const { return v_(1); }
  cplx rho3() const { return v_(2); }
  cplx rho4() const { return v_(3); }

  /// |rho1 + rho2 - 1|
  double trace_error() const;
  /// max(|rho4 - conj(rho3)|, |Im rho1|, |Im rho2|)
  double hermiticity_error() const;

  /// Projects onto the hermitian subspace: real diagonal, rho4 = conj(rho3).
  StateVector4 symmetrized() const;

 private:
  Vector4 v_ = Vector4::Zero();
};

/// 2x2 hermitian, unit-trace, positive semidefinite polarization state.
class DensityMatrix {
 public:
  /// Validates hermiticity, trace and positivity within `tolerance`.
  /// Throws Error(NonPhysicalState) otherwise.
  static DensityMatrix from_matrix(const Matrix2& m, double tolerance = tol::kConstruction);
  static DensityMatrix from_entries(double rho1, double rho2, cplx rho3);

  /// Pure states in the circular (|R>, |L>) basis.
  static DensityMatrix right();
  static DensityMatrix left();
  static DensityMatrix maximally_mixed();
  /// rho = (1 + s1 sigma1 + s2 sigma2 + s3 sigma3) / 2 with |s| <= 1.
  static DensityMatrix from_bloch(double s1, double s2, double s3);

  const Matrix2& matrix() const noexcept { return m_; }
  double rho1() const { return m_(0, 0).real(); }
  double rho2() const { return m_(1, 1).real(); }
  cplx rho3() const { return m_(0, 1); }
  cplx rho4() const { return m_(1, 0); }

  /// Ascending eigenvalues.
  std::array<double, 2> eigenvalues() const;

  bool operator==(const DensityMatrix& other) const { return m_ == other.m_; }

 private:
  explicit DensityMatrix(const Matrix2& m) : m_(m) {}
  Matrix2 m_;
};

/// Smallest eigenvalue of the (symmetrized) 2x2 matrix encoded by `v`.
/// Works for unnormalized vectors; used for positivity diagnostics.
double min_eigenvalue(const StateVector4& v);

/// Hermitian observable with the same (O1, O3 / O4, O2) layout as a state.
class Observable {
 public:
  /// Throws Error(NonPhysicalState) when `m` is not hermitian within 1e-12.
  explicit Observable(const Matrix2& m);
  static Observable identity();

  const Matrix2& matrix() const noexcept { return m_; }
  cplx o1() const { return m_(0, 0); }
  cplx o2() const { return m_(1, 1); }
  cplx o3() const { return m_(0, 1); }
  cplx o4() const { return m_(1, 0); }

 private:
  Matrix2 m_;
};

StateVector4 vectorize(const DensityMatrix& rho);

/// Inverse of vectorize. Accepts drift up to 1e-6 in trace and hermiticity,
/// then re-symmetrizes rho3 <- (rho3 + conj(rho4)) / 2.
DensityMatrix devectorize(const StateVector4& v);

/// Projector onto the fully polarized state with angles (theta, phi).
Observable projector(const PolarizerAngles& angles);

/// Tr(O rho) = O1 rho1 + O2 rho2 + O3 rho4 + O4 rho3.
double expectation(const Observable& obs, const StateVector4& state);

/// Tr(rho^2), in [1/2, 1] for physical states.
double purity(const DensityMatrix& rho);
double purity(const StateVector4& v);

}  // namespace photodissim
