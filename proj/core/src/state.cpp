#include "photodissim/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "photodissim/error.hpp"

namespace photodissim {

double HamiltonianParams::adiabaticity_ratio() const noexcept {
  const double w = splitting();
  if (w > 0.0) return std::abs(lambda) / w;
  return lambda == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

double StateVector4::trace_error() const { return std::abs(v_(0) + v_(1) - 1.0); }

double StateVector4::hermiticity_error() const {
  return std::max({std::abs(v_(3) - std::conj(v_(2))), std::abs(v_(0).imag()), std::abs(v_(1).imag())});
}

StateVector4 StateVector4::symmetrized() const {
  const cplx r3 = 0.5 * (v_(2) + std::conj(v_(3)));
  return StateVector4(v_(0).real(), v_(1).real(), r3, std::conj(r3));
}

namespace {

std::array<double, 2> hermitian_eigenvalues(double r1, double r2, cplx r3) {
  const double mean = 0.5 * (r1 + r2);
  const double radius = std::hypot(0.5 * (r1 - r2), std::abs(r3));
  return {mean - radius, mean + radius};
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Matrix2& m, double tolerance) {
  const double herm = std::max({std::abs(m(1, 0) - std::conj(m(0, 1))), std::abs(m(0, 0).imag()),
                                std::abs(m(1, 1).imag())});
  const double trace = std::abs(m(0, 0).real() + m(1, 1).real() - 1.0);
  if (!(herm <= tolerance) || !(trace <= tolerance)) {
    std::ostringstream os;
    os << "hermiticity error " << herm << ", trace error " << trace << " (tolerance " << tolerance << ")";
    throw Error(ErrorCode::NonPhysicalState, os.str());
  }
  const auto ev = hermitian_eigenvalues(m(0, 0).real(), m(1, 1).real(), m(0, 1));
  if (ev[0] < -std::max(tol::kPositivity, tolerance)) {
    std::ostringstream os;
    os << "negative eigenvalue " << ev[0];
    throw Error(ErrorCode::NonPhysicalState, os.str());
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_entries(double rho1, double rho2, cplx rho3) {
  Matrix2 m;
  m << rho1, rho3, std::conj(rho3), rho2;
  return from_matrix(m);
}

DensityMatrix DensityMatrix::right() { return from_entries(1.0, 0.0, 0.0); }
DensityMatrix DensityMatrix::left() { return from_entries(0.0, 1.0, 0.0); }
DensityMatrix DensityMatrix::maximally_mixed() { return from_entries(0.5, 0.5, 0.0); }

DensityMatrix DensityMatrix::from_bloch(double s1, double s2, double s3) {
  const double norm = std::sqrt(s1 * s1 + s2 * s2 + s3 * s3);
  if (!std::isfinite(norm) || norm > 1.0 + tol::kConstruction) {
    std::ostringstream os;
    os << "Stokes vector length " << norm << " exceeds 1";
    throw Error(ErrorCode::NonPhysicalState, os.str());
  }
  return from_entries(0.5 * (1.0 + s3), 0.5 * (1.0 - s3), cplx(0.5 * s1, -0.5 * s2));
}

std::array<double, 2> DensityMatrix::eigenvalues() const {
  return hermitian_eigenvalues(rho1(), rho2(), rho3());
}

double min_eigenvalue(const StateVector4& v) {
  const StateVector4 s = v.symmetrized();
  return hermitian_eigenvalues(s.rho1().real(), s.rho2().real(), s.rho3())[0];
}

Observable::Observable(const Matrix2& m) : m_(m) {
  const double herm = std::max({std::abs(m(1, 0) - std::conj(m(0, 1))), std::abs(m(0, 0).imag()),
                                std::abs(m(1, 1).imag())});
  if (!(herm <= tol::kConstruction)) {
    std::ostringstream os;
    os << "observable is not hermitian (error " << herm << ")";
    throw Error(ErrorCode::NonPhysicalState, os.str());
  }
}

Observable Observable::identity() { return Observable(Matrix2::Identity()); }

StateVector4 vectorize(const DensityMatrix& rho) {
  const Matrix2& m = rho.matrix();
  return StateVector4(m(0, 0), m(1, 1), m(0, 1), m(1, 0));
}

DensityMatrix devectorize(const StateVector4& v) {
  if (!(v.trace_error() <= tol::kExternal) || !(std::abs(v.rho4() - std::conj(v.rho3())) <= tol::kExternal)) {
    std::ostringstream os;
    os << "state vector off the physical manifold: trace error " << v.trace_error()
       << ", hermiticity error " << std::abs(v.rho4() - std::conj(v.rho3()));
    throw Error(ErrorCode::NonPhysicalState, os.str());
  }
  const StateVector4 s = v.symmetrized();
  Matrix2 m;
  m << s.rho1(), s.rho3(), s.rho4(), s.rho2();
  return DensityMatrix::from_matrix(m, tol::kExternal);
}

Observable projector(const PolarizerAngles& angles) {
  const double s2t = std::sin(2.0 * angles.theta);
  const double c2t = std::cos(2.0 * angles.theta);
  const double sp = std::sin(angles.phi);
  const double cp = std::cos(angles.phi);
  Matrix2 m;
  m << 0.5 * (1.0 + sp * s2t), 0.5 * cplx(c2t, -cp * s2t),
       0.5 * cplx(c2t, cp * s2t), 0.5 * (1.0 - sp * s2t);
  return Observable(m);
}

double expectation(const Observable& obs, const StateVector4& state) {
  // Note the cross pairing: O3 multiplies rho4 and O4 multiplies rho3.
  const cplx value = obs.o1() * state.rho1() + obs.o2() * state.rho2() + obs.o3() * state.rho4() +
                     obs.o4() * state.rho3();
  if (std::abs(value.imag()) > tol::kImagError) {
    std::ostringstream os;
    os << "imaginary part " << value.imag();
    throw Error(ErrorCode::NonRealExpectation, os.str());
  }
  return value.real();
}

double purity(const DensityMatrix& rho) {
  return rho.rho1() * rho.rho1() + rho.rho2() * rho.rho2() + 2.0 * std::norm(rho.rho3());
}

double purity(const StateVector4& v) {
  const StateVector4 s = v.symmetrized();
  return std::norm(s.rho1()) + std::norm(s.rho2()) + 2.0 * std::norm(s.rho3());
}

}  // namespace photodissim
