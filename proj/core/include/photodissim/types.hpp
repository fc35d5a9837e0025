#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace photodissim {

using cplx = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

namespace tol {
/// Hermiticity / trace drift allowed when constructing states internally.
inline constexpr double kConstruction = 1e-12;
/// Drift accepted for externally supplied states before re-symmetrization.
inline constexpr double kExternal = 1e-6;
/// Smallest eigenvalue still counted as positive semidefinite.
inline constexpr double kPositivity = 1e-10;
/// Imaginary part of an expectation value that is silently dropped.
inline constexpr double kImagDiscard = 1e-10;
/// Imaginary part of an expectation value that is an error.
inline constexpr double kImagError = 1e-8;
}  // namespace tol

/// Birefringence hamiltonian H(t) = [[w0+mu, nu e^{-i lambda t}], [nu e^{i lambda t}, w0-mu]].
/// All quantities are angular frequencies (hbar = 1).
struct HamiltonianParams {
  double omega0 = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double lambda = 0.0;

  /// Level splitting omega = sqrt(mu^2 + nu^2).
  double splitting() const noexcept { return std::hypot(mu, nu); }
  /// lambda / omega; infinite when omega vanishes and lambda does not.
  double adiabaticity_ratio() const noexcept;
};

/// lambda/omega above which the adiabatic treatment is flagged.
inline constexpr double kAdiabaticThreshold = 0.1;

struct PolarizerAngles {
  double theta = 0.0;
  double phi = 0.0;
};

}  // namespace photodissim
