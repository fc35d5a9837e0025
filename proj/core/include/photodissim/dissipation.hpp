#pragma once

#include <string>
#include <vector>

#include "photodissim/types.hpp"

namespace photodissim {

/// The six real constants parametrizing the dissipative part of the generator.
struct DissipationParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  bool is_zero() const noexcept {
    return a == 0.0 && b == 0.0 && c == 0.0 && alpha == 0.0 && beta == 0.0 && gamma == 0.0;
  }
  /// max of the absolute values of the six constants
  double magnitude() const noexcept;

  DissipationParams scaled(double s) const noexcept {
    return {s * a, s * b, s * c, s * alpha, s * beta, s * gamma};
  }
};

/// Matrix-entry combinations A = alpha + a, B = alpha - a + 2ib, C = c + i beta, D = gamma,
/// together with their phases and the positivity intermediates
/// 2R = alpha + gamma - a, 2S = a + gamma - alpha, 2T = a + alpha - gamma.
struct DissipationCombos {
  double A = 0.0;
  cplx B{};
  cplx C{};
  double D = 0.0;
  double phiB = 0.0;
  double phiC = 0.0;
  double R = 0.0;
  double S = 0.0;
  double T = 0.0;

  /// Recovers (a, b, c, alpha, beta, gamma) from the entries.
  DissipationParams params() const noexcept;
  /// Largest entry magnitude; sets the dissipative time scale.
  double rate() const noexcept;
};

/// Builds the combinations from the six constants.
DissipationCombos combos(const DissipationParams& p);

/// Builds a full combos record from matrix entries (A, B, C, D). A and D are
/// real for any generator of the hermiticity-preserving form.
DissipationCombos combos_from_entries(double A, cplx B, cplx C, double D);

/// Phase of a complex number, with arg(0) = 0.
double phase(cplx z) noexcept;

struct CPCondition {
  std::string name;      // e.g. "2S = a + gamma - alpha >= 0"
  double residual = 0.0; // value of the left-hand side
  bool passed = false;
  /// Failed prerequisites (diagonal conditions of a product or minor). A failure with
  /// failed prerequisites is a consequence of them, not a separate violation.
  std::vector<std::string> follows_from;
};

struct ValidationReport {
  std::vector<CPCondition> conditions;

  bool all_passed() const noexcept;
  /// Names of failed conditions whose prerequisites hold: the root causes.
  std::vector<std::string> violated() const;
  std::string summary() const;
};

/// Checks the ten complete-positivity inequalities. Never throws.
/// `slack` is the residual still counted as satisfied (round-off allowance).
ValidationReport validate_cp(const DissipationParams& p, double slack = 1e-14);

}  // namespace photodissim
