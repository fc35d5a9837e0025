#pragma once

#include <map>
#include <string>
#include <vector>

#include "photodissim/dissipation.hpp"
#include "photodissim/solvers.hpp"
#include "photodissim/types.hpp"

namespace photodissim {

/// Sampled analyzer probability on a uniform time grid.
struct IntensitySeries {
  std::vector<double> times;
  std::vector<double> values;
  /// Free-form description of how the series was generated.
  std::map<std::string, double> meta;

  std::size_t size() const noexcept { return times.size(); }
};

// Probability that a photon starting in |L> = diag(0, 1) passes a linear analyzer at angle theta.

/// Adiabatic, dissipation-free, general (mu, nu).
double prob_adiabatic_general(const HamiltonianParams& p, double theta, double t);

/// Adiabatic, dissipation-free, mu = 0.
double prob_adiabatic_mu0(double omega, double lambda, double theta, double t);

/// Exact damped evolution for mu = 0, a = alpha, alpha < 2 omega.
/// Throws UnsupportedRegime for alpha >= 2 omega.
double prob_dissipative(double omega, double alpha, double lambda, double theta, double t);

/// Overdamped continuation, alpha > 2 omega. Throws UnsupportedRegime otherwise.
double prob_overdamped(double omega, double alpha, double lambda, double theta, double t);

/// First order in the dissipation constants, mu = 0. Throws UnsupportedRegime for
/// mu != 0, ResonantDenominator if 2w +- l, w +- l or 4w +- l is within 1e-9 of zero.
double prob_perturbative(const HamiltonianParams& p, const DissipationCombos& k, double theta, double t);

/// Pointwise expectation of projector(angles) along a trajectory.
/// Throws ProbabilityOutOfRange when a raw value leaves [-1e-6, 1 + 1e-6]; values are clipped to [0, 1].
IntensitySeries prob_from_trajectory(const Trajectory& traj, const PolarizerAngles& angles);

enum class ProbabilityKind { adiabatic_general, adiabatic_mu0, dissipative, overdamped, perturbative };

std::string_view to_string(ProbabilityKind k);

struct ProbabilityModel {
  ProbabilityKind kind = ProbabilityKind::adiabatic_mu0;
  HamiltonianParams hamiltonian;
  DissipationParams dissipation;
  double theta = 0.0;

  /// Evaluates the selected closed form. For the damped kinds alpha is taken from dissipation.alpha.
  double operator()(double t) const;
  IntensitySeries sample(const std::vector<double>& times) const;
};

/// Closed form matching the regime of the parameters: adiabatic_mu0 / adiabatic_general
/// without dissipation, dissipative / overdamped for the a = alpha family at mu = 0,
/// perturbative otherwise (mu = 0 only). Throws UnsupportedRegime when none applies.
ProbabilityKind select_probability_kind(const HamiltonianParams& p, const DissipationParams& d);

}  // namespace photodissim
