#include "photodissim/observables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "photodissim/error.hpp"
#include "photodissim/generators.hpp"
#include "photodissim/propagators.hpp"
#include "photodissim/state.hpp"

namespace photodissim {

namespace {

constexpr double kResonanceGap = 1e-9;
constexpr double kRangeSlack = 1e-6;

void require_splitting(double omega) {
  if (!(omega > 0.0)) throw Error(ErrorCode::DegenerateHamiltonian, "level splitting is zero");
}

}  // namespace

double prob_adiabatic_general(const HamiltonianParams& p, double theta, double t) {
  const double w = p.splitting();
  require_splitting(w);
  const double lb = berry_phase(p);
  const double chi = 2.0 * theta - p.lambda * t;
  const double phase = 2.0 * (w + lb) * t - p.lambda * t;
  return 0.5 * (1.0 + p.mu * p.nu / (w * w) * std::cos(chi) * (std::cos(phase) - 1.0) +
                p.nu / w * std::sin(chi) * std::sin(phase));
}

double prob_adiabatic_mu0(double omega, double lambda, double theta, double t) {
  return 0.5 * (1.0 + 0.5 * (std::cos(2.0 * omega * t + lambda * t - 2.0 * theta) +
                             std::cos(2.0 * omega * t - lambda * t + 2.0 * theta + kPi)));
}

double prob_dissipative(double omega, double alpha, double lambda, double theta, double t) {
  if (!(alpha >= 0.0) || !(alpha < 2.0 * omega)) {
    std::ostringstream os;
    os << "underdamped formula needs 0 <= alpha < 2 omega (alpha=" << alpha << ", omega=" << omega << ")";
    throw Error(ErrorCode::UnsupportedRegime, os.str());
  }
  const double W = damped_frequency(omega, alpha);
  return 0.5 * (1.0 + omega / (2.0 * W) * std::exp(-alpha * t) *
                          (std::cos(2.0 * W * t + lambda * t - 2.0 * theta) +
                           std::cos(2.0 * W * t - lambda * t + 2.0 * theta + kPi)));
}

double prob_overdamped(double omega, double alpha, double lambda, double theta, double t) {
  if (!(omega > 0.0) || !(alpha > 2.0 * omega)) {
    std::ostringstream os;
    os << "overdamped formula needs alpha > 2 omega (alpha=" << alpha << ", omega=" << omega << ")";
    throw Error(ErrorCode::UnsupportedRegime, os.str());
  }
  const double W = damped_frequency(omega, alpha);
  // e^{-alpha t} sinh(2 W t) without overflow
  const double damped_sinh = 0.5 * (std::exp((2.0 * W - alpha) * t) - std::exp(-(2.0 * W + alpha) * t));
  return 0.5 * (1.0 + omega / W * damped_sinh * std::sin(2.0 * theta - lambda * t));
}

double prob_perturbative(const HamiltonianParams& p, const DissipationCombos& k, double theta, double t) {
  if (p.mu != 0.0 || !(p.nu > 0.0)) {
    std::ostringstream os;
    os << "first-order formula needs mu = 0 and nu > 0 (mu=" << p.mu << ", nu=" << p.nu << ")";
    throw Error(ErrorCode::UnsupportedRegime, os.str());
  }
  const double w = p.nu;
  const double l = p.lambda;
  for (double d : {2.0 * w + l, 2.0 * w - l, w + l, w - l, 4.0 * w + l, 4.0 * w - l}) {
    if (std::abs(d) < kResonanceGap) {
      std::ostringstream os;
      os << "resonant denominator " << d << " (omega=" << w << ", lambda=" << l << ")";
      throw Error(ErrorCode::ResonantDenominator, os.str());
    }
  }
  const double Bm = std::abs(k.B), Cm = std::abs(k.C);
  const double pB = k.phiB, pC = k.phiC;
  const double lt = l * t;

  const double delta =
      0.5 * Cm *
          (2.0 * l / (4.0 * w * w - l * l) * std::sin(pC) - std::sin(2.0 * w * t + lt - pC) / (2.0 * w + l) -
           std::sin(2.0 * w * t - lt + pC) / (2.0 * w - l)) +
      0.125 * Bm *
          (2.0 * w / (w * w - l * l) * std::sin(pB) + std::sin(2.0 * w * t - 2.0 * lt - pB) / (w - l) -
           std::sin(2.0 * w * t + 2.0 * lt + pB) / (w + l));

  const double phi =
      0.25 * Bm * std::sin(lt + pB) *
          (std::sin((2.0 * w + l) * t) / (2.0 * w + l) - std::sin((2.0 * w - l) * t) / (2.0 * w - l)) +
      2.0 * Cm * std::sin(0.5 * lt - pC) *
          (std::sin((2.0 * w - 0.5 * l) * t) / (4.0 * w - l) + std::sin((2.0 * w + 0.5 * l) * t) / (4.0 * w + l));

  // sin(lambda t) / lambda, continuous at lambda = 0
  const double sinc = std::abs(l) < 1e-12 ? t : std::sin(lt) / l;
  const double secular = 1.0 - 0.5 * Bm * sinc * std::cos(lt + pB);
  const double chi = 2.0 * theta - lt;
  return 0.5 + 0.5 * std::exp(-(k.D + 0.5 * k.A) * t) *
                   (-2.0 * delta * std::cos(chi) + (secular * std::sin(2.0 * w * t) - phi) * std::sin(chi));
}

IntensitySeries prob_from_trajectory(const Trajectory& traj, const PolarizerAngles& angles) {
  const Observable obs = projector(angles);
  IntensitySeries out;
  out.times = traj.times;
  out.values.reserve(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const double v = expectation(obs, traj.states[i]);
    if (!(v >= -kRangeSlack && v <= 1.0 + kRangeSlack)) {
      std::ostringstream os;
      os << "probability " << v << " at t = " << traj.times[i];
      throw Error(ErrorCode::ProbabilityOutOfRange, os.str());
    }
    out.values.push_back(std::clamp(v, 0.0, 1.0));
  }
  out.meta["theta"] = angles.theta;
  out.meta["phi"] = angles.phi;
  return out;
}

std::string_view to_string(ProbabilityKind k) {
  switch (k) {
    case ProbabilityKind::adiabatic_general: return "adiabatic_general";
    case ProbabilityKind::adiabatic_mu0: return "adiabatic_mu0";
    case ProbabilityKind::dissipative: return "dissipative";
    case ProbabilityKind::overdamped: return "overdamped";
    case ProbabilityKind::perturbative: return "perturbative";
  }
  return "unknown";
}

double ProbabilityModel::operator()(double t) const {
  const HamiltonianParams& p = hamiltonian;
  switch (kind) {
    case ProbabilityKind::adiabatic_general: return prob_adiabatic_general(p, theta, t);
    case ProbabilityKind::adiabatic_mu0: return prob_adiabatic_mu0(p.splitting(), p.lambda, theta, t);
    case ProbabilityKind::dissipative:
      return prob_dissipative(p.splitting(), dissipation.alpha, p.lambda, theta, t);
    case ProbabilityKind::overdamped:
      return prob_overdamped(p.splitting(), dissipation.alpha, p.lambda, theta, t);
    case ProbabilityKind::perturbative: return prob_perturbative(p, combos(dissipation), theta, t);
  }
  throw Error(ErrorCode::UnsupportedRegime, "unknown probability model");
}

IntensitySeries ProbabilityModel::sample(const std::vector<double>& times) const {
  IntensitySeries out;
  out.times = times;
  out.values.reserve(times.size());
  for (double t : times) out.values.push_back((*this)(t));
  out.meta["theta"] = theta;
  out.meta["omega"] = hamiltonian.splitting();
  out.meta["lambda"] = hamiltonian.lambda;
  out.meta["alpha"] = dissipation.alpha;
  return out;
}

ProbabilityKind select_probability_kind(const HamiltonianParams& p, const DissipationParams& d) {
  const double w = p.splitting();
  require_splitting(w);
  if (d.is_zero()) return p.mu == 0.0 && p.nu > 0.0 ? ProbabilityKind::adiabatic_mu0 : ProbabilityKind::adiabatic_general;
  if (p.mu != 0.0 || !(p.nu > 0.0))
    throw Error(ErrorCode::UnsupportedRegime, "closed forms with dissipation need mu = 0 and nu > 0");
  const bool alpha_family = d.a == d.alpha && d.b == 0.0 && d.c == 0.0 && d.beta == 0.0 && d.gamma == 0.0;
  if (alpha_family) {
    if (d.alpha < 2.0 * w) return ProbabilityKind::dissipative;
    if (d.alpha > 2.0 * w) return ProbabilityKind::overdamped;
    throw Error(ErrorCode::UnsupportedRegime, "critical damping alpha = 2 omega has no closed form here");
  }
  return ProbabilityKind::perturbative;
}

}  // namespace photodissim
