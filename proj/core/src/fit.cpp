#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "detail/series.hpp"
#include "photodissim/analysis.hpp"
#include "photodissim/error.hpp"
#include "photodissim/propagators.hpp"

namespace photodissim {

namespace {

constexpr int kParams = 5;
using Params = Eigen::Matrix<double, kParams, 1>;
using Normal = Eigen::Matrix<double, kParams, kParams>;

Params pack(const FitEstimates& e) { return Params(e.omega, e.alpha, e.lambda, e.theta0, e.amplitude); }
FitEstimates unpack(const Params& p) { return {p(0), p(1), p(2), p(3), p(4)}; }

bool admissible(const Params& p) { return p(0) > 0.0 && p(1) >= 0.0 && p(1) < 2.0 * p(0); }

struct Problem {
  const std::vector<double>& t;
  const std::vector<double>& y;
  std::size_t count;

  double cost(const Params& p) const {
    const FitEstimates e = unpack(p);
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double r = damped_model(e, t[i]) - y[i];
      s += r * r;
    }
    return s;
  }

  // Normal equations J^T J and J^T r with central-difference columns.
  void linearize(const Params& p, Normal& jtj, Params& jtr) const {
    const FitEstimates e = unpack(p);
    std::array<double, kParams> h{};
    std::array<FitEstimates, kParams> plus{}, minus{};
    for (int j = 0; j < kParams; ++j) {
      h[j] = 1e-6 * std::max(std::abs(p(j)), 1e-2);
      Params pp = p, pm = p;
      pp(j) += h[j];
      pm(j) -= h[j];
      plus[j] = unpack(pp);
      minus[j] = unpack(pm);
    }
    jtj.setZero();
    jtr.setZero();
    Params row;
    for (std::size_t i = 0; i < count; ++i) {
      for (int j = 0; j < kParams; ++j)
        row(j) = (damped_model(plus[j], t[i]) - damped_model(minus[j], t[i])) / (2.0 * h[j]);
      jtj.noalias() += row * row.transpose();
      jtr += row * (damped_model(e, t[i]) - y[i]);
    }
  }
};

struct StageResult {
  Params p;
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
};

StageResult levenberg_marquardt(const Problem& prob, Params p, int max_iterations) {
  StageResult out;
  double cost = prob.cost(p);
  double damping = 1e-3;
  Normal jtj;
  Params jtr;
  for (int it = 1; it <= max_iterations; ++it) {
    out.iterations = it;
    prob.linearize(p, jtj, jtr);
    bool accepted = false;
    while (!accepted && damping < 1e16) {
      Normal a = jtj;
      for (int j = 0; j < kParams; ++j) a(j, j) += damping * std::max(jtj(j, j), 1e-30);
      const Params step = a.ldlt().solve(-jtr);
      Params trial = p + step;
      trial(1) = std::max(trial(1), 0.0);
      if (!step.allFinite() || !admissible(trial)) {
        damping *= 4.0;
        continue;
      }
      const double trial_cost = prob.cost(trial);
      if (trial_cost <= cost) {
        const double applied = (trial - p).norm();
        const double drop = cost - trial_cost;
        p = trial;
        cost = trial_cost;
        damping = std::max(damping / 3.0, 1e-12);
        accepted = true;
        if (applied <= 1e-10 * (p.norm() + 1e-10) || drop <= 1e-15 * cost ||
            cost <= 1e-28 * static_cast<double>(prob.count)) {
          out.converged = true;
        }
      } else {
        damping *= 4.0;
      }
    }
    // No descent direction left at any damping: stationary point.
    if (!accepted) out.converged = true;
    if (out.converged) break;
  }
  out.p = p;
  out.cost = cost;
  return out;
}

double fourth_difference_noise(const std::vector<double>& y) {
  if (y.size() < 5) return 0.0;
  double s = 0.0;
  for (std::size_t i = 4; i < y.size(); ++i) {
    const double d = y[i] - 4.0 * y[i - 1] + 6.0 * y[i - 2] - 4.0 * y[i - 3] + y[i - 4];
    s += d * d;
  }
  // A white-noise sequence has Var(fourth difference) = 70 sigma^2.
  return std::sqrt(s / static_cast<double>(y.size() - 4) / 70.0);
}

}  // namespace

double damped_model(const FitEstimates& e, double t) {
  const double W = damped_frequency(e.omega, e.alpha);
  return 0.5 + 0.5 * e.amplitude * std::exp(-e.alpha * t) *
                   (std::cos(2.0 * W * t + e.lambda * t - 2.0 * e.theta0) +
                    std::cos(2.0 * W * t - e.lambda * t + 2.0 * e.theta0 + kPi));
}

FitResult fit_dissipative(const IntensitySeries& series, const FitEstimates& initial_guess, const FitOptions& options) {
  detail::uniform_step(series, 8);
  Params p = pack(initial_guess);
  if (!p.allFinite() || !admissible(p))
    throw Error(ErrorCode::BadValue, "initial guess needs omega > 0 and 0 <= alpha < 2 omega");

  const std::size_t n = series.size();
  const double t0 = series.times.front();
  std::vector<std::size_t> windows;
  if (options.continuation) {
    // about two periods of the 2 Omega oscillation
    double span = 2.0 * kPi / damped_frequency(p(0), p(1));
    while (true) {
      const auto it = std::upper_bound(series.times.begin(), series.times.end(), t0 + span);
      const auto count = static_cast<std::size_t>(it - series.times.begin());
      if (count >= n) break;
      if (count >= 2 * kParams) windows.push_back(count);
      span *= 2.0;
    }
  }
  windows.push_back(n);

  FitResult result;
  StageResult stage;
  for (std::size_t count : windows) {
    const Problem prob{series.times, series.values, count};
    stage = levenberg_marquardt(prob, p, options.max_iterations);
    p = stage.p;
    result.total_iterations += stage.iterations;
  }
  result.estimates = unpack(p);
  result.iterations = stage.iterations;
  result.converged = stage.converged;
  result.residual_rms = std::sqrt(stage.cost / static_cast<double>(n));
  result.noise_estimate = fourth_difference_noise(series.values);
  result.model_mismatch = !result.converged || result.residual_rms > 3.0 * result.noise_estimate + 1e-8;
  result.amplitude_consistency =
      result.estimates.amplitude - result.estimates.omega / (2.0 * damped_frequency(p(0), p(1)));
  return result;
}

}  // namespace photodissim
