#pragma once

#include <cstdint>
#include <vector>

#include "photodissim/observables.hpp"

namespace photodissim {

enum class Window { rectangular, hann };

struct Peak {
  double frequency = 0.0;  // angular
  double magnitude = 0.0;
};

struct SpectrumReport {
  /// Angular frequencies 2 pi k / (N dt), k = 0 .. N/2.
  std::vector<double> frequencies;
  /// |DFT| normalized so that a unit-amplitude tone on a bin peaks at 1.
  std::vector<double> magnitudes;
  /// Sorted by decreasing magnitude.
  std::vector<Peak> peaks;
  double bin_width = 0.0;
};

/// Direct DFT of the mean-subtracted, windowed series. Needs >= 64 samples on a uniform grid.
SpectrumReport spectrum(const IntensitySeries& series, Window window = Window::hann);

struct BerrySplit {
  double center = 0.0;
  double split = 0.0;
};

/// Center and half-separation of the two strongest peaks. Throws InsufficientPeaks.
BerrySplit berry_split(const SpectrumReport& report);

/// Parameters of the damped model
///   P(t) = 1/2 + (A/2) e^{-alpha t}[cos(2 W t + lambda t - 2 theta0) + cos(2 W t - lambda t + 2 theta0 + pi)],
/// W = sqrt(omega^2 - alpha^2/4). The undisturbed model has A = omega / (2 W).
struct FitEstimates {
  double omega = 1.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double theta0 = 0.0;
  double amplitude = 0.5;
};

double damped_model(const FitEstimates& e, double t);

struct FitOptions {
  int max_iterations = 200;
  /// Fit on growing windows (about two oscillation periods first, doubling up to the full series).
  bool continuation = true;
};

struct FitResult {
  FitEstimates estimates;
  double residual_rms = 0.0;
  bool converged = false;
  /// Iterations of the final (full-window) stage.
  int iterations = 0;
  /// Iterations summed over all continuation stages.
  int total_iterations = 0;
  /// Noise level inferred from fourth differences of the data.
  double noise_estimate = 0.0;
  /// Set when the fit did not converge or the residual is well above the noise estimate.
  bool model_mismatch = false;
  /// amplitude - omega / (2 W) for the fitted values.
  double amplitude_consistency = 0.0;
};

/// Levenberg-damped Gauss-Newton fit of damped_model, alpha projected onto [0, 2 omega).
FitResult fit_dissipative(const IntensitySeries& series, const FitEstimates& initial_guess,
                          const FitOptions& options = {});

/// Decay rate from a log-linear fit of the extrema of |P - 1/2|. Throws TooFewExtrema.
double damping_envelope(const IntensitySeries& series);

/// Additive Gaussian noise with a seeded generator; results are clipped to [0, 1].
IntensitySeries add_gaussian_noise(const IntensitySeries& series, double sigma, std::uint64_t seed);

}  // namespace photodissim
