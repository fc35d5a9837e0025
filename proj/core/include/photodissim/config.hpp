#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photodissim/analysis.hpp"
#include "photodissim/dissipation.hpp"
#include "photodissim/solvers.hpp"
#include "photodissim/state.hpp"

namespace photodissim {

struct InitialState {
  enum class Kind { L, R, linear, stokes };
  Kind kind = Kind::L;
  double theta = 0.0;
  std::array<double, 3> stokes{0.0, 0.0, 0.0};

  DensityMatrix density() const;
  StateVector4 vector() const { return vectorize(density()); }
};

enum class OutputKind { trajectory, probability, spectrum, fit };
std::string_view to_string(OutputKind k);

struct ScenarioConfig {
  HamiltonianParams hamiltonian;
  DissipationParams dissipation;
  InitialState initial;
  PolarizerAngles analyzer;
  double t_final = 50.0;
  /// 0 selects the solver default.
  double dt = 0.0;
  std::size_t samples = 2048;
  SolverKind solver = SolverKind::numerical;
  Frame frame = Frame::lab;
  std::vector<OutputKind> outputs{OutputKind::probability};
  std::uint64_t seed = 0;
  double noise_sigma = 0.0;
  Window window = Window::hann;
  /// Falls back to the generating parameters when absent.
  std::optional<FitEstimates> fit_guess;
  bool allow_noncp = false;

  EvolutionSpec evolution_spec() const;
  bool wants(OutputKind k) const;
};

struct ParseOptions {
  bool allow_noncp = false;
};

/// Parses a YAML scenario. Unknown keys, missing required keys, non-finite numbers and
/// out-of-range values raise MissingKey / BadValue naming the key; dissipation that is
/// not completely positive raises NonCPDissipation unless allowed.
///
///   hamiltonian: {omega0: 1, mu: 0, nu: 1, lambda: 0.01}    # omega0 and nu required
///   dissipation: {a: 0, b: 0, c: 0, alpha: 0, beta: 0, gamma: 0}
///   initial_state: L | R | {linear: theta} | {stokes: [s1, s2, s3]}
///   analyzer: {theta: 0, phi: 0}
///   time: {t_final: 50, dt: 0, samples: 2048}
///   solver: numerical | adiabatic_unitary | exact_dissipative | perturbative
///   frame: lab | adiabatic
///   outputs: [trajectory, probability, spectrum, fit]
///   seed: 0
///   noise: {sigma: 0}
///   spectrum: {window: hann | rectangular}
///   fit: {initial_guess: {omega, alpha, lambda, theta0, amplitude}}
ScenarioConfig parse_config(std::string_view text, const ParseOptions& options = {});
ScenarioConfig load_config(const std::filesystem::path& path, const ParseOptions& options = {});

/// Re-checks the value constraints of an already built config.
void validate_config(const ScenarioConfig& cfg);

/// Sets a numeric key such as "dissipation.alpha" or "time.t_final". Throws BadAxis.
void set_numeric(ScenarioConfig& cfg, std::string_view key, double value);
double get_numeric(const ScenarioConfig& cfg, std::string_view key);
std::vector<std::string> numeric_keys();

}  // namespace photodissim
