#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photodissim/dissipation.hpp"
#include "photodissim/state.hpp"
#include "photodissim/types.hpp"

namespace photodissim {

enum class SolverKind { numerical, adiabatic_unitary, exact_dissipative, perturbative };

/// Equation integrated by the numerical solver.
///  lab:       d|rho>/dt = (H(t) + L)|rho>, the full master equation.
///  adiabatic: the same equation in the instantaneous eigenbasis with the
///             off-diagonal basis-rotation terms dropped, i.e. generator
///             H_eff + L~(t); states are mapped back with U^dagger(t).
enum class Frame { lab, adiabatic };

std::string_view to_string(SolverKind k);
std::string_view to_string(Frame f);
/// Throws Error(BadValue) for unknown names.
SolverKind solver_from_string(std::string_view s);
Frame frame_from_string(std::string_view s);

struct EvolutionSpec {
  HamiltonianParams hamiltonian;
  DissipationParams dissipation;
  StateVector4 initial;
  double t_final = 0.0;
  /// Integrator step; 0 selects default_dt().
  double dt = 0.0;
  /// Number of stored points on the uniform grid [0, t_final]; 0 stores one point per step.
  std::size_t samples = 0;
  SolverKind solver = SolverKind::numerical;
  Frame frame = Frame::lab;
};

/// 0.01 * min(1/omega, 1/|lambda|, 1/rate) over the nonzero scales.
double default_dt(const EvolutionSpec& spec);
/// Largest step the numerical solver accepts: 0.05 / max(omega, |lambda|, rate).
double max_dt(const EvolutionSpec& spec);

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector4> states;
  std::vector<std::string> warnings;
  /// Largest |rho1 + rho2 - 1| and hermiticity error seen before symmetrization.
  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;

  std::size_t size() const noexcept { return times.size(); }
};

/// Classical RK4 on the linear master equation, fixed step aligned to the output grid.
Trajectory evolve_numerical(const EvolutionSpec& spec);
/// Diagonal effective evolution conjugated by the basis change; requires zero dissipation.
Trajectory evolve_adiabatic_unitary(const EvolutionSpec& spec);
/// Closed-form damped evolution; requires mu = 0 and a = alpha with b = c = beta = gamma = 0.
Trajectory evolve_exact_dissipative(const EvolutionSpec& spec);
/// First-order Dyson expansion in the dissipator, Simpson quadrature.
Trajectory evolve_perturbative(const EvolutionSpec& spec);

/// Dispatches on spec.solver.
Trajectory evolve(const EvolutionSpec& spec);

// Warning texts shared by the solvers and the scenario report.
std::optional<std::string> adiabaticity_warning(const HamiltonianParams& p);
std::optional<std::string> cp_warning(const DissipationParams& d);
std::optional<std::string> overdamped_warning(const HamiltonianParams& p, const DissipationParams& d);

/// Uniform output grid implied by spec (always starts at 0 and ends at t_final).
std::vector<double> output_grid(const EvolutionSpec& spec);

}  // namespace photodissim
