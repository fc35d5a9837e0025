#include "photodissim/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "photodissim/error.hpp"
#include "photodissim/generators.hpp"
#include "photodissim/propagators.hpp"

namespace photodissim {

std::string_view to_string(SolverKind k) {
  switch (k) {
    case SolverKind::numerical: return "numerical";
    case SolverKind::adiabatic_unitary: return "adiabatic_unitary";
    case SolverKind::exact_dissipative: return "exact_dissipative";
    case SolverKind::perturbative: return "perturbative";
  }
  return "unknown";
}

std::string_view to_string(Frame f) { return f == Frame::lab ? "lab" : "adiabatic"; }

SolverKind solver_from_string(std::string_view s) {
  for (auto k : {SolverKind::numerical, SolverKind::adiabatic_unitary, SolverKind::exact_dissipative,
                 SolverKind::perturbative})
    if (s == to_string(k)) return k;
  throw Error(ErrorCode::BadValue, "unknown solver '" + std::string(s) + "'");
}

Frame frame_from_string(std::string_view s) {
  if (s == "lab") return Frame::lab;
  if (s == "adiabatic") return Frame::adiabatic;
  throw Error(ErrorCode::BadValue, "unknown frame '" + std::string(s) + "'");
}

namespace {

constexpr double kTraceDriftLimit = 1e-8;

double largest_scale(const EvolutionSpec& spec) {
  return std::max({spec.hamiltonian.splitting(), std::abs(spec.hamiltonian.lambda),
                   combos(spec.dissipation).rate()});
}

double effective_dt(const EvolutionSpec& spec) { return spec.dt > 0.0 ? spec.dt : default_dt(spec); }

void check_spec(const EvolutionSpec& spec) {
  if (!std::isfinite(spec.t_final) || spec.t_final < 0.0) {
    std::ostringstream os;
    os << "t_final must be finite and >= 0 (got " << spec.t_final << ")";
    throw Error(ErrorCode::InvalidSpec, os.str());
  }
  if (!std::isfinite(spec.dt) || spec.dt < 0.0) {
    std::ostringstream os;
    os << "dt must be finite and > 0 (got " << spec.dt << ")";
    throw Error(ErrorCode::InvalidSpec, os.str());
  }
  if (spec.samples == 1 && spec.t_final > 0.0)
    throw Error(ErrorCode::InvalidSpec, "samples must be >= 2 when t_final > 0");
  (void)devectorize(spec.initial);
}

struct Recorder {
  Trajectory traj;

  void push(double t, const Vector4& y) {
    const StateVector4 raw(y);
    traj.max_trace_drift = std::max(traj.max_trace_drift, raw.trace_error());
    traj.max_hermiticity_drift = std::max(traj.max_hermiticity_drift, raw.hermiticity_error());
    traj.times.push_back(t);
    traj.states.push_back(raw.symmetrized());
  }

  void warn(const std::string& w) {
    if (std::find(traj.warnings.begin(), traj.warnings.end(), w) == traj.warnings.end())
      traj.warnings.push_back(w);
  }
};

void adiabatic_warning(Recorder& rec, const HamiltonianParams& p) {
  if (auto w = adiabaticity_warning(p)) rec.warn(*w);
}

// Phases of exp(H_eff t): (1, 1, e^{-2iFt}, e^{2iFt}).
Vector4 effective_phases(double F, double t) {
  const cplx e = std::polar(1.0, -2.0 * F * t);
  return Vector4(1.0, 1.0, e, std::conj(e));
}

}  // namespace

std::optional<std::string> adiabaticity_warning(const HamiltonianParams& p) {
  const double r = p.adiabaticity_ratio();
  if (!(r > kAdiabaticThreshold)) return std::nullopt;
  std::ostringstream os;
  os << "adiabaticity: lambda/omega = " << r << " exceeds " << kAdiabaticThreshold;
  return os.str();
}

std::optional<std::string> cp_warning(const DissipationParams& d) {
  const ValidationReport cp = validate_cp(d);
  if (cp.all_passed()) return std::nullopt;
  std::string msg = "dissipation violates complete positivity:";
  for (const auto& v : cp.violated()) msg += " [" + v + "]";
  return msg;
}

std::optional<std::string> overdamped_warning(const HamiltonianParams& p, const DissipationParams& d) {
  if (!is_overdamped(p.splitting(), d.alpha)) return std::nullopt;
  std::ostringstream os;
  os << "overdamped regime: alpha = " << d.alpha << " exceeds 2 omega = " << 2.0 * p.splitting();
  return os.str();
}

double default_dt(const EvolutionSpec& spec) {
  double inv = 0.0;
  for (double s : {spec.hamiltonian.splitting(), std::abs(spec.hamiltonian.lambda),
                   combos(spec.dissipation).rate()})
    inv = std::max(inv, s);
  if (inv > 0.0) return 0.01 / inv;
  return spec.t_final > 0.0 ? 0.01 * spec.t_final : 0.01;
}

double max_dt(const EvolutionSpec& spec) {
  const double s = largest_scale(spec);
  return s > 0.0 ? 0.05 / s : std::numeric_limits<double>::infinity();
}

std::vector<double> output_grid(const EvolutionSpec& spec) {
  if (spec.t_final == 0.0) return {0.0};
  std::size_t n = spec.samples;
  if (n == 0) {
    const double steps = std::ceil(spec.t_final / effective_dt(spec) - 1e-9);
    n = static_cast<std::size_t>(std::max(1.0, steps)) + 1;
  }
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k)
    grid[k] = k + 1 == n ? spec.t_final : spec.t_final * static_cast<double>(k) / static_cast<double>(n - 1);
  return grid;
}

Trajectory evolve_numerical(const EvolutionSpec& spec) {
  check_spec(spec);
  const double dt = effective_dt(spec);
  if (dt > max_dt(spec) * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dt = " << dt << " exceeds the stability bound 0.05/max(omega, lambda, rate) = " << max_dt(spec);
    throw Error(ErrorCode::InvalidSpec, os.str());
  }

  Recorder rec;
  if (auto w = cp_warning(spec.dissipation)) rec.warn(*w);

  const HamiltonianParams& hp = spec.hamiltonian;
  const DissipationCombos k = combos(spec.dissipation);
  const bool adiabatic = spec.frame == Frame::adiabatic;

  Matrix4 L = dissipator_superop(k);
  Matrix4 Heff = Matrix4::Zero();
  if (adiabatic) {
    adiabatic_warning(rec, hp);
    Heff = effective_hamiltonian_adiabatic(hp).matrix();
  }
  auto generator = [&](double t) -> Matrix4 {
    if (adiabatic) return Heff + dissipator_superop(transformed_dissipator(k, hp, t));
    return hamiltonian_superop(hp, t) + L;
  };
  auto to_lab = [&](double t, const Vector4& y) -> Vector4 {
    return adiabatic ? Vector4(basis_change(hp, t).adjoint() * y) : y;
  };

  const std::vector<double> grid = output_grid(spec);
  Vector4 y = adiabatic ? Vector4(basis_change(hp, 0.0) * spec.initial.vec()) : spec.initial.vec();
  const cplx trace0 = y(0) + y(1);
  rec.push(0.0, to_lab(0.0, y));

  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t0 = grid[i - 1];
    const double span = grid[i] - t0;
    const int m = std::max(1, static_cast<int>(std::ceil(span / dt - 1e-9)));
    const double h = span / m;
    for (int j = 0; j < m; ++j) {
      const double t = t0 + j * h;
      const Matrix4 g0 = generator(t);
      const Matrix4 g1 = generator(t + 0.5 * h);
      const Matrix4 g2 = generator(t + h);
      const Vector4 k1 = g0 * y;
      const Vector4 k2 = g1 * (y + 0.5 * h * k1);
      const Vector4 k3 = g1 * (y + 0.5 * h * k2);
      const Vector4 k4 = g2 * (y + h * k3);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      const double drift = std::abs(y(0) + y(1) - trace0);
      if (!y.allFinite() || !(drift <= kTraceDriftLimit)) {
        std::ostringstream os;
        os << "trace drift " << drift << " at t = " << t + h << " with step " << h;
        throw Error(ErrorCode::StepTooLarge, os.str());
      }
    }
    rec.push(grid[i], to_lab(grid[i], y));
  }
  return std::move(rec.traj);
}

Trajectory evolve_adiabatic_unitary(const EvolutionSpec& spec) {
  check_spec(spec);
  if (!spec.dissipation.is_zero())
    throw Error(ErrorCode::DissipationNotZero, "adiabatic unitary evolution requires zero dissipation");
  const HamiltonianParams& hp = spec.hamiltonian;
  Recorder rec;
  adiabatic_warning(rec, hp);
  const double F = effective_hamiltonian_adiabatic(hp).frequency();
  const Vector4 y0 = basis_change(hp, 0.0) * spec.initial.vec();
  for (double t : output_grid(spec)) {
    const Vector4 y = effective_phases(F, t).cwiseProduct(y0);
    rec.push(t, basis_change(hp, t).adjoint() * y);
  }
  return std::move(rec.traj);
}

Trajectory evolve_exact_dissipative(const EvolutionSpec& spec) {
  check_spec(spec);
  const HamiltonianParams& hp = spec.hamiltonian;
  const DissipationParams& d = spec.dissipation;
  const double scale = std::max(1.0, std::abs(d.alpha));
  if (hp.mu != 0.0 || d.b != 0.0 || d.c != 0.0 || d.beta != 0.0 || d.gamma != 0.0 || d.alpha < 0.0 ||
      std::abs(d.a - d.alpha) > 1e-12 * scale) {
    std::ostringstream os;
    os << "exact dissipative solution needs mu = 0 and a = alpha >= 0 with b = c = beta = gamma = 0 (mu=" << hp.mu
       << ", a=" << d.a << ", b=" << d.b << ", c=" << d.c << ", alpha=" << d.alpha << ", beta=" << d.beta
       << ", gamma=" << d.gamma << ")";
    throw Error(ErrorCode::UnsupportedRegime, os.str());
  }
  const double w = hp.splitting();
  if (!(w > 0.0)) throw Error(ErrorCode::DegenerateHamiltonian, "level splitting is zero");

  Recorder rec;
  adiabatic_warning(rec, hp);
  if (auto ow = overdamped_warning(hp, d)) rec.warn(*ow);
  const Vector4 y0 = basis_change(hp, 0.0) * spec.initial.vec();
  for (double t : output_grid(spec)) {
    const Vector4 y = dissipative_propagator(w, d.alpha, hp.lambda, t) * y0;
    rec.push(t, basis_change(hp, t).adjoint() * y);
  }
  return std::move(rec.traj);
}

Trajectory evolve_perturbative(const EvolutionSpec& spec) {
  check_spec(spec);
  const HamiltonianParams& hp = spec.hamiltonian;
  Recorder rec;
  adiabatic_warning(rec, hp);
  const double w = hp.splitting();
  const double ratio = spec.dissipation.magnitude() / w;
  if (ratio > 0.1) {
    std::ostringstream os;
    os << "perturbative: dissipation/omega = " << ratio << " exceeds 0.1";
    rec.warn(os.str());
  }
  const DissipationCombos k = combos(spec.dissipation);
  const double F = effective_hamiltonian_adiabatic(hp).frequency();
  const Vector4 y0 = basis_change(hp, 0.0) * spec.initial.vec();

  // Interaction-picture integrand e^{-H_eff s} L~(s) e^{H_eff s} y0.
  auto integrand = [&](double s) -> Vector4 {
    const Vector4 e = effective_phases(F, s);
    const Matrix4 Lt = dissipator_superop(transformed_dissipator(k, hp, s));
    return Lt * e.cwiseProduct(y0).eval();
  };
  auto back = [&](double s, const Vector4& v) -> Vector4 {
    return effective_phases(F, -s).cwiseProduct(v);
  };

  const std::vector<double> grid = output_grid(spec);
  const double dt = effective_dt(spec);
  Vector4 integral = Vector4::Zero();
  rec.push(0.0, basis_change(hp, 0.0).adjoint() * y0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double a = grid[i - 1];
    const double span = grid[i] - a;
    const int n = 4 * std::max(1, static_cast<int>(std::ceil(span / dt - 1e-9)));
    const double h = span / n;
    Vector4 acc = back(a, integrand(a)) + back(grid[i], integrand(grid[i]));
    for (int j = 1; j < n; ++j) {
      const double s = a + j * h;
      acc += (j % 2 == 1 ? 4.0 : 2.0) * back(s, integrand(s));
    }
    integral += (h / 3.0) * acc;
    const double t = grid[i];
    const Vector4 y = effective_phases(F, t).cwiseProduct(y0 + integral);
    rec.push(t, basis_change(hp, t).adjoint() * y);
  }
  return std::move(rec.traj);
}

Trajectory evolve(const EvolutionSpec& spec) {
  switch (spec.solver) {
    case SolverKind::numerical: return evolve_numerical(spec);
    case SolverKind::adiabatic_unitary: return evolve_adiabatic_unitary(spec);
    case SolverKind::exact_dissipative: return evolve_exact_dissipative(spec);
    case SolverKind::perturbative: return evolve_perturbative(spec);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown solver");
}

}  // namespace photodissim
