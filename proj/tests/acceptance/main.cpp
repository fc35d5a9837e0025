// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../helpers.hpp"
#include "../oracles.hpp"
#include "photodissim/analysis.hpp"
#include "photodissim/generators.hpp"
#include "photodissim/observables.hpp"
#include "photodissim/propagators.hpp"
#include "photodissim/solvers.hpp"

using namespace photodissim;

namespace {

// Tolerances and acceptance windows.
constexpr double kC1Tol = 1e-7;
constexpr double kC2MinEig = -1e-8;
constexpr double kC3Drift = 1e-10;
constexpr double kC4Tol = 1e-12;
constexpr double kC5Bins = 2.0;
constexpr double kC6Static = 1e-12;
constexpr double kC6SlopeLo = 0.9, kC6SlopeHi = 1.1;
constexpr double kC7Tol = 1e-8;
constexpr double kC8Lo = 3.5, kC8Hi = 4.5;
constexpr double kC9Clean = 1e-3;
constexpr double kC9Noisy = 0.05;
constexpr double kC10Lo = 14.0, kC10Hi = 18.0;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

EvolutionSpec make_spec(HamiltonianParams h, DissipationParams d, double t_final, std::size_t samples,
                        SolverKind k = SolverKind::numerical, Frame f = Frame::lab) {
  EvolutionSpec s;
  s.hamiltonian = h;
  s.dissipation = d;
  s.initial = vectorize(DensityMatrix::left());
  s.t_final = t_final;
  s.samples = samples;
  s.solver = k;
  s.frame = f;
  return s;
}

// Conservation is tracked over every trajectory produced for criteria 1 and 2.
double g_trace_drift = 0.0;
double g_herm_drift = 0.0;
std::size_t g_trajectories = 0;

void track(const Trajectory& tr) {
  g_trace_drift = std::max(g_trace_drift, tr.max_trace_drift);
  g_herm_drift = std::max(g_herm_drift, tr.max_hermiticity_drift);
  ++g_trajectories;
}

const HamiltonianParams kH1{1.0, 0.0, 1.0, 0.01};
const DissipationParams kD1{0.05, 0, 0, 0.05, 0, 0};

Outcome criterion1() {
  double worst = 0.0, lab = 0.0;
  for (double th : {0.0, kPi / 8, kPi / 4}) {
    const Trajectory tr = evolve(make_spec(kH1, kD1, 50.0, 5001, SolverKind::numerical, Frame::adiabatic));
    track(tr);
    const IntensitySeries p = prob_from_trajectory(tr, {th, 0.0});
    for (std::size_t i = 0; i < p.size(); ++i)
      worst = std::max(worst, std::abs(p.values[i] - prob_dissipative(1.0, 0.05, 0.01, th, p.times[i])));

    const Trajectory tl = evolve(make_spec(kH1, kD1, 50.0, 5001));
    track(tl);
    const IntensitySeries q = prob_from_trajectory(tl, {th, 0.0});
    for (std::size_t i = 0; i < q.size(); ++i)
      lab = std::max(lab, std::abs(q.values[i] - prob_dissipative(1.0, 0.05, 0.01, th, q.times[i])));
  }
  std::printf("       info: lab-frame RK4 vs closed form max diff %.3e (adiabatic approximation, O(lambda/omega))\n",
              lab);
  return {worst < kC1Tol, fmt("adiabatic-frame RK4 vs closed form, max |dP| = %.3e (< %.0e)", worst, kC1Tol)};
}

Outcome criterion2() {
  const ValidationReport ok = validate_cp({1, 0, 0, 1, 0, 1});
  const ValidationReport bad = validate_cp({1, 0, 0, 2, 0, 0});
  const auto violated = bad.violated();
  // every failing condition is 2S itself or a minor whose failure follows from it
  bool only_2s = violated.size() == 1 && violated[0].rfind("2S", 0) == 0;
  for (const auto& c : bad.conditions)
    if (!c.passed && c.name.rfind("2S", 0) != 0)
      only_2s = only_2s && c.follows_from.size() == 1 && c.follows_from[0] == violated[0];
  const bool gate = ok.all_passed() && ok.conditions.size() == 10 && only_2s;

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> scale(0.01, 0.5);
  double min_eig = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const HamiltonianParams h = testing_helpers::random_hamiltonian(rng);
    const DissipationParams d = testing_helpers::random_cp(rng, scale(rng));
    if (!validate_cp(d, 1e-12).all_passed()) return {false, "random_cp produced a non-CP set"};
    EvolutionSpec s = make_spec(h, d, 20.0, 201);
    s.initial = StateVector4(oracle::vec(oracle::random_pure(rng)));
    const Trajectory tr = evolve(s);
    track(tr);
    for (const auto& st : tr.states) min_eig = std::min(min_eig, min_eigenvalue(st));
  }
  return {gate && min_eig >= kC2MinEig,
          fmt("(1,0,0,1,0,1) passes all %zu, (1,0,0,2,0,0) violates only [%s] (dependent minors flagged as following from it); 1000 random CP runs min eig %.3e",
              ok.conditions.size(), violated.empty() ? "" : violated[0].c_str(), min_eig)};
}

Outcome criterion3() {
  return {g_trace_drift < kC3Drift && g_herm_drift < kC3Drift,
          fmt("%zu trajectories: max trace drift %.3e, max hermiticity drift %.3e (< %.0e)", g_trajectories,
              g_trace_drift, g_herm_drift, kC3Drift)};
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ut(0.0, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const HamiltonianParams p = testing_helpers::random_hamiltonian(rng);
    const DissipationCombos k = combos(testing_helpers::random_params(rng, 1.0));
    const double t = ut(rng);
    const Matrix4 u = basis_change(p, t);
    const Matrix4 diff = dissipator_superop(transformed_dissipator(k, p, t)) - u * dissipator_superop(k) * u.adjoint();
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  double family = 0.0;
  for (double alpha : {0.01, 0.05, 0.3})
    for (double lambda : {0.0, 0.01, 0.1})
      for (double t : {0.0, 1.0, 13.7, 50.0}) {
        const DissipationCombos kt = transformed_dissipator(combos({alpha, 0, 0, alpha, 0, 0}), {1, 0, 1, lambda}, t);
        family = std::max({family, std::abs(kt.A - alpha), std::abs(kt.D - alpha),
                           std::abs(kt.B - alpha * std::exp(cplx(0, -2 * lambda * t))), std::abs(kt.C)});
      }
  return {worst < kC4Tol && family < kC4Tol,
          fmt("closed form vs U L U^+ max %.3e; gamma=0 family max %.3e (< %.0e)", worst, family, kC4Tol)};
}

Outcome criterion5() {
  IntensitySeries s;
  const std::size_t n = 8192;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 400.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    s.times.push_back(t);
    s.values.push_back(prob_adiabatic_mu0(1.0, 0.05, 0.0, t));
  }
  const SpectrumReport r = spectrum(s, Window::hann);
  if (r.peaks.size() < 2) return {false, "fewer than two peaks"};
  const BerrySplit b = berry_split(r);
  const double tol = kC5Bins * r.bin_width;
  const bool symmetric = std::abs(b.center - 2.0) < tol;
  return {symmetric && std::abs(b.split - 0.05) < tol,
          fmt("peaks %.5f, %.5f: center %.5f, half-split %.5f (bin %.5f, tolerance %.1f bins)", r.peaks[0].frequency,
              r.peaks[1].frequency, b.center, b.split, r.bin_width, kC5Bins)};
}

Outcome criterion6() {
  const double lb = berry_phase({1.0, 0.0, 1.0, 0.1});
  double stat = 0.0;
  for (int k = 0; k <= 100; ++k) stat = std::max(stat, adiabatic_diagonality_check({0.0, 0.0, 1.0, 0.0}, 0.1 * k));
  std::vector<double> xs, ys;
  for (double lambda : {1e-3, 1e-2, 1e-1}) {
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) worst = std::max(worst, adiabatic_diagonality_check({0.0, 0.0, 1.0, lambda}, 0.1 * k));
    xs.push_back(std::log(lambda));
    ys.push_back(std::log(worst));
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3, my = (ys[0] + ys[1] + ys[2]) / 3;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  return {lb == 0.05 && stat < kC6Static && slope >= kC6SlopeLo && slope <= kC6SlopeHi,
          fmt("lambda_B = %.17g; off-diagonal at lambda=0 %.3e; log-log slope %.4f", lb, stat, slope)};
}

Outcome criterion7() {
  const DissipationParams d{0.1, 0, 0, 0.1, 0, 0};
  const Trajectory tr = evolve(make_spec(kH1, d, 200.0, 2001, SolverKind::exact_dissipative));
  const Trajectory tn = evolve(make_spec(kH1, d, 200.0, 2001, SolverKind::numerical, Frame::adiabatic));
  double dp = 0.0;
  for (double th : {0.0, kPi / 8, kPi / 4, 1.0}) {
    dp = std::max(dp, std::abs(prob_dissipative(1.0, 0.1, 0.01, th, 200.0) - 0.5));
    dp = std::max(dp, std::abs(expectation(projector({th, 0.0}), tr.states.back()) - 0.5));
    dp = std::max(dp, std::abs(expectation(projector({th, 0.0}), tn.states.back()) - 0.5));
  }
  const double dpur = std::max(std::abs(purity(tr.states.back()) - 0.5), std::abs(purity(tn.states.back()) - 0.5));
  return {dp <= kC7Tol && dpur <= kC7Tol,
          fmt("alpha=0.1, t=200: max |P - 1/2| %.3e, |purity - 1/2| %.3e (<= %.0e)", dp, dpur, kC7Tol)};
}

Outcome criterion8() {
  // residual envelope ~ alpha^2 t e^{-alpha t}: on [0, T] the halving ratio is 4 e^{-alpha0 T / 2}
  const double a0 = 0.02;
  const auto err = [](double alpha, double t_final) {
    double worst = 0.0;
    for (int i = 0; i <= 1500; ++i) {
      const double t = t_final * i / 1500.0;
      for (double th : {0.0, kPi / 8, 0.5})
        worst = std::max(worst, std::abs(prob_perturbative({1, 0, 1, 0.01}, combos({alpha, 0, 0, alpha, 0, 0}), th, t) -
                                         prob_dissipative(1.0, alpha, 0.01, th, t)));
    }
    return worst;
  };
  const double edge = err(a0, 0.3 / a0) / err(a0 / 2, 0.3 / a0);
  std::printf("       info: window alpha0 t <= 0.3 gives ratio %.3f (4 e^{-0.15} = %.3f)\n", edge, 4 * std::exp(-0.15));
  const double t_final = 0.2 / a0;
  const double e1 = err(a0, t_final), e2 = err(a0 / 2, t_final);
  const double ratio = e1 / e2;
  return {ratio >= kC8Lo && ratio <= kC8Hi,
          fmt("window alpha0 t <= 0.2: max discrepancy %.3e at alpha=%.3g, %.3e at alpha=%.3g, ratio %.3f", e1, a0, e2,
              a0 / 2, ratio)};
}

Outcome criterion9() {
  const double w = 1.0, al = 0.05, la = 0.01, th = 0.3;
  IntensitySeries clean;
  for (int i = 0; i < 2048; ++i) {
    const double t = 100.0 * i / 2047.0;
    clean.times.push_back(t);
    clean.values.push_back(prob_dissipative(w, al, la, th, t));
  }
  double worst = 0.0;
  const double signs[4][4] = {{1, 1, 1, 1}, {-1, -1, -1, -1}, {1, -1, 1, -1}, {-1, 1, -1, 1}};
  for (const auto& sg : signs) {
    const FitEstimates guess{w * (1 + 0.1 * sg[0]), al * (1 + 0.1 * sg[1]), la * (1 + 0.1 * sg[2]),
                             th * (1 + 0.1 * sg[3]), 0.5};
    const FitResult r = fit_dissipative(clean, guess);
    worst = std::max({worst, std::abs(r.estimates.omega - w) / w, std::abs(r.estimates.alpha - al) / al,
                      std::abs(r.estimates.lambda - la) / la});
  }
  const FitResult noisy = fit_dissipative(add_gaussian_noise(clean, 0.01, 42), {w * 1.1, al * 0.9, la * 1.1, th, 0.5});
  const double nerr = std::abs(noisy.estimates.alpha - al) / al;
  return {worst < kC9Clean && nerr < kC9Noisy,
          fmt("noiseless worst relative error %.3e (< %.0e); sigma=0.01 alpha error %.3f%% (< %.0f%%)", worst, kC9Clean,
              100 * nerr, 100 * kC9Noisy)};
}

Outcome criterion10() {
  const Trajectory exact = evolve(make_spec(kH1, kD1, 50.0, 51, SolverKind::exact_dissipative));
  const auto err = [&](double dt) {
    EvolutionSpec s = make_spec(kH1, kD1, 50.0, 51, SolverKind::numerical, Frame::adiabatic);
    s.dt = dt;
    const Trajectory tr = evolve(s);
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i)
      worst = std::max(worst, (tr.states[i].vec() - exact.states[i].vec()).cwiseAbs().maxCoeff());
    return worst;
  };
  const double e1 = err(0.05), e2 = err(0.025);
  const double ratio = e1 / e2;
  return {ratio >= kC10Lo && ratio <= kC10Hi,
          fmt("error %.3e at dt=0.05, %.3e at dt=0.025, ratio %.2f", e1, e2, ratio)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed form vs numerical", criterion1},   {"complete positivity gate", criterion2},
      {"trace and hermiticity", criterion3},      {"transformed dissipator", criterion4},
      {"Berry split in spectrum", criterion5},    {"Berry phase value", criterion6},
      {"asymptotic depolarization", criterion7},  {"perturbative order", criterion8},
      {"fit recovery", criterion9},               {"RK4 convergence order", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
