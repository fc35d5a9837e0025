#include "photodissim/dissipation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace photodissim {

double DissipationParams::magnitude() const noexcept {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(alpha), std::abs(beta), std::abs(gamma)});
}

double phase(cplx z) noexcept { return z == cplx(0.0, 0.0) ? 0.0 : std::arg(z); }

DissipationParams DissipationCombos::params() const noexcept {
  return {0.5 * (A - B.real()), 0.5 * B.imag(), C.real(), 0.5 * (A + B.real()), C.imag(), D};
}

double DissipationCombos::rate() const noexcept {
  return std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(D)});
}

DissipationCombos combos_from_entries(double A, cplx B, cplx C, double D) {
  DissipationCombos out;
  out.A = A;
  out.B = B;
  out.C = C;
  out.D = D;
  out.phiB = phase(B);
  out.phiC = phase(C);
  const DissipationParams p = out.params();
  out.R = 0.5 * (p.alpha + p.gamma - p.a);
  out.S = 0.5 * (p.a + p.gamma - p.alpha);
  out.T = 0.5 * (p.a + p.alpha - p.gamma);
  return out;
}

DissipationCombos combos(const DissipationParams& p) {
  DissipationCombos out;
  out.A = p.alpha + p.a;
  out.B = cplx(p.alpha - p.a, 2.0 * p.b);
  out.C = cplx(p.c, p.beta);
  out.D = p.gamma;
  out.phiB = phase(out.B);
  out.phiC = phase(out.C);
  out.R = 0.5 * (p.alpha + p.gamma - p.a);
  out.S = 0.5 * (p.a + p.gamma - p.alpha);
  out.T = 0.5 * (p.a + p.alpha - p.gamma);
  return out;
}

ValidationReport validate_cp(const DissipationParams& p, double slack) {
  const DissipationCombos k = combos(p);
  const double R = k.R, S = k.S, T = k.T;
  const double b = p.b, c = p.c, beta = p.beta;

  ValidationReport report;
  auto add = [&](std::string name, double value, std::vector<std::size_t> needs = {}) {
    CPCondition cond{std::move(name), value, value >= -slack, {}};
    for (std::size_t i : needs)
      if (!report.conditions[i].passed) cond.follows_from.push_back(report.conditions[i].name);
    report.conditions.push_back(std::move(cond));
  };
  add("a >= 0", p.a);
  add("alpha >= 0", p.alpha);
  add("gamma >= 0", p.gamma);
  add("2R = alpha + gamma - a >= 0", 2.0 * R);
  add("2S = a + gamma - alpha >= 0", 2.0 * S);
  add("2T = a + alpha - gamma >= 0", 2.0 * T);
  add("RS - b^2 >= 0", R * S - b * b, {3, 4});
  add("RT - c^2 >= 0", R * T - c * c, {3, 5});
  add("ST - beta^2 >= 0", S * T - beta * beta, {4, 5});
  add("RST - 2 b c beta - R beta^2 - S c^2 - T b^2 >= 0",
      R * S * T - 2.0 * b * c * beta - R * beta * beta - S * c * c - T * b * b, {3, 4, 5});
  return report;
}

bool ValidationReport::all_passed() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [](const CPCondition& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::violated() const {
  std::vector<std::string> out;
  for (const auto& c : conditions)
    if (!c.passed && c.follows_from.empty()) out.push_back(c.name);
  return out;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& c : conditions) {
    os << (c.passed ? "pass  " : "FAIL  ") << c.name << "  residual=" << c.residual;
    if (!c.passed && !c.follows_from.empty()) {
      os << "  (follows from";
      for (const auto& f : c.follows_from) os << " [" << f << "]";
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace photodissim
