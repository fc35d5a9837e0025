#include "photodissim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "photodissim/error.hpp"
#include "photodissim/propagators.hpp"

namespace photodissim {

std::string_view to_string(OutputKind k) {
  switch (k) {
    case OutputKind::trajectory: return "trajectory";
    case OutputKind::probability: return "probability";
    case OutputKind::spectrum: return "spectrum";
    case OutputKind::fit: return "fit";
  }
  return "unknown";
}

DensityMatrix InitialState::density() const {
  switch (kind) {
    case Kind::L: return DensityMatrix::left();
    case Kind::R: return DensityMatrix::right();
    case Kind::linear: return DensityMatrix::from_matrix(projector({theta, 0.0}).matrix());
    case Kind::stokes: return DensityMatrix::from_bloch(stokes[0], stokes[1], stokes[2]);
  }
  return DensityMatrix::left();
}

EvolutionSpec ScenarioConfig::evolution_spec() const {
  EvolutionSpec s;
  s.hamiltonian = hamiltonian;
  s.dissipation = dissipation;
  s.initial = initial.vector();
  s.t_final = t_final;
  s.dt = dt;
  s.samples = t_final > 0.0 ? samples : 1;
  s.solver = solver;
  s.frame = frame;
  return s;
}

bool ScenarioConfig::wants(OutputKind k) const {
  return std::find(outputs.begin(), outputs.end(), k) != outputs.end();
}

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& reason) {
  throw Error(ErrorCode::BadValue, key + ": " + reason);
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const YAML::Node& node, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!node.IsMap()) bad_value(where.empty() ? "<document>" : where, "must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) bad_value(join(where, key), "unknown key");
  }
}

double number(const YAML::Node& node, const std::string& key) {
  double v = 0.0;
  try {
    v = node.as<double>();
  } catch (const YAML::Exception&) {
    bad_value(key, "must be a number");
  }
  if (!std::isfinite(v)) bad_value(key, "must be finite");
  return v;
}

void read_number(const YAML::Node& parent, const std::string& where, const char* name, double& out,
                 bool required = false) {
  const YAML::Node n = parent[name];
  if (!n) {
    if (required) throw Error(ErrorCode::MissingKey, join(where, name));
    return;
  }
  out = number(n, join(where, name));
}

std::string text(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) bad_value(key, "must be a string");
  return node.as<std::string>();
}

InitialState parse_initial(const YAML::Node& n) {
  const std::string key = "initial_state";
  InitialState s;
  if (n.IsScalar()) {
    const std::string v = n.as<std::string>();
    if (v == "L") s.kind = InitialState::Kind::L;
    else if (v == "R") s.kind = InitialState::Kind::R;
    else bad_value(key, "expected L, R, {linear: theta} or {stokes: [s1, s2, s3]}");
    return s;
  }
  check_keys(n, key, {"linear", "stokes"});
  if (n.size() != 1) bad_value(key, "give exactly one of linear or stokes");
  if (n["linear"]) {
    s.kind = InitialState::Kind::linear;
    s.theta = number(n["linear"], key + ".linear");
    return s;
  }
  const YAML::Node st = n["stokes"];
  if (!st.IsSequence() || st.size() != 3) bad_value(key + ".stokes", "must be a list of three numbers");
  s.kind = InitialState::Kind::stokes;
  for (std::size_t i = 0; i < 3; ++i) s.stokes[i] = number(st[i], key + ".stokes");
  const double norm = std::sqrt(s.stokes[0] * s.stokes[0] + s.stokes[1] * s.stokes[1] + s.stokes[2] * s.stokes[2]);
  if (norm > 1.0 + tol::kConstruction) bad_value(key + ".stokes", "length must be <= 1");
  return s;
}

void check_cp(const ScenarioConfig& cfg) {
  if (cfg.allow_noncp) return;
  const ValidationReport report = validate_cp(cfg.dissipation);
  if (report.all_passed()) return;
  std::ostringstream os;
  os << "dissipation is not completely positive:";
  for (const auto& c : report.conditions)
    if (!c.passed && c.follows_from.empty()) os << " [" << c.name << " violated, residual " << c.residual << "]";
  throw Error(ErrorCode::NonCPDissipation, os.str());
}

struct NumericKey {
  std::string_view name;
  std::function<double&(ScenarioConfig&)> ref;
};

const std::vector<NumericKey>& numeric_table() {
  static const std::vector<NumericKey> table = {
      {"hamiltonian.omega0", [](ScenarioConfig& c) -> double& { return c.hamiltonian.omega0; }},
      {"hamiltonian.mu", [](ScenarioConfig& c) -> double& { return c.hamiltonian.mu; }},
      {"hamiltonian.nu", [](ScenarioConfig& c) -> double& { return c.hamiltonian.nu; }},
      {"hamiltonian.lambda", [](ScenarioConfig& c) -> double& { return c.hamiltonian.lambda; }},
      {"dissipation.a", [](ScenarioConfig& c) -> double& { return c.dissipation.a; }},
      {"dissipation.b", [](ScenarioConfig& c) -> double& { return c.dissipation.b; }},
      {"dissipation.c", [](ScenarioConfig& c) -> double& { return c.dissipation.c; }},
      {"dissipation.alpha", [](ScenarioConfig& c) -> double& { return c.dissipation.alpha; }},
      {"dissipation.beta", [](ScenarioConfig& c) -> double& { return c.dissipation.beta; }},
      {"dissipation.gamma", [](ScenarioConfig& c) -> double& { return c.dissipation.gamma; }},
      {"analyzer.theta", [](ScenarioConfig& c) -> double& { return c.analyzer.theta; }},
      {"analyzer.phi", [](ScenarioConfig& c) -> double& { return c.analyzer.phi; }},
      {"time.t_final", [](ScenarioConfig& c) -> double& { return c.t_final; }},
      {"time.dt", [](ScenarioConfig& c) -> double& { return c.dt; }},
      {"noise.sigma", [](ScenarioConfig& c) -> double& { return c.noise_sigma; }},
  };
  return table;
}

}  // namespace

void validate_config(const ScenarioConfig& cfg) {
  const auto finite = [](const char* key, double v) {
    if (!std::isfinite(v)) bad_value(key, "must be finite");
  };
  finite("hamiltonian.omega0", cfg.hamiltonian.omega0);
  finite("hamiltonian.mu", cfg.hamiltonian.mu);
  finite("hamiltonian.nu", cfg.hamiltonian.nu);
  finite("hamiltonian.lambda", cfg.hamiltonian.lambda);
  finite("dissipation.b", cfg.dissipation.b);
  finite("dissipation.c", cfg.dissipation.c);
  finite("dissipation.beta", cfg.dissipation.beta);
  finite("analyzer.theta", cfg.analyzer.theta);
  finite("analyzer.phi", cfg.analyzer.phi);
  for (auto [key, v] : {std::pair{"dissipation.a", cfg.dissipation.a}, std::pair{"dissipation.alpha", cfg.dissipation.alpha},
                        std::pair{"dissipation.gamma", cfg.dissipation.gamma}}) {
    finite(key, v);
    if (v < 0.0) bad_value(key, "must be >= 0");
  }
  finite("time.t_final", cfg.t_final);
  if (cfg.t_final < 0.0) bad_value("time.t_final", "must be >= 0");
  finite("time.dt", cfg.dt);
  if (cfg.dt < 0.0) bad_value("time.dt", "must be > 0 (or 0 for the default)");
  if (cfg.t_final > 0.0 && cfg.samples < 2) bad_value("time.samples", "must be >= 2");
  finite("noise.sigma", cfg.noise_sigma);
  if (cfg.noise_sigma < 0.0) bad_value("noise.sigma", "must be >= 0");
  if (cfg.solver != SolverKind::numerical && cfg.frame != Frame::lab)
    bad_value("frame", "only the numerical solver takes a frame");
  if (cfg.fit_guess) {
    const FitEstimates& g = *cfg.fit_guess;
    if (!(g.omega > 0.0)) bad_value("fit.initial_guess.omega", "must be > 0");
    if (!(g.alpha >= 0.0) || !(g.alpha < 2.0 * g.omega))
      bad_value("fit.initial_guess.alpha", "must satisfy 0 <= alpha < 2 omega");
  }
  check_cp(cfg);
}

ScenarioConfig parse_config(std::string_view source, const ParseOptions& options) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(source));
  } catch (const YAML::Exception& e) {
    bad_value("<document>", std::string("malformed YAML: ") + e.what());
  }
  if (!doc || doc.IsNull()) throw Error(ErrorCode::MissingKey, "hamiltonian");
  check_keys(doc, "", {"hamiltonian", "dissipation", "initial_state", "analyzer", "time", "solver", "frame",
                       "outputs", "seed", "noise", "spectrum", "fit"});

  ScenarioConfig cfg;
  cfg.allow_noncp = options.allow_noncp;

  const YAML::Node h = doc["hamiltonian"];
  if (!h) throw Error(ErrorCode::MissingKey, "hamiltonian");
  check_keys(h, "hamiltonian", {"omega0", "mu", "nu", "lambda"});
  read_number(h, "hamiltonian", "omega0", cfg.hamiltonian.omega0, true);
  read_number(h, "hamiltonian", "mu", cfg.hamiltonian.mu);
  read_number(h, "hamiltonian", "nu", cfg.hamiltonian.nu, true);
  read_number(h, "hamiltonian", "lambda", cfg.hamiltonian.lambda);

  if (const YAML::Node d = doc["dissipation"]) {
    check_keys(d, "dissipation", {"a", "b", "c", "alpha", "beta", "gamma"});
    read_number(d, "dissipation", "a", cfg.dissipation.a);
    read_number(d, "dissipation", "b", cfg.dissipation.b);
    read_number(d, "dissipation", "c", cfg.dissipation.c);
    read_number(d, "dissipation", "alpha", cfg.dissipation.alpha);
    read_number(d, "dissipation", "beta", cfg.dissipation.beta);
    read_number(d, "dissipation", "gamma", cfg.dissipation.gamma);
  }

  if (const YAML::Node s = doc["initial_state"]) cfg.initial = parse_initial(s);

  if (const YAML::Node a = doc["analyzer"]) {
    check_keys(a, "analyzer", {"theta", "phi"});
    read_number(a, "analyzer", "theta", cfg.analyzer.theta);
    read_number(a, "analyzer", "phi", cfg.analyzer.phi);
  }

  if (const YAML::Node t = doc["time"]) {
    check_keys(t, "time", {"t_final", "dt", "samples"});
    read_number(t, "time", "t_final", cfg.t_final);
    read_number(t, "time", "dt", cfg.dt);
    if (const YAML::Node n = t["samples"]) {
      const double v = number(n, "time.samples");
      if (v != std::floor(v) || v < 0.0 || v > 1e8) bad_value("time.samples", "must be a non-negative integer");
      cfg.samples = static_cast<std::size_t>(v);
    }
  }

  if (const YAML::Node s = doc["solver"]) {
    try {
      cfg.solver = solver_from_string(text(s, "solver"));
    } catch (const Error&) {
      bad_value("solver", "expected numerical, adiabatic_unitary, exact_dissipative or perturbative");
    }
  }
  if (const YAML::Node f = doc["frame"]) {
    try {
      cfg.frame = frame_from_string(text(f, "frame"));
    } catch (const Error&) {
      bad_value("frame", "expected lab or adiabatic");
    }
  }

  if (const YAML::Node o = doc["outputs"]) {
    if (!o.IsSequence()) bad_value("outputs", "must be a list");
    cfg.outputs.clear();
    for (const auto& item : o) {
      const std::string v = text(item, "outputs");
      OutputKind k{};
      if (v == "trajectory") k = OutputKind::trajectory;
      else if (v == "probability") k = OutputKind::probability;
      else if (v == "spectrum") k = OutputKind::spectrum;
      else if (v == "fit") k = OutputKind::fit;
      else bad_value("outputs", "unknown output '" + v + "'");
      if (!cfg.wants(k)) cfg.outputs.push_back(k);
    }
  }

  if (const YAML::Node s = doc["seed"]) {
    const double v = number(s, "seed");
    if (v != std::floor(v) || v < 0.0 || v > 9.0e15) bad_value("seed", "must be a non-negative integer");
    cfg.seed = static_cast<std::uint64_t>(v);
  }

  if (const YAML::Node n = doc["noise"]) {
    check_keys(n, "noise", {"sigma"});
    read_number(n, "noise", "sigma", cfg.noise_sigma);
  }

  if (const YAML::Node s = doc["spectrum"]) {
    check_keys(s, "spectrum", {"window"});
    if (const YAML::Node w = s["window"]) {
      const std::string v = text(w, "spectrum.window");
      if (v == "hann") cfg.window = Window::hann;
      else if (v == "rectangular") cfg.window = Window::rectangular;
      else bad_value("spectrum.window", "expected hann or rectangular");
    }
  }

  if (const YAML::Node f = doc["fit"]) {
    check_keys(f, "fit", {"initial_guess"});
    if (const YAML::Node g = f["initial_guess"]) {
      check_keys(g, "fit.initial_guess", {"omega", "alpha", "lambda", "theta0", "amplitude"});
      FitEstimates e;
      const std::string w = "fit.initial_guess";
      read_number(g, w, "omega", e.omega, true);
      read_number(g, w, "alpha", e.alpha, true);
      read_number(g, w, "lambda", e.lambda, true);
      read_number(g, w, "theta0", e.theta0, true);
      e.amplitude = 0.0;
      read_number(g, w, "amplitude", e.amplitude);
      if (e.amplitude == 0.0 && e.omega > 0.0 && e.alpha < 2.0 * e.omega)
        e.amplitude = e.omega / (2.0 * damped_frequency(e.omega, e.alpha));
      cfg.fit_guess = e;
    }
  }

  validate_config(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), options);
}

void set_numeric(ScenarioConfig& cfg, std::string_view key, double value) {
  for (const auto& k : numeric_table()) {
    if (k.name == key) {
      k.ref(cfg) = value;
      return;
    }
  }
  throw Error(ErrorCode::BadAxis, "'" + std::string(key) + "' is not a numeric config key");
}

double get_numeric(const ScenarioConfig& cfg, std::string_view key) {
  ScenarioConfig copy = cfg;
  for (const auto& k : numeric_table())
    if (k.name == key) return k.ref(copy);
  throw Error(ErrorCode::BadAxis, "'" + std::string(key) + "' is not a numeric config key");
}

std::vector<std::string> numeric_keys() {
  std::vector<std::string> out;
  for (const auto& k : numeric_table()) out.emplace_back(k.name);
  return out;
}

}  // namespace photodissim
