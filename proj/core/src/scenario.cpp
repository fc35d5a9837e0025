#include "photodissim/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

#include <nlohmann/json.hpp>

#include "photodissim/error.hpp"
#include "photodissim/propagators.hpp"

namespace photodissim {

namespace {

using nlohmann::json;

void add_warning(std::vector<std::string>& list, const std::optional<std::string>& w) {
  if (w && std::find(list.begin(), list.end(), *w) == list.end()) list.push_back(*w);
}

FitEstimates default_guess(const ScenarioConfig& cfg) {
  const double w = cfg.hamiltonian.splitting();
  const double a = cfg.dissipation.alpha;
  if (!(w > 0.0) || !(a < 2.0 * w))
    throw Error(ErrorCode::UnsupportedRegime, "fit needs an underdamped starting point; set fit.initial_guess");
  return {w, a, cfg.hamiltonian.lambda, cfg.analyzer.theta, w / (2.0 * damped_frequency(w, a))};
}

std::string extension(OutputFormat f) { return f == OutputFormat::json ? ".json" : ".csv"; }

json config_json(const ScenarioConfig& c) {
  json initial;
  switch (c.initial.kind) {
    case InitialState::Kind::L: initial = "L"; break;
    case InitialState::Kind::R: initial = "R"; break;
    case InitialState::Kind::linear: initial = {{"linear", c.initial.theta}}; break;
    case InitialState::Kind::stokes: initial = {{"stokes", c.initial.stokes}}; break;
  }
  json outputs = json::array();
  for (auto k : c.outputs) outputs.push_back(std::string(to_string(k)));
  json j = {
      {"hamiltonian",
       {{"omega0", c.hamiltonian.omega0}, {"mu", c.hamiltonian.mu}, {"nu", c.hamiltonian.nu},
        {"lambda", c.hamiltonian.lambda}}},
      {"dissipation",
       {{"a", c.dissipation.a}, {"b", c.dissipation.b}, {"c", c.dissipation.c}, {"alpha", c.dissipation.alpha},
        {"beta", c.dissipation.beta}, {"gamma", c.dissipation.gamma}}},
      {"initial_state", initial},
      {"analyzer", {{"theta", c.analyzer.theta}, {"phi", c.analyzer.phi}}},
      {"time", {{"t_final", c.t_final}, {"dt", c.dt}, {"samples", c.samples}}},
      {"solver", std::string(to_string(c.solver))},
      {"frame", std::string(to_string(c.frame))},
      {"outputs", outputs},
      {"seed", c.seed},
      {"noise", {{"sigma", c.noise_sigma}}},
      {"spectrum", {{"window", c.window == Window::hann ? "hann" : "rectangular"}}},
      {"allow_noncp", c.allow_noncp},
  };
  if (c.fit_guess) {
    const FitEstimates& g = *c.fit_guess;
    j["fit"]["initial_guess"] = {{"omega", g.omega}, {"alpha", g.alpha}, {"lambda", g.lambda},
                                 {"theta0", g.theta0}, {"amplitude", g.amplitude}};
  }
  return j;
}

std::string axis_label(std::size_t index, std::string_view axis, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%03zu_", index);
  char val[32];
  std::snprintf(val, sizeof val, "%.10g", value);
  return std::string(buf) + std::string(axis) + "=" + val;
}

}  // namespace

std::string report_json(const RunReport& report) {
  json artifacts = json::array();
  for (const auto& p : report.artifacts) artifacts.push_back(p.filename().string());
  json j = {{"config", config_json(report.config)}, {"warnings", report.warnings}, {"artifacts", artifacts}};
  if (report.spectrum && report.spectrum->peaks.size() >= 2) {
    const BerrySplit b = berry_split(*report.spectrum);
    j["spectrum"] = {{"center", b.center}, {"split", b.split}, {"bin_width", report.spectrum->bin_width}};
  }
  if (report.fit) {
    j["fit"] = {{"alpha", report.fit->estimates.alpha},
                {"converged", report.fit->converged},
                {"model_mismatch", report.fit->model_mismatch}};
    if (report.envelope_alpha) j["fit"]["envelope_alpha"] = *report.envelope_alpha;
  }
  return j.dump(2) + "\n";
}

RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(cfg);

  RunReport report;
  report.config = cfg;
  const std::string context = "solver " + std::string(to_string(cfg.solver));

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + options.out_dir.string() + ": " + ec.message());

  try {
    const Trajectory traj = evolve(cfg.evolution_spec());
    for (const auto& w : traj.warnings) add_warning(report.warnings, w);
    add_warning(report.warnings, adiabaticity_warning(cfg.hamiltonian));
    add_warning(report.warnings, cp_warning(cfg.dissipation));
    add_warning(report.warnings, overdamped_warning(cfg.hamiltonian, cfg.dissipation));

    report.probability = prob_from_trajectory(traj, cfg.analyzer);
    if (cfg.noise_sigma > 0.0) report.probability = add_gaussian_noise(report.probability, cfg.noise_sigma, cfg.seed);

    const std::string ext = extension(options.format);
    const auto emit = [&](const std::string& name) {
      report.artifacts.push_back(options.out_dir / name);
      return report.artifacts.back();
    };

    if (cfg.wants(OutputKind::trajectory)) write_trajectory(emit("trajectory" + ext), traj, options.format);
    if (cfg.wants(OutputKind::probability))
      write_probability(emit("probability" + ext), report.probability, options.format);
    if (cfg.wants(OutputKind::spectrum)) {
      report.spectrum = spectrum(report.probability, cfg.window);
      write_spectrum(emit("spectrum" + ext), *report.spectrum, options.format);
    }
    if (cfg.wants(OutputKind::fit)) {
      const FitEstimates guess = cfg.fit_guess ? *cfg.fit_guess : default_guess(cfg);
      report.fit = fit_dissipative(report.probability, guess);
      try {
        report.envelope_alpha = damping_envelope(report.probability);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooFewExtrema) throw;
        add_warning(report.warnings, "damping envelope skipped: " + e.detail());
      }
      if (!report.fit->converged) add_warning(report.warnings, std::string("fit did not converge"));
      write_text(emit("fit.txt"), fit_report_text(*report.fit, report.envelope_alpha));
      write_text(emit("fit.json"), fit_report_json(*report.fit, report.envelope_alpha));
    }
    const auto report_path = options.out_dir / "report.json";
    report.artifacts.push_back(report_path);
    write_text(report_path, report_json(report));
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::Config) throw;
    throw e.with_context(context);
  }

  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<RunReport> sweep(const ScenarioConfig& cfg, std::string_view axis, const std::vector<double>& values,
                             const RunOptions& options) {
  {
    ScenarioConfig probe = cfg;
    set_numeric(probe, axis, get_numeric(cfg, axis));
  }
  const std::size_t n = values.size();
  std::vector<std::optional<RunReport>> results(n);
  std::vector<std::exception_ptr> errors(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        ScenarioConfig c = cfg;
        set_numeric(c, axis, values[i]);
        RunOptions o = options;
        o.out_dir = options.out_dir / axis_label(i, axis, values[i]);
        results[i] = run_scenario(c, o);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  if (n > 0) worker();
  for (auto& t : pool) t.join();

  std::vector<RunReport> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const Error& e) {
        char val[32];
        std::snprintf(val, sizeof val, "%.10g", values[i]);
        throw e.with_context("sweep " + std::string(axis) + "=" + val);
      }
    }
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace photodissim
