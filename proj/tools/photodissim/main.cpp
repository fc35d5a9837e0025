// photodissim: run polarization decoherence scenarios from a YAML config.
//
//   photodissim validate    --config scenario.yaml
//   photodissim evolve      --config scenario.yaml --out out/
//   photodissim probability --config scenario.yaml --out out/ --format json
//   photodissim spectrum    --config scenario.yaml --out out/
//   photodissim fit         --config scenario.yaml --out out/ --seed 7
//   photodissim sweep       --config scenario.yaml --out out/ --axis dissipation.alpha --values 0,0.05,0.1

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "photodissim/config.hpp"
#include "photodissim/error.hpp"
#include "photodissim/scenario.hpp"

namespace {

using namespace photodissim;

struct GlobalFlags {
  std::string config;
  std::string out = "out";
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  bool allow_noncp = false;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("photodissim");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("PHOTODISSIM_LOG");
  const std::string level = env ? env : "info";
  if (level == "quiet") spdlog::set_level(spdlog::level::off);
  else if (level == "debug") spdlog::set_level(spdlog::level::debug);
  else spdlog::set_level(spdlog::level::info);
}

ScenarioConfig load(const GlobalFlags& g, bool allow_noncp) {
  ScenarioConfig cfg = load_config(g.config, ParseOptions{allow_noncp});
  if (g.seed) cfg.seed = *g.seed;
  return cfg;
}

RunOptions run_options(const GlobalFlags& g) {
  RunOptions o;
  o.out_dir = g.out;
  o.format = g.format == "json" ? OutputFormat::json : OutputFormat::csv;
  return o;
}

void log_report(const RunReport& r) {
  for (const auto& w : r.warnings) spdlog::warn("{}", w);
  for (const auto& p : r.artifacts) std::cout << p.string() << '\n';
  spdlog::debug("wall time {:.3f} s", r.wall_time_seconds);
  if (r.fit) {
    const FitEstimates& e = r.fit->estimates;
    spdlog::info("fit: omega={:.10g} alpha={:.10g} lambda={:.10g} converged={} rms={:.3g}", e.omega, e.alpha,
                 e.lambda, r.fit->converged, r.fit->residual_rms);
  }
}

int cmd_validate(const GlobalFlags& g) {
  const ScenarioConfig cfg = load(g, true);
  const ValidationReport report = validate_cp(cfg.dissipation);
  std::cout << report.summary();
  if (!report.all_passed() && !g.allow_noncp) {
    std::ostringstream os;
    os << "dissipation is not completely positive:";
    for (const auto& v : report.violated()) os << " [" << v << "]";
    throw Error(ErrorCode::NonCPDissipation, os.str());
  }
  std::cout << "config ok\n";
  return 0;
}

int cmd_run(const GlobalFlags& g, std::optional<OutputKind> only) {
  ScenarioConfig cfg = load(g, g.allow_noncp);
  if (only) cfg.outputs = {*only};
  log_report(run_scenario(cfg, run_options(g)));
  return 0;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::BadValue, "--values: '" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

int cmd_sweep(const GlobalFlags& g, const std::string& axis, const std::string& values) {
  const ScenarioConfig cfg = load(g, g.allow_noncp);
  const auto reports = sweep(cfg, axis, parse_values(values), run_options(g));
  for (const auto& r : reports) log_report(r);
  spdlog::info("{} runs", reports.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Photon polarization decoherence simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config, "Scenario YAML file")->required()->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "Output directory (created if absent)");
  app.add_option("--format", g.format, "Data file format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "Override the noise seed");
  app.add_flag("--allow-noncp", g.allow_noncp, "Accept dissipation that is not completely positive");

  auto* validate = app.add_subcommand("validate", "Check the config and print the positivity report");
  auto* evolve = app.add_subcommand("evolve", "Write the density-matrix trajectory");
  auto* probability = app.add_subcommand("probability", "Write the analyzer probability curve");
  auto* spectrum = app.add_subcommand("spectrum", "Write the spectrum of the probability curve");
  auto* fit = app.add_subcommand("fit", "Fit the damped model to the probability curve");
  auto* sweep_cmd = app.add_subcommand("sweep", "Repeat the scenario over values of one numeric key");
  std::string axis, values;
  sweep_cmd->add_option("--axis", axis, "Numeric key, e.g. dissipation.alpha")->required();
  sweep_cmd->add_option("--values", values, "Comma-separated values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(g);
    if (*evolve) return cmd_run(g, OutputKind::trajectory);
    if (*probability) return cmd_run(g, OutputKind::probability);
    if (*spectrum) return cmd_run(g, OutputKind::spectrum);
    if (*fit) return cmd_run(g, OutputKind::fit);
    if (*sweep_cmd) return cmd_sweep(g, axis, values);
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return exit_code(e.category());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 4;
  }
  return 0;
}
