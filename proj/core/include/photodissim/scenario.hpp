#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photodissim/analysis.hpp"
#include "photodissim/config.hpp"
#include "photodissim/emit.hpp"

namespace photodissim {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::csv;
  /// Worker threads for sweeps; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct RunReport {
  ScenarioConfig config;
  std::vector<std::string> warnings;
  /// Every file written, in write order (report.json last).
  std::vector<std::filesystem::path> artifacts;
  /// Not written to report.json, which stays byte-identical across runs.
  double wall_time_seconds = 0.0;

  IntensitySeries probability;
  std::optional<SpectrumReport> spectrum;
  std::optional<FitResult> fit;
  std::optional<double> envelope_alpha;
};

/// Evolves, computes the requested outputs and writes them under options.out_dir
/// (created if absent). Errors keep their code and gain the solver name as context.
RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& options = {});

/// One run per value of the numeric key `axis`, each in its own subdirectory
/// "NNN_<axis>=<value>". Runs may execute concurrently; results follow input order.
std::vector<RunReport> sweep(const ScenarioConfig& cfg, std::string_view axis, const std::vector<double>& values,
                             const RunOptions& options = {});

/// The JSON document written as report.json.
std::string report_json(const RunReport& report);

}  // namespace photodissim
