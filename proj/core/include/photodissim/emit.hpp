#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "photodissim/analysis.hpp"
#include "photodissim/solvers.hpp"

namespace photodissim {

enum class OutputFormat { csv, json };

/// %.17g
std::string format_double(double v);

// CSV headers: "t,p_theta"; "t,rho1_re,rho1_im,rho2_re,rho2_im,rho3_re,rho3_im"; "omega,magnitude".
// The JSON variants hold the same columns as arrays keyed by header name.
void write_probability(const std::filesystem::path& path, const IntensitySeries& series, OutputFormat fmt);
void write_trajectory(const std::filesystem::path& path, const Trajectory& traj, OutputFormat fmt);
void write_spectrum(const std::filesystem::path& path, const SpectrumReport& report, OutputFormat fmt);

/// Flat key=value lines for a fit (plus envelope estimate when available).
std::string fit_report_text(const FitResult& fit, const std::optional<double>& envelope_alpha);
std::string fit_report_json(const FitResult& fit, const std::optional<double>& envelope_alpha);

/// Writes `contents` to `path`, throwing Error(Io) on failure.
void write_text(const std::filesystem::path& path, const std::string& contents);

}  // namespace photodissim
