#include "photodissim/emit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "photodissim/error.hpp"

namespace photodissim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "write to " + path.string() + " failed");
}

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

void write_probability(const std::filesystem::path& path, const IntensitySeries& series, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    write_text(path, dump({{"t", series.times}, {"p_theta", series.values}}));
    return;
  }
  std::ostringstream os;
  os << "t,p_theta\n";
  for (std::size_t i = 0; i < series.size(); ++i)
    os << format_double(series.times[i]) << ',' << format_double(series.values[i]) << '\n';
  write_text(path, os.str());
}

void write_trajectory(const std::filesystem::path& path, const Trajectory& traj, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    nlohmann::json j;
    std::vector<double> cols[6];
    for (const auto& s : traj.states) {
      cols[0].push_back(s.rho1().real());
      cols[1].push_back(s.rho1().imag());
      cols[2].push_back(s.rho2().real());
      cols[3].push_back(s.rho2().imag());
      cols[4].push_back(s.rho3().real());
      cols[5].push_back(s.rho3().imag());
    }
    j["t"] = traj.times;
    const char* names[] = {"rho1_re", "rho1_im", "rho2_re", "rho2_im", "rho3_re", "rho3_im"};
    for (int c = 0; c < 6; ++c) j[names[c]] = cols[c];
    write_text(path, dump(j));
    return;
  }
  std::ostringstream os;
  os << "t,rho1_re,rho1_im,rho2_re,rho2_im,rho3_re,rho3_im\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& s = traj.states[i];
    os << format_double(traj.times[i]) << ',' << format_double(s.rho1().real()) << ','
       << format_double(s.rho1().imag()) << ',' << format_double(s.rho2().real()) << ','
       << format_double(s.rho2().imag()) << ',' << format_double(s.rho3().real()) << ','
       << format_double(s.rho3().imag()) << '\n';
  }
  write_text(path, os.str());
}

void write_spectrum(const std::filesystem::path& path, const SpectrumReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    nlohmann::json peaks = nlohmann::json::array();
    for (const auto& p : report.peaks) peaks.push_back({{"omega", p.frequency}, {"magnitude", p.magnitude}});
    write_text(path, dump({{"omega", report.frequencies},
                           {"magnitude", report.magnitudes},
                           {"bin_width", report.bin_width},
                           {"peaks", peaks}}));
    return;
  }
  std::ostringstream os;
  os << "omega,magnitude\n";
  for (std::size_t i = 0; i < report.frequencies.size(); ++i)
    os << format_double(report.frequencies[i]) << ',' << format_double(report.magnitudes[i]) << '\n';
  write_text(path, os.str());
}

std::string fit_report_text(const FitResult& fit, const std::optional<double>& envelope_alpha) {
  const FitEstimates& e = fit.estimates;
  std::ostringstream os;
  os << "omega=" << format_double(e.omega) << '\n'
     << "alpha=" << format_double(e.alpha) << '\n'
     << "lambda=" << format_double(e.lambda) << '\n'
     << "theta0=" << format_double(e.theta0) << '\n'
     << "amplitude=" << format_double(e.amplitude) << '\n'
     << "residual_rms=" << format_double(fit.residual_rms) << '\n'
     << "converged=" << (fit.converged ? "true" : "false") << '\n'
     << "iterations=" << fit.iterations << '\n'
     << "total_iterations=" << fit.total_iterations << '\n'
     << "noise_estimate=" << format_double(fit.noise_estimate) << '\n'
     << "model_mismatch=" << (fit.model_mismatch ? "true" : "false") << '\n'
     << "amplitude_consistency=" << format_double(fit.amplitude_consistency) << '\n';
  if (envelope_alpha) os << "envelope_alpha=" << format_double(*envelope_alpha) << '\n';
  return os.str();
}

std::string fit_report_json(const FitResult& fit, const std::optional<double>& envelope_alpha) {
  const FitEstimates& e = fit.estimates;
  nlohmann::json j = {
      {"estimates",
       {{"omega", e.omega}, {"alpha", e.alpha}, {"lambda", e.lambda}, {"theta0", e.theta0}, {"amplitude", e.amplitude}}},
      {"residual_rms", fit.residual_rms},
      {"converged", fit.converged},
      {"iterations", fit.iterations},
      {"total_iterations", fit.total_iterations},
      {"noise_estimate", fit.noise_estimate},
      {"model_mismatch", fit.model_mismatch},
      {"amplitude_consistency", fit.amplitude_consistency},
  };
  if (envelope_alpha) j["envelope_alpha"] = *envelope_alpha;
  return dump(j);
}

}  // namespace photodissim
