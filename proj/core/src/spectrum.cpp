#include <algorithm>
#include <cmath>
#include <numeric>

#include "detail/series.hpp"
#include "photodissim/analysis.hpp"
#include "photodissim/error.hpp"

namespace photodissim {

namespace {

constexpr std::size_t kMinSamples = 64;
constexpr double kPeakFactor = 5.0;
// Peaks below this normalized magnitude are round-off, not signal.
constexpr double kPeakFloor = 1e-9;

double median(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

}  // namespace

SpectrumReport spectrum(const IntensitySeries& series, Window window) {
  const double dt = detail::uniform_step(series, kMinSamples);
  const std::size_t n = series.values.size();

  std::vector<double> w(n, 1.0);
  if (window == Window::hann)
    for (std::size_t i = 0; i < n; ++i) w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / static_cast<double>(n - 1)));
  const double wsum = std::accumulate(w.begin(), w.end(), 0.0);

  const double mean = std::accumulate(series.values.begin(), series.values.end(), 0.0) / static_cast<double>(n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (series.values[i] - mean) * w[i];

  std::vector<cplx> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) twiddle[j] = std::polar(1.0, -2.0 * kPi * static_cast<double>(j) / n);

  const std::size_t half = n / 2;
  SpectrumReport out;
  out.bin_width = 2.0 * kPi / (static_cast<double>(n) * dt);
  out.frequencies.resize(half + 1);
  out.magnitudes.resize(half + 1);
  for (std::size_t k = 0; k <= half; ++k) {
    cplx acc{};
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += x[i] * twiddle[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    out.frequencies[k] = out.bin_width * static_cast<double>(k);
    out.magnitudes[k] = 2.0 * std::abs(acc) / wsum;
  }

  const auto& m = out.magnitudes;
  const double threshold = std::max(kPeakFactor * median(m), kPeakFloor);
  for (std::size_t k = 1; k < half; ++k) {
    if (m[k] > threshold && m[k] > m[k - 1] && m[k] >= m[k + 1]) {
      const double a = m[k - 1], b = m[k], c = m[k + 1];
      const double denom = a - 2.0 * b + c;
      const double delta = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
      out.peaks.push_back({out.bin_width * (static_cast<double>(k) + delta), b - 0.25 * (a - c) * delta});
    }
  }
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const Peak& p, const Peak& q) { return p.magnitude > q.magnitude; });
  return out;
}

BerrySplit berry_split(const SpectrumReport& report) {
  if (report.peaks.size() < 2) throw Error(ErrorCode::InsufficientPeaks, "need two spectral peaks");
  const double lo = std::min(report.peaks[0].frequency, report.peaks[1].frequency);
  const double hi = std::max(report.peaks[0].frequency, report.peaks[1].frequency);
  return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

}  // namespace photodissim
