#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "detail/series.hpp"
#include "photodissim/analysis.hpp"
#include "photodissim/error.hpp"

namespace photodissim {

double detail::uniform_step(const IntensitySeries& series, std::size_t min_samples) {
  const std::size_t n = series.times.size();
  if (series.values.size() != n) throw Error(ErrorCode::InvalidSpec, "times and values differ in length");
  if (n < min_samples || n < 2) {
    std::ostringstream os;
    os << "need at least " << min_samples << " samples, got " << n;
    throw Error(ErrorCode::TooFewSamples, os.str());
  }
  const double dt = (series.times.back() - series.times.front()) / static_cast<double>(n - 1);
  if (!(dt > 0.0)) throw Error(ErrorCode::NonUniformGrid, "time grid is not increasing");
  for (std::size_t i = 1; i < n; ++i) {
    const double step = series.times[i] - series.times[i - 1];
    if (std::abs(step - dt) > 1e-9 * dt) {
      std::ostringstream os;
      os << "step " << step << " at index " << i << " differs from mean step " << dt;
      throw Error(ErrorCode::NonUniformGrid, os.str());
    }
  }
  return dt;
}

IntensitySeries add_gaussian_noise(const IntensitySeries& series, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw Error(ErrorCode::BadValue, "noise sigma must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  IntensitySeries out = series;
  for (double& v : out.values) v = std::clamp(v + (sigma > 0.0 ? noise(rng) : 0.0), 0.0, 1.0);
  out.meta["noise_sigma"] = sigma;
  return out;
}

}  // namespace photodissim
