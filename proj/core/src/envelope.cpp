#include <cmath>
#include <sstream>
#include <vector>

#include "detail/series.hpp"
#include "photodissim/analysis.hpp"
#include "photodissim/error.hpp"

namespace photodissim {

namespace {

constexpr std::size_t kMinExtrema = 5;
constexpr double kExtremumFloor = 1e-12;

}  // namespace

double damping_envelope(const IntensitySeries& series) {
  const double dt = detail::uniform_step(series, 3);
  const std::size_t n = series.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::abs(series.values[i] - 0.5);

  std::vector<double> ts, logs;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = y[i - 1], b = y[i], c = y[i + 1];
    if (!(b > a && b >= c) || b < kExtremumFloor) continue;
    const double denom = a - 2.0 * b + c;
    const double delta = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
    ts.push_back(series.times[i] + delta * dt);
    logs.push_back(std::log(b - 0.25 * (a - c) * delta));
  }
  if (ts.size() < kMinExtrema) {
    std::ostringstream os;
    os << "found " << ts.size() << " extrema of |P - 1/2|, need " << kMinExtrema;
    throw Error(ErrorCode::TooFewExtrema, os.str());
  }

  double mt = 0.0, ml = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mt += ts[i];
    ml += logs[i];
  }
  mt /= static_cast<double>(ts.size());
  ml /= static_cast<double>(ts.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxy += (ts[i] - mt) * (logs[i] - ml);
    sxx += (ts[i] - mt) * (ts[i] - mt);
  }
  return -sxy / sxx;
}

}  // namespace photodissim
