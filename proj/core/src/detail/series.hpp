#pragma once

#include "photodissim/observables.hpp"

namespace photodissim::detail {

/// Sample spacing of a uniform grid; throws NonUniformGrid (relative tolerance 1e-9)
/// or TooFewSamples when fewer than `min_samples` points are present.
double uniform_step(const IntensitySeries& series, std::size_t min_samples);

}  // namespace photodissim::detail
