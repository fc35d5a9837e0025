#pragma once

#include <random>

#include <Eigen/Dense>

#include "photodissim/dissipation.hpp"
#include "photodissim/state.hpp"
#include "photodissim/types.hpp"

namespace testing_helpers {

/// Completely positive parameters: the real 3x3 matrix
/// [[R, b, c], [b, S, -beta], [c, -beta, T]] is drawn as M M^T, then
/// a = S + T, alpha = R + T, gamma = R + S.
inline photodissim::DissipationParams random_cp(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = n(rng);
  const Eigen::Matrix3d k = scale * (m * m.transpose()) / 3.0;
  const double R = k(0, 0), S = k(1, 1), T = k(2, 2);
  return {S + T, k(0, 1), k(0, 2), R + T, -k(1, 2), R + S};
}

/// Arbitrary real parameters, CP or not.
inline photodissim::DissipationParams random_params(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

inline photodissim::HamiltonianParams random_hamiltonian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> l(-0.5, 0.5);
  return {u(rng), u(rng), u(rng), l(rng)};
}

}  // namespace testing_helpers
