// Copyright 2026 The Spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinsim/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinsim {
namespace reference {

IsingPoint ising_brute_force(double j, double h, double temperature) {
  if (temperature <= 0.0)
    throw std::invalid_argument("ising_brute_force: temperature must be positive");
  // Spin values s = +/-1, config bits 0 -> s=+1 (matching Z|0> = +|0>).
  double energies[8];
  int mags[8];
  for (int c = 0; c < 8; ++c) {
    const int s1 = (c & 4) ? -1 : 1;
    const int s2 = (c & 2) ? -1 : 1;
    const int s3 = (c & 1) ? -1 : 1;
    energies[c] = j * (s1 * s2 + s2 * s3 + s1 * s3) + h * (s1 + s2 + s3);
    mags[c] = s1 + s2 + s3;
  }
  const double e_min = *std::min_element(energies, energies + 8);
  const double beta = 1.0 / temperature;
  double z = 0.0;
  for (int c = 0; c < 8; ++c) z += std::exp(-beta * (energies[c] - e_min));
  IsingPoint out;
  for (int c = 0; c < 8; ++c) {
    const double p = std::exp(-beta * (energies[c] - e_min)) / z;
    out.magnetization += p * mags[c];
    if (p > 1e-300) out.entropy -= p * std::log(p);
  }
  return out;
}

std::vector<double> burgers_finite_difference(
    const std::function<double(double)>& u0, double length, double nu,
    double t_final, int grid_points) {
  if (grid_points < 4 || length <= 0.0 || nu <= 0.0 || t_final < 0.0)
    throw std::invalid_argument("burgers_finite_difference: bad parameters");
  const double dz = length / grid_points;
  std::vector<double> u(grid_points), next(grid_points);
  double u_max = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    u[k] = u0(k * dz);
    u_max = std::max(u_max, std::abs(u[k]));
  }
  // Explicit step obeying both diffusive and advective stability limits.
  double dt = 0.25 * dz * dz / nu;
  if (u_max > 0.0) dt = std::min(dt, 0.25 * dz / u_max);
  const int n_steps = std::max(1, static_cast<int>(std::ceil(t_final / dt)));
  dt = t_final / n_steps;
  for (int step = 0; step < n_steps; ++step) {
    for (int k = 0; k < grid_points; ++k) {
      const int km = (k + grid_points - 1) % grid_points;
      const int kp = (k + 1) % grid_points;
      const double advect = u[k] * (u[kp] - u[km]) / (2.0 * dz);
      const double diffuse = nu * (u[kp] - 2.0 * u[k] + u[km]) / (dz * dz);
      next[k] = u[k] + dt * (diffuse - advect);
    }
    std::swap(u, next);
  }
  return u;
}

double switching_moment_quadrature(const std::vector<double>& pulse_fractions,
                                   int m) {
  // 8-point Gauss-Legendre nodes/weights on [-1, 1].
  static const double nodes[8] = {-0.9602898564975363, -0.7966664774136267,
                                  -0.5255324099163290, -0.1834346424956498,
                                  0.1834346424956498,  0.5255324099163290,
                                  0.7966664774136267,  0.9602898564975363};
  static const double weights[8] = {0.1012285362903763, 0.2223810344533745,
                                    0.3137066458778873, 0.3626837833783620,
                                    0.3626837833783620, 0.3137066458778873,
                                    0.2223810344533745, 0.1012285362903763};
  std::vector<double> bounds;
  bounds.push_back(0.0);
  bounds.insert(bounds.end(), pulse_fractions.begin(), pulse_fractions.end());
  bounds.push_back(1.0);
  double acc = 0.0;
  double sign = 1.0;
  for (std::size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
    const double a = bounds[seg];
    const double b = bounds[seg + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double integral = 0.0;
    for (int q = 0; q < 8; ++q)
      integral += weights[q] * std::pow(mid + half * nodes[q], m);
    acc += sign * half * integral;
    sign = -sign;
  }
  return acc;
}

}  // namespace reference
}  // namespace spinsim
