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

#ifndef SPINSIM_REFERENCE_HPP
#define SPINSIM_REFERENCE_HPP

#include <functional>
#include <vector>

namespace spinsim {
namespace reference {

// Independent validation paths, deliberately implemented without the main
// matrix machinery. Run manifests record the deltas against these.

// Three-spin Ising ring by direct enumeration of the 8 spin configurations.
struct IsingPoint {
  double magnetization = 0.0;
  double entropy = 0.0;
};
IsingPoint ising_brute_force(double j, double h, double temperature);

// Viscous Burgers du/dt + u du/dz = nu d2u/dz2 on a periodic domain of
// length `length`, explicit central finite differences on `grid_points`
// cells, integrated to time t_final. u0 is sampled at z = k*length/grid_points.
std::vector<double> burgers_finite_difference(
    const std::function<double(double)>& u0, double length, double nu,
    double t_final, int grid_points);

// Switching-function moment int_0^1 s(u) u^m du by composite Gauss-Legendre
// quadrature per segment (independent of the closed-form power sums).
double switching_moment_quadrature(const std::vector<double>& pulse_fractions,
                                   int m);

}  // namespace reference
}  // namespace spinsim

#endif  // SPINSIM_REFERENCE_HPP
