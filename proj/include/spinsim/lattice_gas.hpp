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

#ifndef SPINSIM_LATTICE_GAS_HPP
#define SPINSIM_LATTICE_GAS_HPP

#include <string>
#include <vector>

#include "spinsim/linalg.hpp"

namespace spinsim {

// Type-II quantum lattice gas on a periodic ring. Each node carries two
// qubits re-encoded every step with the mean occupancy f = (f1+f2)/2 as
// (sqrt(1-f)|0> + sqrt(f)|1>)^(x2); a number-conserving partial-swap
// collision rotates the one-particle block by `alpha`, the qubits are
// measured, and f1/f2 stream to the right/left neighbour.
//
// The macroscopic field u = (kappa dx/dt)(f1 + f2 - 1) with
// kappa = sin(2 alpha) obeys Burgers' equation
//   du/dt + u du/dz = nu d2u/dz2,  nu = dx^2/(2 dt),
// up to lattice-truncation corrections.
struct LatticeGasState {
  int n_nodes = 16;
  double dx = 1.0 / 16.0;   // lattice spacing (domain length n_nodes*dx)
  double dt = 1.0;          // time per collide-stream step
  double collision_angle = 0.0;  // alpha; kappa = sin(2 alpha)
  std::vector<double> f1, f2;    // per-node occupancies in [0,1]

  double kappa() const;
  double viscosity() const { return dx * dx / (2.0 * dt); }
  double advection_scale() const { return kappa() * dx / dt; }
  void validate() const;

  // Node occupancies encoding the velocity profile u0(z) (z in [0, L)):
  // f1 = f2 = (1 + u0/advection_scale)/2.
  static LatticeGasState from_velocity_profile(
      int n_nodes, double dx, double dt, double collision_angle,
      const std::vector<double>& u0);

  // Burgers velocity field at each node.
  std::vector<double> velocity() const;
  double total_occupancy() const;
};

// 4x4 collision unitary: identity on |00>,|11>, rotation by alpha on the
// single-particle block.
cxmat lattice_collision_operator(double alpha);

struct LatticeGasRun {
  std::vector<std::vector<double>> u_history;  // [step][node], step 0 = initial
  std::vector<double> occupancy_drift;         // |sum f - initial| per step
  std::vector<std::string> diagnostics;        // clamp events etc.
  LatticeGasState final_state;
};

// Iterate encode / collide / measure / stream for `steps` steps. Occupancies
// leaving [0,1] by more than 1e-9 signal unstable parameters (throw);
// smaller floating-point excursions are clamped with a diagnostic.
LatticeGasRun burgers_lattice_gas(const LatticeGasState& init, int steps);

}  // namespace spinsim

#endif  // SPINSIM_LATTICE_GAS_HPP
