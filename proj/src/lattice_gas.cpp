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

#include "spinsim/lattice_gas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinsim {

double LatticeGasState::kappa() const { return std::sin(2.0 * collision_angle); }

void LatticeGasState::validate() const {
  if (n_nodes < 2) throw std::invalid_argument("LatticeGasState: need at least two nodes");
  if (dx <= 0.0 || dt <= 0.0)
    throw std::invalid_argument("LatticeGasState: dx and dt must be positive");
  if (kappa() < 0.0 || kappa() > 1.0)
    throw std::invalid_argument("LatticeGasState: collision angle must give kappa in [0,1]");
  if (static_cast<int>(f1.size()) != n_nodes || static_cast<int>(f2.size()) != n_nodes)
    throw std::invalid_argument("LatticeGasState: occupancy arrays must match n_nodes");
  for (int i = 0; i < n_nodes; ++i)
    if (f1[i] < 0.0 || f1[i] > 1.0 || f2[i] < 0.0 || f2[i] > 1.0)
      throw std::invalid_argument("LatticeGasState: occupancies must lie in [0,1]");
}

LatticeGasState LatticeGasState::from_velocity_profile(
    int n_nodes, double dx, double dt, double collision_angle,
    const std::vector<double>& u0) {
  LatticeGasState st;
  st.n_nodes = n_nodes;
  st.dx = dx;
  st.dt = dt;
  st.collision_angle = collision_angle;
  if (static_cast<int>(u0.size()) != n_nodes)
    throw std::invalid_argument("from_velocity_profile: u0 size mismatch");
  const double a = st.advection_scale();
  if (a <= 0.0)
    throw std::invalid_argument("from_velocity_profile: collision angle gives zero advection");
  st.f1.resize(n_nodes);
  st.f2.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    const double f = 0.5 * (1.0 + u0[i] / a);
    st.f1[i] = f;
    st.f2[i] = f;
  }
  st.validate();
  return st;
}

std::vector<double> LatticeGasState::velocity() const {
  std::vector<double> u(n_nodes);
  const double a = advection_scale();
  for (int i = 0; i < n_nodes; ++i) u[i] = a * (f1[i] + f2[i] - 1.0);
  return u;
}

double LatticeGasState::total_occupancy() const {
  double sum = 0.0;
  for (int i = 0; i < n_nodes; ++i) sum += f1[i] + f2[i];
  return sum;
}

cxmat lattice_collision_operator(double alpha) {
  cxmat u = cxmat::Identity(4, 4);
  u(1, 1) = std::cos(alpha);
  u(1, 2) = std::sin(alpha);
  u(2, 1) = -std::sin(alpha);
  u(2, 2) = std::cos(alpha);
  return u;
}

LatticeGasRun burgers_lattice_gas(const LatticeGasState& init, int steps) {
  init.validate();
  if (steps < 0) throw std::invalid_argument("burgers_lattice_gas: steps must be >= 0");
  LatticeGasRun run;
  LatticeGasState state = init;
  const cxmat u_coll = lattice_collision_operator(init.collision_angle);
  const double mass0 = init.total_occupancy();
  run.u_history.push_back(state.velocity());

  std::vector<double> out1(state.n_nodes), out2(state.n_nodes);
  for (int step = 0; step < steps; ++step) {
    for (int node = 0; node < state.n_nodes; ++node) {
      // Encode two copies of the mean occupancy, collide, measure n1/n2.
      double f = 0.5 * (state.f1[node] + state.f2[node]);
      if (f < 0.0 || f > 1.0) {
        if (f < -1e-9 || f > 1.0 + 1e-9)
          throw std::runtime_error("burgers_lattice_gas: occupancy left [0,1]; unstable parameters");
        run.diagnostics.push_back("clamped occupancy " + std::to_string(f) +
                                  " at node " + std::to_string(node) + ", step " +
                                  std::to_string(step));
        f = std::clamp(f, 0.0, 1.0);
      }
      const double a = std::sqrt(1.0 - f);
      const double b = std::sqrt(f);
      cxvec psi(4);
      psi << a * a, a * b, b * a, b * b;
      const cxvec collided = u_coll * psi;
      out1[node] = std::norm(collided(2)) + std::norm(collided(3));
      out2[node] = std::norm(collided(1)) + std::norm(collided(3));
    }
    // Stream: f1 to the right neighbour, f2 to the left (classical step).
    for (int node = 0; node < state.n_nodes; ++node) {
      state.f1[(node + 1) % state.n_nodes] = out1[node];
      state.f2[(node + state.n_nodes - 1) % state.n_nodes] = out2[node];
    }
    run.u_history.push_back(state.velocity());
    run.occupancy_drift.push_back(std::abs(state.total_occupancy() - mass0));
  }
  run.final_state = std::move(state);
  return run;
}

}  // namespace spinsim
