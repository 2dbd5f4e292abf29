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

#ifndef SPINSIM_ISING_HPP
#define SPINSIM_ISING_HPP

#include <vector>

#include "spinsim/states.hpp"

namespace spinsim {

// Three-spin antiferromagnetic Ising ring, reduced units (k_B = 1):
//   H = J (Z1 Z2 + Z2 Z3 + Z1 Z3) + h (Z1 + Z2 + Z3), J > 0.
struct IsingParams {
  double j = 1.0;
  double h = 0.0;
  double t = 1.0;  // temperature, > 0 for thermal states
  void validate() const;
};

// 8x8 Hamiltonian of the three-spin ring (diagonal).
cxmat ising_hamiltonian(double j, double h);

// Coherent thermal encoding |psi_beta> = sum_k sqrt(exp(-beta E_k)/Z)|phi_k>.
QuantumState ising_thermal_state(const IsingParams& p);

// Thermal ensemble rho_beta = sum_k exp(-beta E_k)/Z |phi_k><phi_k|.
QuantumState ising_thermal_ensemble(const IsingParams& p);

struct IsingScan {
  std::vector<double> h_grid;
  std::vector<double> t_grid;
  // Row-major [h][t].
  std::vector<std::vector<double>> magnetization;
  std::vector<std::vector<double>> entropy;
};

// Total magnetization <Z1+Z2+Z3> on |psi_beta> and entropy of the thermal
// ensemble's computational-basis distribution, over the (h, T) grid.
IsingScan ising_scan(double j, const std::vector<double>& h_grid,
                     const std::vector<double>& t_grid);

}  // namespace spinsim

#endif  // SPINSIM_ISING_HPP
