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

#ifndef SPINSIM_ADIABATIC_HPP
#define SPINSIM_ADIABATIC_HPP

#include "spinsim/states.hpp"

namespace spinsim {

struct AdiabaticResult {
  QuantumState final_state;
  double ground_overlap = 0.0;  // population of H_P's ground space
};

// Piecewise-constant integration of H(t) = (1 - t/tau) H_A + (t/tau) H_P
// (midpoint rule) from the ground state of H_A; returns the final state and
// its overlap with the ground space of H_P. Throws when H_A's ground state
// is degenerate (ambiguous start).
AdiabaticResult adiabatic_evolve(const cxmat& h_initial, const cxmat& h_problem,
                                 double tau, int n_steps);

struct CoolingBound {
  double polarization = 0.0;
  bool near_ground_state = false;  // eps_b > 2^-m regime
};

// Heat-bath algorithmic-cooling limit for a single spin among m qubits with
// bath polarization eps_b: eps_b * 2^(m-2) in the low-polarization regime
// (eps_b <= 2^-m), else the near-ground-state flag with polarization 1.
CoolingBound cooling_bound(double eps_b, int m);

}  // namespace spinsim

#endif  // SPINSIM_ADIABATIC_HPP
