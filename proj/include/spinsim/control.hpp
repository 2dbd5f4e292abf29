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

#ifndef SPINSIM_CONTROL_HPP
#define SPINSIM_CONTROL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spinsim/hamiltonians.hpp"
#include "spinsim/spin_system.hpp"

namespace spinsim {

// One transmitter channel: piecewise-constant amplitude/phase applied to a
// set of spins in the frame rotating at the channel carrier. omega_rf is the
// carrier offset relative to the frame in which the system offsets are
// quoted (0 = on the offset reference).
struct ControlChannel {
  std::vector<int> targets;          // spin indices; empty = every spin
  double omega_rf_rad_s = 0.0;
  std::vector<double> omega_rad_s;   // amplitude omega_k(j), >= 0
  std::vector<double> phi_rad;       // phase phi_k(j)
};

// Piecewise-constant pulse program: N steps of duration dt.
struct PulseProgram {
  int n_steps = 0;
  double dt_s = 0.0;
  double omega_max_rad_s = 0.0;  // hardware amplitude bound
  std::vector<ControlChannel> channels;

  double total_time_s() const { return n_steps * dt_s; }
  void validate() const;

  std::string to_json() const;
  static PulseProgram from_json(const std::string& text);

  // Seeded initial guess: uniform-random phases, amplitudes uniform in
  // [0, amplitude_scale * omega_max].
  static PulseProgram random_start(int n_steps, double dt_s,
                                   const std::vector<std::vector<int>>& channel_targets,
                                   double omega_max_rad_s, double amplitude_scale,
                                   std::uint64_t seed);
};

// Robustness ensemble: each sample scales the control amplitudes and shifts
// every spin offset; weights sum to 1.
struct EnsembleSample {
  double rf_scale = 1.0;
  double offset_rad_s = 0.0;
  double weight = 1.0;
};

struct EnsembleSpec {
  std::vector<EnsembleSample> samples;
  void validate() const;
  static EnsembleSpec nominal();
};

struct GrapeConfig {
  double epsilon = 1e-3;            // initial gradient-ascent step
  int max_iters = 200;
  double delta_phi_threshold = 1e-12;  // stop when the objective gain is below
  double power_penalty = 0.0;          // lambda, objective -= lambda*dt*sum(omega^2)
  double target_infidelity = 0.0;      // stop early when 1-Phi_tot <= this
};

// Rotating-frame Hamiltonian of step j: internal terms plus
// sum_k (omega_k(j)/2)[cos phi_k(j) X + sin phi_k(j) Y] on the addressed
// spins (rotating-wave approximation; counter-rotating terms dropped).
cxmat control_hamiltonian(const PulseProgram& prog, int step,
                          const SpinSystem& system,
                          JCouplingForm form = JCouplingForm::WeakZZ);

// U_N ... U_1 with U_j = exp(-i dt H_j).
cxmat program_propagator(const PulseProgram& prog, const SpinSystem& system,
                         JCouplingForm form = JCouplingForm::WeakZZ);

// Phi_tot = sum_alpha weight_alpha |Tr(target^dag U_alpha)|^2 / d^2.
double ensemble_fidelity(const PulseProgram& prog, const cxmat& target,
                         const SpinSystem& system, const EnsembleSpec& ens,
                         JCouplingForm form = JCouplingForm::WeakZZ);

// Exact gradient of Phi_tot with respect to the Cartesian control amplitudes
// u_x = omega cos phi, u_y = omega sin phi, flattened as
// [channel][step][x,y]. Computed from the eigenbasis derivative of each step
// propagator.
Eigen::VectorXd gradient(const PulseProgram& prog, const cxmat& target,
                         const SpinSystem& system, const EnsembleSpec& ens,
                         JCouplingForm form = JCouplingForm::WeakZZ);

enum class GrapeStatus { Converged, TargetReached, MaxIterations, Stalled };

struct GrapeResult {
  PulseProgram program;
  std::vector<double> trace;    // objective after each accepted iteration
  double final_fidelity = 0.0;  // Phi_tot of the returned program
  GrapeStatus status = GrapeStatus::MaxIterations;
  int iterations = 0;
};

// Gradient ascent u += eps * dPhi/du with a backtracking/expanding line
// search (the trace is monotone nondecreasing by construction) and a
// projection onto |omega| <= omega_max after every candidate step. A step
// that cannot improve the objective stalls the run, reported via status.
GrapeResult grape_optimize(const PulseProgram& initial, const cxmat& target,
                           const SpinSystem& system, const EnsembleSpec& ens,
                           const GrapeConfig& cfg,
                           JCouplingForm form = JCouplingForm::WeakZZ);

}  // namespace spinsim

#endif  // SPINSIM_CONTROL_HPP
