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

#ifndef SPINSIM_DYNAMICS_HPP
#define SPINSIM_DYNAMICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "spinsim/dd_sequence.hpp"
#include "spinsim/states.hpp"

namespace spinsim {

// ---------------------------------------------------------------------------
// Exact and Trotterized evolution
// ---------------------------------------------------------------------------

// U rho U^dag (or U|psi>) with U = exp(-i H t).
QuantumState evolve(const QuantumState& state, const cxmat& h, double t_seconds);

// First-order Trotter product [prod_k exp(-i H_k t/n)]^n, terms applied in
// the given, fixed order.
cxmat trotter_evolve(const std::vector<cxmat>& terms, double t_seconds,
                     int n_steps);

// 2^m-dimensional quantum Fourier transform, entries omega^{jk}/sqrt(2^m).
cxmat qft(int m_qubits);

// ---------------------------------------------------------------------------
// Grid registers and the split-operator method
// ---------------------------------------------------------------------------

// Wavefunction on n_dof position grids of 2^m points each, stored as a
// single amplitude vector of length 2^(m*n_dof) with degree of freedom 0 as
// the most significant index block. Grid points x_j = x_min + j*dx with
// dx = (x_max-x_min)/2^m (periodic; x_max excluded). Momentum eigenvalues use
// the signed FFT ordering p_k = (2*pi/L)*k for k < 2^(m-1) and
// (2*pi/L)*(k-2^m) otherwise.
struct GridRegister {
  int m = 0;      // qubits per degree of freedom
  int n_dof = 1;
  double x_min = 0.0;
  double x_max = 1.0;
  cxvec amplitudes;

  long points_per_dof() const { return 1L << m; }
  long dim() const;
  double dx() const { return (x_max - x_min) / static_cast<double>(points_per_dof()); }
  double position(long index) const { return x_min + index * dx(); }
  void validate() const;  // length and unit norm (1e-10)

  // Gaussian wavepacket exp(-(x-x0)^2/(4 sigma^2) + i p0 x), normalized.
  static GridRegister gaussian(int m, double x_min, double x_max, double x0,
                               double sigma, double p0);

  double norm() const { return amplitudes.norm(); }
  double mean_position(int dof = 0) const;
  double mean_momentum(int dof = 0) const;
};

// One first-order split-operator step of exp(-i(p^2/2m + V(x)) dt):
// apply exp(-i V dt) in the position basis, Fourier transform, apply
// exp(-i p^2 dt / 2 mass), transform back. Single degree of freedom.
GridRegister split_operator_step(const GridRegister& reg,
                                 const std::function<double(double)>& potential,
                                 double mass, double dt);

// Trotterized evolution of n_dof interacting degrees of freedom under
// sum_j p_j^2/2m_j + V(x_1..x_n): one joint potential phase and one QFT pair
// per degree of freedom per step.
GridRegister multi_dof_evolve(
    const GridRegister& reg,
    const std::function<double(const std::vector<double>&)>& potential,
    const std::vector<double>& masses, double dt, int steps);

// ---------------------------------------------------------------------------
// Relaxation and dephasing noise
// ---------------------------------------------------------------------------

struct RelaxationParams {
  std::vector<double> t1_s;       // per spin, > 0
  std::vector<double> t2_star_s;  // per spin, > 0, <= 2*T1
  void validate(int n_spins) const;
};

// Phenomenological per-spin channel: coherences decay as exp(-t/T2*),
// populations relax toward the maximally mixed state with rate 1/T1
// (high-temperature limit). Density-matrix input only.
QuantumState apply_relaxation(const QuantumState& state,
                              const RelaxationParams& params, double t_seconds);

// Classical Ornstein-Uhlenbeck frequency noise: stationary rms sigma,
// correlation time tau_c, deterministic under `seed`.
struct NoiseModel {
  double sigma_rad_s = 0.0;
  double tau_c_s = 1.0;
  std::uint64_t seed = 0;
  void validate() const;
};

struct CoherenceCurve {
  std::vector<double> times_s;
  std::vector<double> w;        // ensemble-averaged sigma_x coherence
  std::vector<double> stderr_w; // Monte Carlo standard error
};

// Single-spin sigma_x coherence under the sequence's instantaneous pi pulses
// and piecewise-constant OU dephasing noise, averaged over n_traj
// trajectories (accumulated in trajectory-index order). W is sampled at
// n_samples uniform times across the sequence. Equatorial pulses invert the
// accumulated phase; z-axis pulses leave it unchanged.
CoherenceCurve dephasing_trajectories(const DDSequence& seq,
                                      const NoiseModel& noise, int n_traj,
                                      int n_samples = 64);

}  // namespace spinsim

#endif  // SPINSIM_DYNAMICS_HPP
