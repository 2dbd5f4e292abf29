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

#ifndef SPINSIM_DECOUPLING_HPP
#define SPINSIM_DECOUPLING_HPP

#include <functional>
#include <string>
#include <vector>

#include "spinsim/dd_sequence.hpp"
#include "spinsim/dynamics.hpp"

namespace spinsim {

// All generators emit instantaneous pi pulses with delays summing exactly to
// total_time.

// Pi pulses about Y at fractions (2j-1)/2n, j = 1..n.
DDSequence cpmg(int n_pulses, double total_time);

// Equally spaced X,Y,X,Y pi pulses at fractions 1/8, 3/8, 5/8, 7/8.
DDSequence xy4(double total_time);

// n_repeats periodic repetitions of the XY-4 base cycle
// (tau X tau Y tau X tau Y); total time 4*n_repeats*base_delay.
DDSequence pdd(double base_delay, int n_repeats);

// Concatenated DD: p_{n+1} = p_n X p_n Z p_n X p_n Z with p_0 a bare delay
// tau0. Pulse count (4^n - 1)*4/3; free intervals 4^n.
DDSequence cdd(int level, double tau0);

// Uhrig DD: pi pulses about Y at fractions sin^2(pi j / (2n+2)), j = 1..n.
DDSequence udd(int n_pulses, double total_time);

// Concatenation of UDD into binary CDD-style scaffolding: the level-0 block
// is an inner UDD_n of Z pulses, and each level doubles the block around a
// pair of X pulses (B_m = B_{m-1} X B_{m-1} X). Pulse count grows as 2^n.
DDSequence cudd(int n, double total_time = 1.0);

// Quadratic DD: outer UDD_n of X pulses whose n+1 intervals each carry an
// inner UDD_n of Z pulses; (n+1)^2 pulse intervals. `z_outer` swaps the two
// axes.
DDSequence qdd(int n, double total_time, bool z_outer = false);

// Knill composite: five pi pulses with phases
// {pi/6+phi, phi, pi/2+phi, phi, pi/6+phi} about equatorial axes, equally
// spaced delays (KDD unit cell).
DDSequence kdd(double phi, double total_time = 1.0);

// ---------------------------------------------------------------------------
// Filter (switching function) analysis
// ---------------------------------------------------------------------------

struct FilterSpec {
  std::vector<double> pulse_fractions;  // strictly increasing, in (0,1)
  void validate() const;
};

// Extract the dephasing switching function of a sequence: fractions of the
// equatorial pi pulses (z-axis pulses do not toggle the sign).
FilterSpec filter_spec(const DDSequence& seq);

// Moments c_m = int_0^1 s(u) u^m du of the +/-1 toggling function,
// m = 0..max_moment-1 (closed-form power sums).
std::vector<double> switching_moments(const FilterSpec& spec, int max_moment);

// Largest n such that the moments m = 0..n-1 all vanish (|c| <= 1e-10);
// decoherence is suppressed to order t^{n+1}.
int filter_order(const FilterSpec& spec, int max_order = 16);

// ---------------------------------------------------------------------------
// Monte Carlo benchmarking
// ---------------------------------------------------------------------------

struct SequenceFamily {
  std::string name;
  std::function<DDSequence(double)> make;  // duration -> sequence
};

struct BenchmarkRow {
  std::string sequence;
  double t = 0.0;
  double w = 0.0;
  double stderr_w = 0.0;
};

// Coherence at the end of each (family, duration) pair via
// dephasing_trajectories; rows in (family, duration) order, deterministic
// under the noise seed.
std::vector<BenchmarkRow> benchmark_sequences(
    const std::vector<SequenceFamily>& families, const NoiseModel& noise,
    const std::vector<double>& durations, int n_traj);

}  // namespace spinsim

#endif  // SPINSIM_DECOUPLING_HPP
