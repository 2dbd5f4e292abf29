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

#include "spinsim/fano_anderson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinsim/dynamics.hpp"
#include "spinsim/states.hpp"

namespace spinsim {

cxmat fano_anderson_hamiltonian(const FanoAndersonParams& p, int n_modes) {
  if (n_modes != 1)
    throw std::invalid_argument("fano_anderson_hamiltonian: only n_modes=1 supported");
  const int n = 2;  // qubit 0 = conduction mode, qubit 1 = impurity
  const cxmat id = cxmat::Identity(4, 4);
  const cxmat n_mode = 0.5 * (id - embed(pauli(PauliAxis::Z), 0, n));
  const cxmat n_imp = 0.5 * (id - embed(pauli(PauliAxis::Z), 1, n));
  const cxmat hop = 0.5 * (two_site(PauliAxis::X, 0, PauliAxis::X, 1, n) +
                           two_site(PauliAxis::Y, 0, PauliAxis::Y, 1, n));
  return p.eps_k * n_mode + p.eps * n_imp + p.v * hop;
}

std::pair<double, double> fano_anderson_single_excitation_energies(
    const FanoAndersonParams& p) {
  const double mean = 0.5 * (p.eps_k + p.eps);
  const double split = 0.5 * std::hypot(p.eps_k - p.eps, 2.0 * p.v);
  return {mean - split, mean + split};
}

namespace {

// |mode=1, impurity=0> on the two-qubit register (qubit 0 most significant).
cxvec initial_sea() {
  cxvec psi = cxvec::Zero(4);
  psi(2) = 1.0;
  return psi;
}

}  // namespace

CorrelationSeries fano_anderson_g(const FanoAndersonParams& p,
                                  const std::vector<double>& times_s) {
  CorrelationSeries out;
  out.times_s = times_s;
  out.g_circuit.reserve(times_s.size());
  out.g_direct.reserve(times_s.size());

  const cxmat h_sys = fano_anderson_hamiltonian(p);
  const cxmat sx_imp2 = embed(pauli(PauliAxis::X), 1, 2);  // sx on the impurity

  // Three-qubit circuit: site = 0, impurity = 1, ancilla = 2.
  const int nq = 3;
  const cxmat had = qft(1);  // Hadamard
  const cxmat h_anc = embed(had, 2, nq);
  const cxmat p0 = 0.5 * (cxmat::Identity(8, 8) + embed(pauli(PauliAxis::Z), 2, nq));
  const cxmat p1 = 0.5 * (cxmat::Identity(8, 8) - embed(pauli(PauliAxis::Z), 2, nq));
  const cxmat controlled_sx = p0 + p1 * embed(pauli(PauliAxis::X), 1, nq);
  const cxmat x_anc = embed(pauli(PauliAxis::X), 2, nq);
  const cxmat y_anc = embed(pauli(PauliAxis::Y), 2, nq);

  cxvec reg0 = cxvec::Zero(8);
  reg0(4) = 1.0;                   // |10>_sys (x) |0>_anc
  reg0 = h_anc * reg0;             // ancilla to |+>
  reg0 = controlled_sx * reg0;     // controlled excitation of the impurity

  const cxvec psi0 = initial_sea();
  for (double t : times_s) {
    // Circuit path.
    const cxmat u_sys = propagator(h_sys, t);
    cxvec reg = kron(u_sys, cxmat::Identity(2, 2)) * reg0;
    reg = controlled_sx * reg;
    const QuantumState st = QuantumState::pure(reg);
    out.g_circuit.push_back(cx(expectation(x_anc, st), expectation(y_anc, st)));

    // Direct matrix element <10| e^{iHt} sx e^{-iHt} sx |10>.
    const cxvec bra_side = u_sys * psi0;
    const cxvec ket_side = u_sys * (sx_imp2 * psi0);
    out.g_direct.push_back(bra_side.dot(sx_imp2 * ket_side));
  }
  return out;
}

SpectrumResult fano_anderson_spectrum(const FanoAndersonParams& p, double t_max,
                                      int n_samples) {
  if (t_max <= 0.0 || n_samples < 4)
    throw std::invalid_argument("fano_anderson_spectrum: need t_max > 0 and >= 4 samples");
  const double dt = t_max / n_samples;

  SpectrumResult result;
  result.bin_width_rad_s = 2.0 * std::numbers::pi / t_max;
  const auto [e_lo, e_hi] = fano_anderson_single_excitation_energies(p);
  const double nyquist = std::numbers::pi / dt;
  if (std::max(std::abs(e_lo), std::abs(e_hi)) > nyquist)
    result.aliasing_warning =
        "single-excitation energies exceed the Nyquist frequency " +
        std::to_string(nyquist) + " rad/s; peaks will alias";

  std::vector<double> times(n_samples);
  for (int i = 0; i < n_samples; ++i) times[i] = i * dt;
  const CorrelationSeries series = fano_anderson_g(p, times);

  // Direct DFT, amplitude at omega_k = 2 pi k / t_max (signed ordering):
  // G(t) ~ sum w exp(-i E t) peaks at omega = E under sum_t G(t) e^{+i w t}.
  std::vector<double> power(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    cx acc = 0.0;
    for (int i = 0; i < n_samples; ++i)
      acc += series.g_circuit[i] *
             std::exp(imag_unit * (2.0 * std::numbers::pi * k * i /
                                   static_cast<double>(n_samples)));
    power[k] = std::abs(acc);
  }
  const double threshold = 0.1 * *std::max_element(power.begin(), power.end());
  for (int k = 0; k < n_samples; ++k) {
    const int prev = (k + n_samples - 1) % n_samples;
    const int next = (k + 1) % n_samples;
    if (power[k] >= threshold && power[k] >= power[prev] && power[k] > power[next]) {
      const long signed_k = k < n_samples / 2 ? k : k - n_samples;
      result.peak_frequencies_rad_s.push_back(signed_k * result.bin_width_rad_s);
    }
  }
  std::sort(result.peak_frequencies_rad_s.begin(), result.peak_frequencies_rad_s.end());
  return result;
}

}  // namespace spinsim
