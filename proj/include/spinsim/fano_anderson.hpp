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

#ifndef SPINSIM_FANO_ANDERSON_HPP
#define SPINSIM_FANO_ANDERSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinsim/linalg.hpp"

namespace spinsim {

// Single conduction mode coupled to an impurity (all energies rad/s):
//   H = eps_k c^dag c + eps b^dag b + V (c^dag b + b^dag c).
struct FanoAndersonParams {
  double eps_k = 0.0;
  double eps = 0.0;
  double v = 0.0;
};

// Jordan-Wigner qubit Hamiltonian, mode qubit first and impurity second:
// number operators map to (I-Z)/2, the hopping term to (XX+YY)/2.
// Only n_modes == 1 is supported.
cxmat fano_anderson_hamiltonian(const FanoAndersonParams& p, int n_modes = 1);

// Energies of the single-excitation block, ((eps_k+eps) +/-
// sqrt((eps_k-eps)^2+4V^2))/2.
std::pair<double, double> fano_anderson_single_excitation_energies(
    const FanoAndersonParams& p);

struct CorrelationSeries {
  std::vector<double> times_s;
  std::vector<cx> g_circuit;  // ancilla interferometry readout
  std::vector<cx> g_direct;   // matrix-element evaluation
};

// Impurity correlation G(t) = <10| e^{iHt} sx_b e^{-iHt} sx_b |10> evaluated
// two ways: (a) a three-qubit ancilla circuit (site, impurity, ancilla) with
// controlled sx_b gates, reading Re/Im G from the ancilla <X>/<Y>; (b) the
// direct matrix element.
CorrelationSeries fano_anderson_g(const FanoAndersonParams& p,
                                  const std::vector<double>& times_s);

struct SpectrumResult {
  std::vector<double> peak_frequencies_rad_s;
  double bin_width_rad_s = 0.0;
  std::optional<std::string> aliasing_warning;
};

// Peak frequencies of the DFT of G(t) sampled at n_samples points up to
// t_max. Warns when the single-excitation energies exceed Nyquist.
SpectrumResult fano_anderson_spectrum(const FanoAndersonParams& p, double t_max,
                                      int n_samples);

}  // namespace spinsim

#endif  // SPINSIM_FANO_ANDERSON_HPP
