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

#ifndef SPINSIM_HAMILTONIANS_HPP
#define SPINSIM_HAMILTONIANS_HPP

#include <string>
#include <vector>

#include "spinsim/spin_system.hpp"

namespace spinsim {

// All Hamiltonians are returned in angular-frequency units (rad/s, hbar = 1).
// Couplings are accepted in Hz at the API surface and converted internally;
// the explicit 2*pi of the J term lives here, not at call sites.

// Single-spin Zeeman + chemical-shift term (1/2)(gamma*B0 + delta) Z.
// delta in rad/s.
cxmat zeeman(double gamma, double b0_tesla, double delta_rad_s);

enum class JCouplingForm { FullHeisenberg, WeakZZ };

// Scalar J-coupling 2*pi*J sigma_i . sigma_j (full) or 2*pi*J Zi Zj (weak),
// embedded in an n-spin register. Bare Pauli matrices throughout; physical J
// values quoted for spin-1/2 operators differ by a factor of 4.
cxmat j_coupling(int i, int j, double j_hz, JCouplingForm form, int n_spins);

// Full tensor form 2*pi sigma_i . J . sigma_j^T with J in Hz.
cxmat j_coupling_tensor(int i, int j, const Eigen::Matrix3d& j_tensor_hz,
                        int n_spins);

// Direct dipolar coupling
//   -(mu0/4pi) (hbar gamma_i gamma_j / r^3)
//       (3 (sigma_i.e)(sigma_j.e) - sigma_i.sigma_j)
// in rad/s (the hbar here is the SI value; the result is an angular
// frequency).
cxmat dipolar(int i, int j, double gamma_i, double gamma_j,
              const DipolarGeometry& geom, int n_spins);

// Electron-nuclear hyperfine term sigma_E . A . sigma_N^T with A in rad/s.
// Requires the full tensor; use hyperfine_secular for (A, B) input.
cxmat hyperfine(const HyperfineParams& params, int electron_site,
                int nuclear_site, int n_spins);

// Effective field (Tesla) seen by the nucleus when the electron points
// up/down along the external field:
//   (B0 +/- A/(2 gamma_N)) z^ +/- (B/(2 gamma_N)) x^.
Eigen::Vector3d effective_field(double b0_tesla, const HyperfineParams& params,
                                double gamma_n, bool electron_up);

// Internal Hamiltonian of a whole system: sum of per-spin offset terms
// (1/2)(2 pi offset_hz) Z plus all coupling records. J couplings honor
// `form`; the weak-ZZ reduction emits a warning diagnostic when the
// chemical-shift difference does not dominate J (|delta_i - delta_j| <
// 10 |J|). Warnings go to `diagnostics` when non-null, else to stderr.
cxmat internal_hamiltonian(const SpinSystem& system, JCouplingForm form,
                           std::vector<std::string>* diagnostics = nullptr);

struct MalonicAcidFixture {
  SpinSystem system;          // C1, C2, Cm with Table-1 shifts and couplings
  cxmat hamiltonian;          // 8x8, weak-ZZ form, rad/s
  std::vector<double> t1_s;   // per spin
  std::vector<double> t2_star_s;
};

// Built-in three-spin malonic-acid system: offsets {5693, 1748, -3358} Hz,
// couplings {C1C2: 237, C1Cm: 828, C2Cm: 1020} Hz, T2* {2.4, 2.6, 3.1} ms,
// T1 {162, 326, 314} s.
MalonicAcidFixture malonic_acid_fixture();

}  // namespace spinsim

#endif  // SPINSIM_HAMILTONIANS_HPP
