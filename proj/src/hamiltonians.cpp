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

#include "spinsim/hamiltonians.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "spinsim/constants.hpp"

namespace spinsim {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr PauliAxis kAxes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

void check_pair(int i, int j, int n_spins) {
  if (i == j) throw std::invalid_argument("coupling: sites must be distinct");
  if (i < 0 || j < 0 || i >= n_spins || j >= n_spins)
    throw std::invalid_argument("coupling: site index out of range");
}

// sum_ab T(a,b) sigma_i^a sigma_j^b, T in rad/s.
cxmat bilinear_pauli(int i, int j, const Eigen::Matrix3d& t_rad_s, int n_spins) {
  const long dim = spin_dim(n_spins);
  cxmat h = cxmat::Zero(dim, dim);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (t_rad_s(a, b) == 0.0) continue;
      h += t_rad_s(a, b) * two_site(kAxes[a], i, kAxes[b], j, n_spins);
    }
  return h;
}

}  // namespace

cxmat zeeman(double gamma, double b0_tesla, double delta_rad_s) {
  return 0.5 * (gamma * b0_tesla + delta_rad_s) * pauli(PauliAxis::Z);
}

cxmat j_coupling(int i, int j, double j_hz, JCouplingForm form, int n_spins) {
  check_pair(i, j, n_spins);
  if (form == JCouplingForm::WeakZZ)
    return two_pi * j_hz * two_site(PauliAxis::Z, i, PauliAxis::Z, j, n_spins);
  return j_coupling_tensor(i, j, Eigen::Matrix3d::Identity() * j_hz, n_spins);
}

cxmat j_coupling_tensor(int i, int j, const Eigen::Matrix3d& j_tensor_hz,
                        int n_spins) {
  check_pair(i, j, n_spins);
  return bilinear_pauli(i, j, two_pi * j_tensor_hz, n_spins);
}

cxmat dipolar(int i, int j, double gamma_i, double gamma_j,
              const DipolarGeometry& geom, int n_spins) {
  check_pair(i, j, n_spins);
  geom.validate();
  const double prefactor = -(constants::mu0 / (4.0 * std::numbers::pi)) *
                           constants::hbar * gamma_i * gamma_j /
                           std::pow(geom.r_m, 3);
  // 3 (s_i.e)(s_j.e) - s_i.s_j  ==  sum_ab (3 e_a e_b - delta_ab) s_i^a s_j^b
  const Eigen::Matrix3d t =
      prefactor * (3.0 * geom.e * geom.e.transpose() - Eigen::Matrix3d::Identity());
  return bilinear_pauli(i, j, t, n_spins);
}

cxmat hyperfine(const HyperfineParams& params, int electron_site,
                int nuclear_site, int n_spins) {
  check_pair(electron_site, nuclear_site, n_spins);
  params.validate();
  Eigen::Matrix3d tensor;
  if (params.a_tensor) {
    tensor = *params.a_tensor;
  } else {
    // Secular frame: only the zz and zx components survive.
    tensor = Eigen::Matrix3d::Zero();
    tensor(2, 2) = params.a_zz;
    tensor(2, 0) = params.b_perp;
  }
  return bilinear_pauli(electron_site, nuclear_site, tensor, n_spins);
}

Eigen::Vector3d effective_field(double b0_tesla, const HyperfineParams& params,
                                double gamma_n, bool electron_up) {
  if (gamma_n == 0.0)
    throw std::invalid_argument("effective_field: gamma_N must be nonzero");
  const double sign = electron_up ? 1.0 : -1.0;
  Eigen::Vector3d field(0, 0, b0_tesla);
  field.z() += sign * params.a_zz / (2.0 * gamma_n);
  field.x() += sign * params.b_perp / (2.0 * gamma_n);
  return field;
}

cxmat internal_hamiltonian(const SpinSystem& system, JCouplingForm form,
                           std::vector<std::string>* diagnostics) {
  system.validate();
  const int n = system.n_spins();
  const long dim = system.dim();
  cxmat h = cxmat::Zero(dim, dim);
  for (int s = 0; s < n; ++s)
    h += 0.5 * two_pi * system.spins[s].offset_hz * embed(pauli(PauliAxis::Z), s, n);

  for (const Coupling& c : system.couplings) {
    switch (c.kind) {
      case CouplingKind::J: {
        if (form == JCouplingForm::WeakZZ) {
          const double j = c.j_tensor_hz ? (*c.j_tensor_hz)(2, 2) : c.j_hz;
          const double shift_gap =
              std::abs(system.spins[c.i].offset_hz - system.spins[c.j].offset_hz);
          if (std::abs(j) > 0.0 && shift_gap < 10.0 * std::abs(j)) {
            const std::string msg =
                "weak-ZZ coupling between '" + system.spins[c.i].label + "' and '" +
                system.spins[c.j].label +
                "': chemical-shift difference does not dominate J (|dv| = " +
                std::to_string(shift_gap) + " Hz, J = " + std::to_string(j) + " Hz)";
            if (diagnostics)
              diagnostics->push_back(msg);
            else
              std::cerr << "[spinsim] warning: " << msg << "\n";
          }
          h += j_coupling(c.i, c.j, j, JCouplingForm::WeakZZ, n);
        } else if (c.j_tensor_hz) {
          h += j_coupling_tensor(c.i, c.j, *c.j_tensor_hz, n);
        } else {
          h += j_coupling(c.i, c.j, c.j_hz, JCouplingForm::FullHeisenberg, n);
        }
        break;
      }
      case CouplingKind::Dipolar:
        h += dipolar(c.i, c.j, system.spins[c.i].gyromagnetic_ratio,
                     system.spins[c.j].gyromagnetic_ratio, c.geometry, n);
        break;
      case CouplingKind::Hyperfine:
        h += hyperfine(c.hyperfine, c.i, c.j, n);
        break;
    }
  }
  return h;
}

MalonicAcidFixture malonic_acid_fixture() {
  MalonicAcidFixture fx;
  fx.system.spins = {{"C1", constants::gamma_13c, 5693.0},
                     {"C2", constants::gamma_13c, 1748.0},
                     {"Cm", constants::gamma_13c, -3358.0}};
  Coupling c12, c1m, c2m;
  c12.i = 0; c12.j = 1; c12.kind = CouplingKind::J; c12.j_hz = 237.0;
  c1m.i = 0; c1m.j = 2; c1m.kind = CouplingKind::J; c1m.j_hz = 828.0;
  c2m.i = 1; c2m.j = 2; c2m.kind = CouplingKind::J; c2m.j_hz = 1020.0;
  fx.system.couplings = {c12, c1m, c2m};
  fx.t2_star_s = {2.4e-3, 2.6e-3, 3.1e-3};
  fx.t1_s = {162.0, 326.0, 314.0};
  // The solid-state couplings are strong enough that the weak-ZZ validity
  // diagnostic fires for the C2-Cm pair; collect rather than print.
  std::vector<std::string> diag;
  fx.hamiltonian = internal_hamiltonian(fx.system, JCouplingForm::WeakZZ, &diag);
  return fx;
}

}  // namespace spinsim
