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

#include "spinsim/ising.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace spinsim {

void IsingParams::validate() const {
  if (j <= 0.0) throw std::invalid_argument("IsingParams: J must be positive (antiferromagnetic)");
  if (t <= 0.0) throw std::invalid_argument("IsingParams: temperature must be positive");
}

cxmat ising_hamiltonian(double j, double h) {
  const int n = 3;
  cxmat ham = cxmat::Zero(8, 8);
  ham += j * (two_site(PauliAxis::Z, 0, PauliAxis::Z, 1, n) +
              two_site(PauliAxis::Z, 1, PauliAxis::Z, 2, n) +
              two_site(PauliAxis::Z, 0, PauliAxis::Z, 2, n));
  for (int s = 0; s < n; ++s) ham += h * embed(pauli(PauliAxis::Z), s, n);
  return ham;
}

namespace {

// log-sum-exp weights exp(-beta E_k)/Z over the Hamiltonian eigenbasis.
struct ThermalWeights {
  Eigen::VectorXd p;
  cxmat eigvecs;
};

ThermalWeights thermal_weights(const IsingParams& params) {
  params.validate();
  Eigen::SelfAdjointEigenSolver<cxmat> es(ising_hamiltonian(params.j, params.h));
  const Eigen::VectorXd& e = es.eigenvalues();
  const double beta = 1.0 / params.t;
  const double e_min = e.minCoeff();
  Eigen::VectorXd w(e.size());
  for (Eigen::Index k = 0; k < e.size(); ++k)
    w(k) = std::exp(-beta * (e(k) - e_min));
  w /= w.sum();
  return {w, es.eigenvectors()};
}

}  // namespace

QuantumState ising_thermal_state(const IsingParams& p) {
  const ThermalWeights tw = thermal_weights(p);
  cxvec psi = cxvec::Zero(8);
  for (Eigen::Index k = 0; k < 8; ++k)
    psi += std::sqrt(tw.p(k)) * tw.eigvecs.col(k);
  psi /= psi.norm();
  return QuantumState::pure(std::move(psi));
}

QuantumState ising_thermal_ensemble(const IsingParams& p) {
  const ThermalWeights tw = thermal_weights(p);
  cxmat rho = cxmat::Zero(8, 8);
  for (Eigen::Index k = 0; k < 8; ++k)
    rho += tw.p(k) * tw.eigvecs.col(k) * tw.eigvecs.col(k).adjoint();
  return QuantumState::density(std::move(rho));
}

IsingScan ising_scan(double j, const std::vector<double>& h_grid,
                     const std::vector<double>& t_grid) {
  if (h_grid.empty() || t_grid.empty())
    throw std::invalid_argument("ising_scan: grids must be nonempty");
  IsingScan scan;
  scan.h_grid = h_grid;
  scan.t_grid = t_grid;
  const int n = 3;
  cxmat m_total = cxmat::Zero(8, 8);
  for (int s = 0; s < n; ++s) m_total += embed(pauli(PauliAxis::Z), s, n);

  scan.magnetization.assign(h_grid.size(), std::vector<double>(t_grid.size(), 0.0));
  scan.entropy.assign(h_grid.size(), std::vector<double>(t_grid.size(), 0.0));
  for (std::size_t hi = 0; hi < h_grid.size(); ++hi) {
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
      IsingParams p;
      p.j = j;
      p.h = h_grid[hi];
      p.t = t_grid[ti];
      const QuantumState psi = ising_thermal_state(p);
      scan.magnetization[hi][ti] = expectation(m_total, psi);
      // Entropy of the ensemble's computational-basis distribution.
      const QuantumState rho = ising_thermal_ensemble(p);
      const cxmat r = rho.density_matrix();
      double s_val = 0.0;
      for (int b = 0; b < 8; ++b) {
        const double prob = r(b, b).real();
        if (prob > 1e-300) s_val -= prob * std::log(prob);
      }
      scan.entropy[hi][ti] = s_val;
    }
  }
  return scan;
}

}  // namespace spinsim
