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

#include "spinsim/adiabatic.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace spinsim {

AdiabaticResult adiabatic_evolve(const cxmat& h_initial, const cxmat& h_problem,
                                 double tau, int n_steps) {
  if (h_initial.rows() != h_problem.rows() || h_initial.cols() != h_problem.cols())
    throw std::invalid_argument("adiabatic_evolve: dimension mismatch");
  if (!is_hermitian(h_initial, 1e-10) || !is_hermitian(h_problem, 1e-10))
    throw std::invalid_argument("adiabatic_evolve: Hamiltonians must be Hermitian");
  if (tau < 0.0 || n_steps < 1)
    throw std::invalid_argument("adiabatic_evolve: need tau >= 0 and n_steps >= 1");

  Eigen::SelfAdjointEigenSolver<cxmat> es_a(h_initial);
  const Eigen::VectorXd& ea = es_a.eigenvalues();
  const double gap_scale = std::max(1.0, std::abs(ea(ea.size() - 1) - ea(0)));
  if (ea.size() > 1 && (ea(1) - ea(0)) < 1e-10 * gap_scale)
    throw std::invalid_argument(
        "adiabatic_evolve: degenerate initial ground state; start is ambiguous");
  cxvec psi = es_a.eigenvectors().col(0);

  const double dt = tau / n_steps;
  for (int k = 0; k < n_steps && tau > 0.0; ++k) {
    const double s = (k + 0.5) / n_steps;  // midpoint schedule value
    const cxmat h = (1.0 - s) * h_initial + s * h_problem;
    psi = propagator(h, dt) * psi;
  }

  Eigen::SelfAdjointEigenSolver<cxmat> es_p(h_problem);
  const Eigen::VectorXd& ep = es_p.eigenvalues();
  const double tol = 1e-10 * std::max(1.0, std::abs(ep(ep.size() - 1) - ep(0)));
  double overlap = 0.0;
  for (Eigen::Index k = 0; k < ep.size(); ++k) {
    if (ep(k) - ep(0) > tol) break;
    overlap += std::norm(es_p.eigenvectors().col(k).dot(psi));
  }
  AdiabaticResult result{QuantumState::pure(psi / psi.norm()), overlap};
  return result;
}

CoolingBound cooling_bound(double eps_b, int m) {
  if (eps_b <= 0.0 || eps_b >= 1.0)
    throw std::invalid_argument("cooling_bound: eps_b must lie in (0,1)");
  if (m < 2) throw std::invalid_argument("cooling_bound: need m >= 2 qubits");
  CoolingBound out;
  if (eps_b > std::pow(2.0, -m)) {
    out.near_ground_state = true;
    out.polarization = 1.0;
  } else {
    out.polarization = eps_b * std::pow(2.0, m - 2);
  }
  return out;
}

}  // namespace spinsim
