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

#include "spinsim/linalg.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "spinsim/constants.hpp"

namespace spinsim {

cxmat pauli(PauliAxis axis) {
  cxmat m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      m << 0, -imag_unit, imag_unit, 0;
      break;
    case PauliAxis::Z:
      m << 1, 0, 0, -1;
      break;
    case PauliAxis::I:
      m = cxmat::Identity(2, 2);
      break;
  }
  return m;
}

long spin_dim(int n_spins) {
  if (n_spins < 1) throw std::invalid_argument("spin_dim: need at least one spin");
  if (n_spins > constants::max_spins)
    throw std::invalid_argument("spin_dim: " + std::to_string(n_spins) +
                                " spins exceeds the dense-register cap of " +
                                std::to_string(constants::max_spins));
  return 1L << n_spins;
}

cxmat embed(const cxmat& op, int site, int n_spins) {
  if (op.rows() != 2 || op.cols() != 2)
    throw std::invalid_argument("embed: operator must be 2x2");
  const long dim = spin_dim(n_spins);
  if (site < 0 || site >= n_spins)
    throw std::invalid_argument("embed: site index out of range");
  const long left = 1L << site;
  const long right = dim / (2 * left);
  cxmat out = cxmat::Zero(dim, dim);
  // Index layout: row = (l * 2 + s) * right + r with spin 0 most significant.
  for (long l = 0; l < left; ++l)
    for (int s = 0; s < 2; ++s)
      for (int sp = 0; sp < 2; ++sp) {
        const cx v = op(s, sp);
        if (v == cx(0, 0)) continue;
        for (long r = 0; r < right; ++r)
          out((l * 2 + s) * right + r, (l * 2 + sp) * right + r) = v;
      }
  return out;
}

cxmat two_site(PauliAxis a, int i, PauliAxis b, int j, int n_spins) {
  return embed(pauli(a), i, n_spins) * embed(pauli(b), j, n_spins);
}

cxmat kron(const cxmat& a, const cxmat& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

bool is_hermitian(const cxmat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() <= tol * scale;
}

bool is_unitary(const cxmat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const cxmat gram = m.adjoint() * m;
  return (gram - cxmat::Identity(m.rows(), m.cols())).norm() <=
         tol * static_cast<double>(m.rows());
}

cxmat propagator(const cxmat& hamiltonian, double t_seconds) {
  if (!is_hermitian(hamiltonian, 1e-10))
    throw std::invalid_argument("propagator: Hamiltonian must be Hermitian");
  Eigen::SelfAdjointEigenSolver<cxmat> es(hamiltonian);
  const Eigen::VectorXd& evals = es.eigenvalues();
  const cxmat& v = es.eigenvectors();
  cxvec phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k)
    phases(k) = std::exp(-imag_unit * evals(k) * t_seconds);
  return v * phases.asDiagonal() * v.adjoint();
}

double gate_fidelity(const cxmat& u, const cxmat& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw std::invalid_argument("gate_fidelity: dimension mismatch");
  const double d = static_cast<double>(u.rows());
  const cx overlap = (u.adjoint() * v).trace();
  return std::norm(overlap) / (d * d);
}

}  // namespace spinsim
