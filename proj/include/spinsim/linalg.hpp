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

#ifndef SPINSIM_LINALG_HPP
#define SPINSIM_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace spinsim {

using cx = std::complex<double>;
using cxmat = Eigen::MatrixXcd;
using cxvec = Eigen::VectorXcd;

inline constexpr cx imag_unit{0.0, 1.0};

enum class PauliAxis { X, Y, Z, I };

// 2x2 Pauli (or identity) matrix.
cxmat pauli(PauliAxis axis);

// Number of spins n gives Hilbert dimension 2^n. Throws if n exceeds the
// dense-register cap.
long spin_dim(int n_spins);

// Embed a single-spin operator at `site` of an n-spin register:
// I^(site) (x) op (x) I^(n-site-1). Spin 0 is the most significant bit of
// the basis index.
cxmat embed(const cxmat& op, int site, int n_spins);

// Product of two embedded single-spin operators, embed(a,i)*embed(b,j).
cxmat two_site(PauliAxis a, int i, PauliAxis b, int j, int n_spins);

cxmat kron(const cxmat& a, const cxmat& b);

bool is_hermitian(const cxmat& m, double tol = 1e-12);
bool is_unitary(const cxmat& m, double tol = 1e-10);

// U = exp(-i H t) for Hermitian H (rad/s), via eigendecomposition.
// Throws std::invalid_argument if H is not Hermitian.
cxmat propagator(const cxmat& hamiltonian, double t_seconds);

// Phase-invariant gate fidelity |Tr(U^dag V)|^2 / dim^2.
double gate_fidelity(const cxmat& u, const cxmat& v);

}  // namespace spinsim

#endif  // SPINSIM_LINALG_HPP
