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

#include "spinsim/states.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spinsim/constants.hpp"

namespace spinsim {

QuantumState QuantumState::pure(cxvec psi) {
  if (psi.size() < 1) throw std::invalid_argument("QuantumState: empty vector");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("QuantumState: pure vector must have unit norm");
  QuantumState s;
  s.kind_ = Kind::PureVector;
  s.vec_ = std::move(psi);
  return s;
}

QuantumState QuantumState::density(cxmat rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 1)
    throw std::invalid_argument("QuantumState: density matrix must be square");
  if (!is_hermitian(rho, 1e-12))
    throw std::invalid_argument("QuantumState: density matrix must be Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
      std::abs(rho.trace().imag()) > 1e-12)
    throw std::invalid_argument("QuantumState: density matrix must have trace 1");
  Eigen::SelfAdjointEigenSolver<cxmat> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("QuantumState: density matrix must be positive semidefinite");
  QuantumState s;
  s.kind_ = Kind::DensityMatrix;
  s.rho_ = std::move(rho);
  return s;
}

QuantumState QuantumState::ground(int n_spins) {
  cxvec psi = cxvec::Zero(spin_dim(n_spins));
  psi(0) = 1.0;
  return pure(std::move(psi));
}

long QuantumState::dim() const {
  return kind_ == Kind::PureVector ? vec_.size() : rho_.rows();
}

const cxvec& QuantumState::vector() const {
  if (kind_ != Kind::PureVector)
    throw std::logic_error("QuantumState: not a pure vector");
  return vec_;
}

cxmat QuantumState::density_matrix() const {
  if (kind_ == Kind::DensityMatrix) return rho_;
  return vec_ * vec_.adjoint();
}

QuantumState pseudopure(int n_spins, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("pseudopure: alpha must lie in [0,1]");
  const long dim = spin_dim(n_spins);
  cxmat rho = cxmat::Identity(dim, dim) * ((1.0 - alpha) / static_cast<double>(dim));
  rho(0, 0) += alpha;
  QuantumState s = QuantumState::density(std::move(rho));
  s.set_pseudopure_alpha(alpha);
  return s;
}

double thermal_bias(double gamma, double b0_tesla, double temperature_kelvin) {
  if (temperature_kelvin <= 0.0)
    throw std::invalid_argument("thermal_bias: temperature must be positive");
  return std::tanh(constants::hbar * gamma * b0_tesla /
                   (constants::k_boltzmann * temperature_kelvin));
}

double von_neumann_entropy(const QuantumState& state) {
  const cxmat rho = state.density_matrix();
  if (state.kind() == QuantumState::Kind::DensityMatrix) {
    // Revalidate: entropy is only defined for a proper density matrix.
    if (!is_hermitian(rho, 1e-12) || std::abs(rho.trace().real() - 1.0) > 1e-12)
      throw std::invalid_argument("von_neumann_entropy: invalid density matrix");
  }
  Eigen::SelfAdjointEigenSolver<cxmat> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p < -1e-10)
      throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

double expectation(const cxmat& observable, const QuantumState& state) {
  if (observable.rows() != state.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  cx value;
  if (state.kind() == QuantumState::Kind::PureVector) {
    value = state.vector().dot(observable * state.vector());
  } else {
    value = (state.density_matrix() * observable).trace();
  }
  if (std::abs(value.imag()) > 1e-10)
    throw std::invalid_argument("expectation: non-negligible imaginary part; observable not Hermitian?");
  return value.real();
}

}  // namespace spinsim
