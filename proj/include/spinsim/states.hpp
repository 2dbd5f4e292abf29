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

#ifndef SPINSIM_STATES_HPP
#define SPINSIM_STATES_HPP

#include <optional>

#include "spinsim/linalg.hpp"

namespace spinsim {

// Pure state vector or density matrix. Values are immutable after
// construction; all operations return fresh states.
class QuantumState {
 public:
  enum class Kind { PureVector, DensityMatrix };

  // Throws if the vector is not normalized (2-norm within 1e-12 of 1).
  static QuantumState pure(cxvec psi);
  // Throws if rho is not Hermitian / trace-1 / positive semidefinite
  // (eigenvalues >= -1e-10).
  static QuantumState density(cxmat rho);
  // Computational |00...0> on n spins.
  static QuantumState ground(int n_spins);

  Kind kind() const { return kind_; }
  long dim() const;
  const cxvec& vector() const;
  // Density matrix view; promotes a pure vector to |psi><psi|.
  cxmat density_matrix() const;

  std::optional<double> pseudopure_alpha() const { return pseudopure_alpha_; }
  void set_pseudopure_alpha(double alpha) { pseudopure_alpha_ = alpha; }

 private:
  QuantumState() = default;
  Kind kind_ = Kind::PureVector;
  cxvec vec_;
  cxmat rho_;
  std::optional<double> pseudopure_alpha_;
};

// rho = (1-alpha)/2^n I + alpha (|0><0|)^(x n). alpha must lie in [0,1].
QuantumState pseudopure(int n_spins, double alpha);

// Boltzmann ground-state bias alpha = tanh(hbar gamma B0 / (kB T)).
// gamma in rad s^-1 T^-1, B0 in Tesla, T in Kelvin (> 0).
double thermal_bias(double gamma, double b0_tesla, double temperature_kelvin);

// S = -Tr(rho ln rho) in nats, with 0 ln 0 := 0.
double von_neumann_entropy(const QuantumState& state);

// Tr(rho O) or <psi|O|psi> for Hermitian O. Throws if the imaginary
// residue exceeds 1e-10.
double expectation(const cxmat& observable, const QuantumState& state);

}  // namespace spinsim

#endif  // SPINSIM_STATES_HPP
