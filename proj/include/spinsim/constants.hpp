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

#ifndef SPINSIM_CONSTANTS_HPP
#define SPINSIM_CONSTANTS_HPP

namespace spinsim {
namespace constants {

// CODATA 2018 values, SI units.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double k_boltzmann = 1.380649e-23;    // J / K (exact)
inline constexpr double mu0 = 1.25663706212e-6;        // N / A^2

// Gyromagnetic ratios, rad s^-1 T^-1.
inline constexpr double gamma_1h = 2.6752218744e8;
inline constexpr double gamma_13c = 6.728284e7;
inline constexpr double gamma_electron = -1.76085963023e11;

// Dense-matrix spin registers are capped at 12 spins (dim 4096); larger
// requests are rejected by the builders.
inline constexpr int max_spins = 12;

}  // namespace constants
}  // namespace spinsim

#endif  // SPINSIM_CONSTANTS_HPP
