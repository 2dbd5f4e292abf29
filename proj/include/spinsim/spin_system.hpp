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

#ifndef SPINSIM_SPIN_SYSTEM_HPP
#define SPINSIM_SPIN_SYSTEM_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinsim/linalg.hpp"

namespace spinsim {

struct Spin {
  std::string label;
  double gyromagnetic_ratio = 0.0;  // rad s^-1 T^-1
  double offset_hz = 0.0;           // rotating-frame offset (chemical shift)
};

enum class CouplingKind { J, Dipolar, Hyperfine };

// Internuclear geometry for the direct dipolar coupling.
struct DipolarGeometry {
  double r_m = 0.0;               // internuclear distance, meters
  Eigen::Vector3d e = {0, 0, 1};  // unit vector along the internuclear axis

  // Angle between e and the external-field axis (z).
  double theta() const;
  void validate() const;  // throws on r <= 0 or non-unit e (1e-12)
};

// Hyperfine tensor in the spec'd frame: A = zz component, B = sqrt(Azx^2+Azy^2).
// Either the full tensor or the (A, B) scalars may be supplied; when both are
// present they must agree to 1e-9 (relative).
struct HyperfineParams {
  std::optional<Eigen::Matrix3d> a_tensor;  // rad/s
  double a_zz = 0.0;                        // rad/s
  double b_perp = 0.0;                      // rad/s, >= 0

  static HyperfineParams from_tensor(const Eigen::Matrix3d& tensor_rad_s);
  static HyperfineParams from_secular(double a_zz_rad_s, double b_perp_rad_s);
  void validate() const;
};

struct Coupling {
  int i = 0;
  int j = 0;
  CouplingKind kind = CouplingKind::J;
  // kind == J: scalar J in Hz, or a full 3x3 tensor in Hz.
  double j_hz = 0.0;
  std::optional<Eigen::Matrix3d> j_tensor_hz;
  // kind == Dipolar
  DipolarGeometry geometry;
  // kind == Hyperfine
  HyperfineParams hyperfine;
};

// Labelled spins plus pairwise coupling records. JSON schema (all file I/O in
// Hz; mandatory units block):
//
//   {
//     "units": {"offset": "Hz", "coupling": "Hz",
//               "gyromagnetic_ratio": "rad/(s*T)"},
//     "spins": [{"label": "C1", "gyromagnetic_ratio": 6.728284e7,
//                "offset_hz": 5693.0}, ...],
//     "couplings": [
//       {"i": 0, "j": 1, "kind": "J", "j_hz": 237.0},
//       {"i": 0, "j": 1, "kind": "J", "j_tensor_hz": [[..],[..],[..]]},
//       {"i": 0, "j": 2, "kind": "dipolar", "r_m": 1.5e-10, "e": [0,0,1]},
//       {"i": 0, "j": 1, "kind": "hyperfine", "a_zz_hz": 90.0e6,
//        "b_perp_hz": 30.0e6}  // or "a_tensor_hz": [[..],[..],[..]]
//     ]
//   }
struct SpinSystem {
  std::vector<Spin> spins;
  std::vector<Coupling> couplings;

  int n_spins() const { return static_cast<int>(spins.size()); }
  long dim() const { return spin_dim(n_spins()); }
  // Checks label uniqueness, index ranges, i != j.
  void validate() const;

  std::string to_json() const;
  static SpinSystem from_json(const std::string& text);
  static SpinSystem load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace spinsim

#endif  // SPINSIM_SPIN_SYSTEM_HPP
