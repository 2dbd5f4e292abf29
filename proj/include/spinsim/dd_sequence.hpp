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

#ifndef SPINSIM_DD_SEQUENCE_HPP
#define SPINSIM_DD_SEQUENCE_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinsim/linalg.hpp"

namespace spinsim {

struct PulseEvent {
  double delay_before = 0.0;        // free evolution before the pulse, seconds
  Eigen::Vector3d axis = {0, 1, 0}; // rotation axis, unit norm
  double angle = 0.0;               // rotation angle, radians
};

// Ordered pulse events plus the free evolution after the last pulse. Pulses
// are instantaneous; delays (including the tail) sum to total_time.
struct DDSequence {
  std::string name;
  std::vector<PulseEvent> events;
  double tail_delay = 0.0;
  double total_time = 0.0;

  int pulse_count() const { return static_cast<int>(events.size()); }
  // Number of free-evolution intervals (zero-length tail not counted).
  int interval_count() const;
  // Pulse times as fractions of total_time, in order.
  std::vector<double> pulse_fractions() const;
  // Throws unless delays are non-negative, sum to total_time (1e-12
  // relative) and all axes have unit norm.
  void validate() const;

  std::string to_json() const;
  static DDSequence from_json(const std::string& text);
};

// Propagator of the sequence under a static Hamiltonian `h` (single spin,
// rad/s): delay evolutions interleaved with exp(-i angle/2 axis.sigma)
// pulses. flip_angle_scale multiplies every pulse angle (models
// miscalibration).
cxmat sequence_propagator(const DDSequence& seq, const cxmat& h,
                          double flip_angle_scale = 1.0);

// Rotation exp(-i angle/2 axis.sigma).
cxmat rotation(const Eigen::Vector3d& axis, double angle);

}  // namespace spinsim

#endif  // SPINSIM_DD_SEQUENCE_HPP
