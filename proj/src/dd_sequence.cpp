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

#include "spinsim/dd_sequence.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace spinsim {

using nlohmann::json;

int DDSequence::interval_count() const {
  int n = static_cast<int>(events.size());
  return tail_delay > 0.0 ? n + 1 : n;
}

std::vector<double> DDSequence::pulse_fractions() const {
  std::vector<double> fractions;
  double t = 0.0;
  for (const PulseEvent& e : events) {
    t += e.delay_before;
    fractions.push_back(t / total_time);
  }
  return fractions;
}

void DDSequence::validate() const {
  if (total_time <= 0.0)
    throw std::invalid_argument("DDSequence: total_time must be positive");
  double sum = tail_delay;
  if (tail_delay < 0.0)
    throw std::invalid_argument("DDSequence: negative tail delay");
  for (const PulseEvent& e : events) {
    if (e.delay_before < 0.0)
      throw std::invalid_argument("DDSequence: negative delay");
    if (std::abs(e.axis.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("DDSequence: pulse axis must be unit norm");
    sum += e.delay_before;
  }
  if (std::abs(sum - total_time) > 1e-12 * std::max(1.0, total_time))
    throw std::invalid_argument("DDSequence: delays do not sum to total_time");
}

std::string DDSequence::to_json() const {
  json root;
  root["name"] = name;
  root["total_time_s"] = total_time;
  root["tail_delay_s"] = tail_delay;
  root["events"] = json::array();
  for (const PulseEvent& e : events)
    root["events"].push_back({{"delay_before_s", e.delay_before},
                              {"axis", {e.axis.x(), e.axis.y(), e.axis.z()}},
                              {"angle_rad", e.angle}});
  return root.dump(2);
}

DDSequence DDSequence::from_json(const std::string& text) {
  json root = json::parse(text);
  DDSequence seq;
  seq.name = root.value("name", "");
  seq.total_time = root.at("total_time_s").get<double>();
  seq.tail_delay = root.at("tail_delay_s").get<double>();
  for (const json& je : root.at("events")) {
    PulseEvent e;
    e.delay_before = je.at("delay_before_s").get<double>();
    const json& ax = je.at("axis");
    e.axis = Eigen::Vector3d(ax[0].get<double>(), ax[1].get<double>(),
                             ax[2].get<double>());
    e.angle = je.at("angle_rad").get<double>();
    seq.events.push_back(e);
  }
  seq.validate();
  return seq;
}

cxmat rotation(const Eigen::Vector3d& axis, double angle) {
  const cxmat gen = axis.x() * pauli(PauliAxis::X) + axis.y() * pauli(PauliAxis::Y) +
                    axis.z() * pauli(PauliAxis::Z);
  const double half = 0.5 * angle;
  return std::cos(half) * cxmat::Identity(2, 2) - imag_unit * std::sin(half) * gen;
}

cxmat sequence_propagator(const DDSequence& seq, const cxmat& h,
                          double flip_angle_scale) {
  seq.validate();
  if (h.rows() != 2 || h.cols() != 2)
    throw std::invalid_argument("sequence_propagator: single-spin Hamiltonian expected");
  cxmat u = cxmat::Identity(2, 2);
  for (const PulseEvent& e : seq.events) {
    if (e.delay_before > 0.0) u = propagator(h, e.delay_before) * u;
    u = rotation(e.axis, flip_angle_scale * e.angle) * u;
  }
  if (seq.tail_delay > 0.0) u = propagator(h, seq.tail_delay) * u;
  return u;
}

}  // namespace spinsim
