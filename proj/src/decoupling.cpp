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

#include "spinsim/decoupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinsim {

namespace {

constexpr double pi = std::numbers::pi;
const Eigen::Vector3d x_axis{1, 0, 0};
const Eigen::Vector3d y_axis{0, 1, 0};
const Eigen::Vector3d z_axis{0, 0, 1};

// Intermediate token stream: a pulse or a stretch of free evolution.
struct Token {
  bool is_pulse = false;
  double delay = 0.0;
  Eigen::Vector3d axis = y_axis;
  double angle = pi;
};

Token delay_token(double t) {
  Token tok;
  tok.delay = t;
  return tok;
}

Token pulse_token(const Eigen::Vector3d& axis, double angle = pi) {
  Token tok;
  tok.is_pulse = true;
  tok.axis = axis;
  tok.angle = angle;
  return tok;
}

DDSequence assemble(std::string name, const std::vector<Token>& tokens,
                    double total_time) {
  DDSequence seq;
  seq.name = std::move(name);
  seq.total_time = total_time;
  double pending = 0.0;
  for (const Token& tok : tokens) {
    if (tok.is_pulse) {
      PulseEvent e;
      e.delay_before = pending;
      e.axis = tok.axis;
      e.angle = tok.angle;
      seq.events.push_back(e);
      pending = 0.0;
    } else {
      pending += tok.delay;
    }
  }
  seq.tail_delay = pending;
  // Absorb accumulated rounding into the tail so delays sum exactly.
  double sum = seq.tail_delay;
  for (const PulseEvent& e : seq.events) sum += e.delay_before;
  seq.tail_delay += total_time - sum;
  if (seq.tail_delay < 0.0 && seq.tail_delay > -1e-14 * total_time)
    seq.tail_delay = 0.0;
  seq.validate();
  return seq;
}

// Pulses at the given fractions of total_time about a fixed axis.
std::vector<Token> tokens_at_fractions(const std::vector<double>& fractions,
                                       const Eigen::Vector3d& axis,
                                       double total_time) {
  std::vector<Token> tokens;
  double prev = 0.0;
  for (double f : fractions) {
    tokens.push_back(delay_token((f - prev) * total_time));
    tokens.push_back(pulse_token(axis));
    prev = f;
  }
  tokens.push_back(delay_token((1.0 - prev) * total_time));
  return tokens;
}

std::vector<double> udd_fractions(int n) {
  std::vector<double> f(n);
  for (int j = 1; j <= n; ++j) {
    const double s = std::sin(pi * j / (2.0 * n + 2.0));
    f[j - 1] = s * s;
  }
  return f;
}

}  // namespace

DDSequence cpmg(int n_pulses, double total_time) {
  if (n_pulses < 1) throw std::invalid_argument("cpmg: need at least one pulse");
  std::vector<double> fractions(n_pulses);
  for (int j = 1; j <= n_pulses; ++j)
    fractions[j - 1] = (2.0 * j - 1.0) / (2.0 * n_pulses);
  return assemble("cpmg" + std::to_string(n_pulses),
                  tokens_at_fractions(fractions, y_axis, total_time), total_time);
}

DDSequence xy4(double total_time) {
  std::vector<Token> tokens;
  const double tau = total_time / 4.0;
  tokens.push_back(delay_token(tau / 2.0));
  const Eigen::Vector3d axes[4] = {x_axis, y_axis, x_axis, y_axis};
  for (int j = 0; j < 4; ++j) {
    if (j > 0) tokens.push_back(delay_token(tau));
    tokens.push_back(pulse_token(axes[j]));
  }
  tokens.push_back(delay_token(tau / 2.0));
  return assemble("xy4", tokens, total_time);
}

DDSequence pdd(double base_delay, int n_repeats) {
  if (base_delay <= 0.0) throw std::invalid_argument("pdd: base_delay must be positive");
  if (n_repeats < 1) throw std::invalid_argument("pdd: need at least one repeat");
  std::vector<Token> tokens;
  const Eigen::Vector3d axes[4] = {x_axis, y_axis, x_axis, y_axis};
  for (int r = 0; r < n_repeats; ++r)
    for (int j = 0; j < 4; ++j) {
      tokens.push_back(delay_token(base_delay));
      tokens.push_back(pulse_token(axes[j]));
    }
  return assemble("pdd", tokens, 4.0 * n_repeats * base_delay);
}

namespace {

void cdd_expand(int level, double tau0, std::vector<Token>& tokens) {
  if (level == 0) {
    tokens.push_back(delay_token(tau0));
    return;
  }
  for (int rep = 0; rep < 2; ++rep) {
    cdd_expand(level - 1, tau0, tokens);
    tokens.push_back(pulse_token(x_axis));
    cdd_expand(level - 1, tau0, tokens);
    tokens.push_back(pulse_token(z_axis));
  }
}

}  // namespace

DDSequence cdd(int level, double tau0) {
  if (level < 0) throw std::invalid_argument("cdd: level must be >= 0");
  if (tau0 <= 0.0) throw std::invalid_argument("cdd: tau0 must be positive");
  std::vector<Token> tokens;
  cdd_expand(level, tau0, tokens);
  const double total = std::pow(4.0, level) * tau0;
  return assemble("cdd" + std::to_string(level), tokens, total);
}

DDSequence udd(int n_pulses, double total_time) {
  if (n_pulses < 1) throw std::invalid_argument("udd: need at least one pulse");
  return assemble("udd" + std::to_string(n_pulses),
                  tokens_at_fractions(udd_fractions(n_pulses), y_axis, total_time),
                  total_time);
}

namespace {

// Inner UDD_n of Z pulses over a window of the given length.
void append_inner_udd(int n, double length, std::vector<Token>& tokens,
                      const Eigen::Vector3d& axis) {
  double prev = 0.0;
  for (double f : udd_fractions(n)) {
    tokens.push_back(delay_token((f - prev) * length));
    tokens.push_back(pulse_token(axis));
    prev = f;
  }
  tokens.push_back(delay_token((1.0 - prev) * length));
}

void cudd_expand(int level, int n, double length, std::vector<Token>& tokens) {
  if (level == 0) {
    append_inner_udd(n, length, tokens, z_axis);
    return;
  }
  for (int rep = 0; rep < 2; ++rep) {
    cudd_expand(level - 1, n, length / 2.0, tokens);
    tokens.push_back(pulse_token(x_axis));
  }
}

}  // namespace

DDSequence cudd(int n, double total_time) {
  if (n < 1) throw std::invalid_argument("cudd: order must be >= 1");
  std::vector<Token> tokens;
  cudd_expand(n, n, total_time, tokens);
  return assemble("cudd" + std::to_string(n), tokens, total_time);
}

DDSequence qdd(int n, double total_time, bool z_outer) {
  if (n < 1) throw std::invalid_argument("qdd: order must be >= 1");
  const Eigen::Vector3d outer_axis = z_outer ? z_axis : x_axis;
  const Eigen::Vector3d inner_axis = z_outer ? x_axis : z_axis;
  const std::vector<double> outer = udd_fractions(n);
  std::vector<Token> tokens;
  double prev = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double next = j < n ? outer[j] : 1.0;
    append_inner_udd(n, (next - prev) * total_time, tokens, inner_axis);
    if (j < n) tokens.push_back(pulse_token(outer_axis));
    prev = next;
  }
  return assemble("qdd" + std::to_string(n), tokens, total_time);
}

DDSequence kdd(double phi, double total_time) {
  const double phases[5] = {pi / 6.0 + phi, phi, pi / 2.0 + phi, phi, pi / 6.0 + phi};
  std::vector<Token> tokens;
  const double tau = total_time / 5.0;
  for (int j = 0; j < 5; ++j) {
    tokens.push_back(delay_token(j == 0 ? tau / 2.0 : tau));
    tokens.push_back(pulse_token({std::cos(phases[j]), std::sin(phases[j]), 0.0}));
  }
  tokens.push_back(delay_token(tau / 2.0));
  return assemble("kdd", tokens, total_time);
}

void FilterSpec::validate() const {
  double prev = 0.0;
  for (double f : pulse_fractions) {
    if (f <= prev || f >= 1.0)
      throw std::invalid_argument(
          "FilterSpec: fractions must be strictly increasing within (0,1)");
    prev = f;
  }
}

FilterSpec filter_spec(const DDSequence& seq) {
  seq.validate();
  FilterSpec spec;
  double t = 0.0;
  for (const PulseEvent& e : seq.events) {
    t += e.delay_before;
    const double az = std::abs(e.axis.z());
    if (az > 1.0 - 1e-12) continue;  // z pulses do not toggle dephasing
    if (az >= 0.5)
      throw std::invalid_argument("filter_spec: oblique pulse axis unsupported");
    if (std::abs(e.angle - pi) > 1e-9)
      throw std::invalid_argument("filter_spec: equatorial pulses must be pi rotations");
    spec.pulse_fractions.push_back(t / seq.total_time);
  }
  spec.validate();
  return spec;
}

std::vector<double> switching_moments(const FilterSpec& spec, int max_moment) {
  spec.validate();
  std::vector<double> moments(max_moment, 0.0);
  std::vector<double> bounds;
  bounds.push_back(0.0);
  bounds.insert(bounds.end(), spec.pulse_fractions.begin(), spec.pulse_fractions.end());
  bounds.push_back(1.0);
  for (int m = 0; m < max_moment; ++m) {
    double c = 0.0;
    double sign = 1.0;
    for (std::size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
      c += sign * (std::pow(bounds[seg + 1], m + 1) - std::pow(bounds[seg], m + 1)) /
           (m + 1);
      sign = -sign;
    }
    moments[m] = c;
  }
  return moments;
}

int filter_order(const FilterSpec& spec, int max_order) {
  const std::vector<double> moments = switching_moments(spec, max_order);
  int order = 0;
  for (double c : moments) {
    if (std::abs(c) > 1e-10) break;
    ++order;
  }
  return order;
}

std::vector<BenchmarkRow> benchmark_sequences(
    const std::vector<SequenceFamily>& families, const NoiseModel& noise,
    const std::vector<double>& durations, int n_traj) {
  if (families.empty())
    throw std::invalid_argument("benchmark_sequences: no sequence families");
  std::vector<BenchmarkRow> rows;
  for (const SequenceFamily& fam : families) {
    for (double t : durations) {
      const DDSequence seq = fam.make(t);
      const CoherenceCurve curve = dephasing_trajectories(seq, noise, n_traj, 1);
      BenchmarkRow row;
      row.sequence = fam.name;
      row.t = t;
      row.w = curve.w.back();
      row.stderr_w = curve.stderr_w.back();
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace spinsim
