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

#include "spinsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace spinsim {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

const cxmat& qft_cached(int m) {
  static std::mutex mu;
  static std::map<int, cxmat> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, qft(m)).first;
  return it->second;
}

// Signed FFT-order index: k for k < N/2, k - N otherwise.
long signed_index(long k, long n) { return k < n / 2 ? k : k - n; }

// Apply an N x N matrix along one tensor axis of the amplitude vector
// (degree of freedom 0 is the most significant index block).
void apply_along_axis(cxvec& amp, const cxmat& q, int axis, int n_dof) {
  const long n = q.rows();
  long stride = 1;
  for (int d = n_dof - 1; d > axis; --d) stride *= n;
  const long outer_count = amp.size() / (n * stride);
  cxvec scratch(n), transformed(n);
  for (long outer = 0; outer < outer_count; ++outer) {
    const long base = outer * n * stride;
    for (long inner = 0; inner < stride; ++inner) {
      for (long k = 0; k < n; ++k) scratch(k) = amp(base + inner + k * stride);
      transformed.noalias() = q * scratch;
      for (long k = 0; k < n; ++k) amp(base + inner + k * stride) = transformed(k);
    }
  }
}

// Kinetic phase exp(-i p^2 dt / 2 mass) along one axis, momentum in the
// signed FFT ordering.
void kinetic_phase_along_axis(cxvec& amp, int axis, int n_dof, long n,
                              double length, double mass, double dt) {
  std::vector<cx> phases(n);
  for (long k = 0; k < n; ++k) {
    const double p = two_pi * static_cast<double>(signed_index(k, n)) / length;
    phases[k] = std::exp(-imag_unit * (p * p / (2.0 * mass)) * dt);
  }
  long stride = 1;
  for (int d = n_dof - 1; d > axis; --d) stride *= n;
  const long outer_count = amp.size() / (n * stride);
  for (long outer = 0; outer < outer_count; ++outer) {
    const long base = outer * n * stride;
    for (long inner = 0; inner < stride; ++inner)
      for (long k = 0; k < n; ++k) amp(base + inner + k * stride) *= phases[k];
  }
}

}  // namespace

QuantumState evolve(const QuantumState& state, const cxmat& h, double t_seconds) {
  if (h.rows() != state.dim())
    throw std::invalid_argument("evolve: dimension mismatch");
  const cxmat u = propagator(h, t_seconds);
  if (state.kind() == QuantumState::Kind::PureVector)
    return QuantumState::pure(u * state.vector());
  QuantumState out = QuantumState::density(u * state.density_matrix() * u.adjoint());
  if (state.pseudopure_alpha()) out.set_pseudopure_alpha(*state.pseudopure_alpha());
  return out;
}

cxmat trotter_evolve(const std::vector<cxmat>& terms, double t_seconds,
                     int n_steps) {
  if (terms.empty())
    throw std::invalid_argument("trotter_evolve: empty term list");
  if (n_steps < 1)
    throw std::invalid_argument("trotter_evolve: need at least one step");
  const double dt = t_seconds / n_steps;
  cxmat cycle = propagator(terms.front(), dt);
  for (std::size_t k = 1; k < terms.size(); ++k)
    cycle = propagator(terms[k], dt) * cycle;  // term k acts after term k-1
  // Binary powering of the cycle.
  cxmat result = cxmat::Identity(cycle.rows(), cycle.cols());
  cxmat base = cycle;
  int e = n_steps;
  while (e > 0) {
    if (e & 1) result = base * result;
    base = base * base;
    e >>= 1;
  }
  return result;
}

cxmat qft(int m_qubits) {
  if (m_qubits < 1) throw std::invalid_argument("qft: need at least one qubit");
  const long n = 1L << m_qubits;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  cxmat f(n, n);
  for (long j = 0; j < n; ++j)
    for (long k = 0; k < n; ++k)
      f(j, k) = norm * std::exp(imag_unit * (two_pi * static_cast<double>((j * k) % n) /
                                             static_cast<double>(n)));
  return f;
}

long GridRegister::dim() const {
  long d = 1;
  for (int i = 0; i < n_dof; ++i) d *= points_per_dof();
  return d;
}

void GridRegister::validate() const {
  if (m < 1 || n_dof < 1)
    throw std::invalid_argument("GridRegister: need m >= 1 and n_dof >= 1");
  if (x_max <= x_min)
    throw std::invalid_argument("GridRegister: empty position window");
  if (amplitudes.size() != dim())
    throw std::invalid_argument("GridRegister: amplitude length inconsistent with n_dof");
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("GridRegister: amplitudes must be normalized");
}

GridRegister GridRegister::gaussian(int m, double x_min, double x_max, double x0,
                                    double sigma, double p0) {
  GridRegister reg;
  reg.m = m;
  reg.n_dof = 1;
  reg.x_min = x_min;
  reg.x_max = x_max;
  const long n = reg.points_per_dof();
  reg.amplitudes.resize(n);
  for (long j = 0; j < n; ++j) {
    const double x = reg.position(j);
    const double arg = (x - x0) / (2.0 * sigma);
    reg.amplitudes(j) = std::exp(cx(-arg * arg, p0 * x));
  }
  reg.amplitudes /= reg.amplitudes.norm();
  return reg;
}

double GridRegister::mean_position(int dof) const {
  const long n = points_per_dof();
  long stride = 1;
  for (int d = n_dof - 1; d > dof; --d) stride *= n;
  double mean = 0.0;
  for (long idx = 0; idx < amplitudes.size(); ++idx) {
    const long j = (idx / stride) % n;
    mean += std::norm(amplitudes(idx)) * position(j);
  }
  return mean;
}

double GridRegister::mean_momentum(int dof) const {
  const long n = points_per_dof();
  cxvec amp = amplitudes;
  apply_along_axis(amp, qft_cached(m), dof, n_dof);
  // The QFT maps the plane wave exp(i p x) to index k = -pL/2pi mod N.
  long stride = 1;
  for (int d = n_dof - 1; d > dof; --d) stride *= n;
  const double length = x_max - x_min;
  double mean = 0.0;
  for (long idx = 0; idx < amp.size(); ++idx) {
    const long k = (idx / stride) % n;
    mean += std::norm(amp(idx)) * (-two_pi * static_cast<double>(signed_index(k, n)) / length);
  }
  return mean;
}

GridRegister split_operator_step(const GridRegister& reg,
                                 const std::function<double(double)>& potential,
                                 double mass, double dt) {
  reg.validate();
  if (reg.n_dof != 1)
    throw std::invalid_argument("split_operator_step: single degree of freedom only");
  GridRegister out = reg;
  const long n = reg.points_per_dof();
  for (long j = 0; j < n; ++j)
    out.amplitudes(j) *= std::exp(-imag_unit * potential(reg.position(j)) * dt);
  const cxmat& f = qft_cached(reg.m);
  apply_along_axis(out.amplitudes, f, 0, 1);
  kinetic_phase_along_axis(out.amplitudes, 0, 1, n, reg.x_max - reg.x_min, mass, dt);
  apply_along_axis(out.amplitudes, f.adjoint(), 0, 1);
  return out;
}

GridRegister multi_dof_evolve(
    const GridRegister& reg,
    const std::function<double(const std::vector<double>&)>& potential,
    const std::vector<double>& masses, double dt, int steps) {
  reg.validate();
  if (static_cast<int>(masses.size()) != reg.n_dof)
    throw std::invalid_argument("multi_dof_evolve: one mass per degree of freedom");
  GridRegister out = reg;
  const long n = reg.points_per_dof();
  const double length = reg.x_max - reg.x_min;
  const cxmat& f = qft_cached(reg.m);
  const cxmat f_dag = f.adjoint();

  // Precompute the joint potential phases (diagonal in the position basis).
  cxvec vphase(out.amplitudes.size());
  std::vector<double> xs(reg.n_dof);
  for (long idx = 0; idx < vphase.size(); ++idx) {
    long rem = idx;
    for (int d = reg.n_dof - 1; d >= 0; --d) {
      xs[d] = reg.position(rem % n);
      rem /= n;
    }
    vphase(idx) = std::exp(-imag_unit * potential(xs) * dt);
  }

  for (int s = 0; s < steps; ++s) {
    out.amplitudes = out.amplitudes.cwiseProduct(vphase);
    for (int d = 0; d < reg.n_dof; ++d) {
      apply_along_axis(out.amplitudes, f, d, reg.n_dof);
      kinetic_phase_along_axis(out.amplitudes, d, reg.n_dof, n, length, masses[d], dt);
      apply_along_axis(out.amplitudes, f_dag, d, reg.n_dof);
    }
  }
  return out;
}

void RelaxationParams::validate(int n_spins) const {
  if (static_cast<int>(t1_s.size()) != n_spins ||
      static_cast<int>(t2_star_s.size()) != n_spins)
    throw std::invalid_argument("RelaxationParams: one (T1, T2*) pair per spin");
  for (int s = 0; s < n_spins; ++s) {
    if (t1_s[s] <= 0.0 || t2_star_s[s] <= 0.0)
      throw std::invalid_argument("RelaxationParams: times must be positive");
    if (t2_star_s[s] > 2.0 * t1_s[s])
      throw std::invalid_argument("RelaxationParams: T2* must not exceed 2*T1");
  }
}

QuantumState apply_relaxation(const QuantumState& state,
                              const RelaxationParams& params, double t_seconds) {
  if (state.kind() != QuantumState::Kind::DensityMatrix)
    throw std::invalid_argument(
        "apply_relaxation: density-matrix input required (promote pure states first)");
  const long dim = state.dim();
  int n_spins = 0;
  while ((1L << n_spins) < dim) ++n_spins;
  if ((1L << n_spins) != dim)
    throw std::invalid_argument("apply_relaxation: dimension is not a power of two");
  params.validate(n_spins);

  cxmat rho = state.density_matrix();
  for (int s = 0; s < n_spins; ++s) {
    const double g1 = std::exp(-t_seconds / params.t1_s[s]);
    const double g2 = std::exp(-t_seconds / params.t2_star_s[s]);
    const long mask = 1L << (n_spins - 1 - s);
    for (long a = 0; a < dim; ++a) {
      if (a & mask) continue;
      for (long b = 0; b < dim; ++b) {
        if (b & mask) continue;
        const long a1 = a | mask;
        const long b1 = b | mask;
        const cx r00 = rho(a, b);
        const cx r11 = rho(a1, b1);
        rho(a, b) = 0.5 * (1.0 + g1) * r00 + 0.5 * (1.0 - g1) * r11;
        rho(a1, b1) = 0.5 * (1.0 - g1) * r00 + 0.5 * (1.0 + g1) * r11;
        rho(a, b1) *= g2;
        rho(a1, b) *= g2;
      }
    }
  }
  QuantumState out = QuantumState::density(std::move(rho));
  if (state.pseudopure_alpha()) out.set_pseudopure_alpha(*state.pseudopure_alpha());
  return out;
}

void NoiseModel::validate() const {
  if (sigma_rad_s < 0.0) throw std::invalid_argument("NoiseModel: sigma must be >= 0");
  if (tau_c_s <= 0.0) throw std::invalid_argument("NoiseModel: tau_c must be positive");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Checkpoint {
  double time = 0.0;
  bool is_pulse = false;
  bool toggles = false;
  int sample_index = -1;
};

}  // namespace

CoherenceCurve dephasing_trajectories(const DDSequence& seq,
                                      const NoiseModel& noise, int n_traj,
                                      int n_samples) {
  seq.validate();
  noise.validate();
  if (n_traj < 1) throw std::invalid_argument("dephasing_trajectories: n_traj >= 1");
  if (n_samples < 1) throw std::invalid_argument("dephasing_trajectories: n_samples >= 1");

  // Timeline of pulses and sample points, merged and sorted.
  std::vector<Checkpoint> checkpoints;
  double t = 0.0;
  for (const PulseEvent& e : seq.events) {
    t += e.delay_before;
    Checkpoint cp;
    cp.time = t;
    cp.is_pulse = true;
    const double az = std::abs(e.axis.z());
    if (az < 0.5) {
      if (std::abs(e.angle - std::numbers::pi) > 1e-9)
        throw std::invalid_argument("dephasing_trajectories: only pi pulses supported");
      cp.toggles = true;  // equatorial pi pulse inverts the dephasing phase
    } else if (az > 1.0 - 1e-12) {
      cp.toggles = false; // z rotations commute with the noise
    } else {
      throw std::invalid_argument("dephasing_trajectories: oblique pulse axis unsupported");
    }
    checkpoints.push_back(cp);
  }
  for (int i = 0; i < n_samples; ++i) {
    Checkpoint cp;
    cp.time = seq.total_time * static_cast<double>(i + 1) / n_samples;
    cp.sample_index = i;
    checkpoints.push_back(cp);
  }
  std::stable_sort(checkpoints.begin(), checkpoints.end(),
                   [](const Checkpoint& a, const Checkpoint& b) { return a.time < b.time; });

  const double dt_target =
      std::min(noise.tau_c_s / 10.0, seq.total_time / 512.0);

  CoherenceCurve curve;
  curve.times_s.resize(n_samples);
  for (int i = 0; i < n_samples; ++i)
    curve.times_s[i] = seq.total_time * static_cast<double>(i + 1) / n_samples;
  std::vector<double> sum(n_samples, 0.0), sum_sq(n_samples, 0.0);

  for (int traj = 0; traj < n_traj; ++traj) {
    std::mt19937_64 rng(splitmix64(noise.seed ^ splitmix64(static_cast<std::uint64_t>(traj) + 1)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    double delta_omega = noise.sigma_rad_s * gauss(rng);
    double phi = 0.0;
    double sign = 1.0;
    double t_cur = 0.0;
    for (const Checkpoint& cp : checkpoints) {
      const double seg = cp.time - t_cur;
      if (seg > 0.0) {
        const int n_sub = std::max(1, static_cast<int>(std::ceil(seg / dt_target)));
        const double dt_sub = seg / n_sub;
        const double decay = std::exp(-dt_sub / noise.tau_c_s);
        const double kick = noise.sigma_rad_s * std::sqrt(1.0 - decay * decay);
        for (int k = 0; k < n_sub; ++k) {
          phi += sign * delta_omega * dt_sub;
          delta_omega = delta_omega * decay + kick * gauss(rng);
        }
      }
      if (cp.toggles) sign = -sign;
      if (cp.sample_index >= 0) {
        const double w = std::cos(phi);
        sum[cp.sample_index] += w;
        sum_sq[cp.sample_index] += w * w;
      }
      t_cur = cp.time;
    }
  }

  curve.w.resize(n_samples);
  curve.stderr_w.resize(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double mean = sum[i] / n_traj;
    curve.w[i] = mean;
    if (n_traj > 1) {
      const double var = std::max(0.0, (sum_sq[i] - n_traj * mean * mean) / (n_traj - 1));
      curve.stderr_w[i] = std::sqrt(var / n_traj);
    } else {
      curve.stderr_w[i] = 0.0;
    }
  }
  return curve;
}

}  // namespace spinsim
