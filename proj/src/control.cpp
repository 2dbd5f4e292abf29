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

#include "spinsim/control.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace spinsim {

namespace {

using nlohmann::json;

// Precomputed operators shared by fidelity/gradient evaluations.
struct ControlContext {
  cxmat h_internal;
  cxmat z_half_all;               // (1/2) sum_s Z_s, for ensemble offsets
  std::vector<cxmat> dh_x, dh_y;  // per channel: (1/2) sum_{s in targets} X_s / Y_s
  long dim = 0;
  int n_steps = 0;
  double dt = 0.0;
};

std::vector<int> resolve_targets(const ControlChannel& ch, int n_spins) {
  if (ch.targets.empty()) {
    std::vector<int> all(n_spins);
    for (int s = 0; s < n_spins; ++s) all[s] = s;
    return all;
  }
  for (int t : ch.targets)
    if (t < 0 || t >= n_spins)
      throw std::invalid_argument("ControlChannel: target spin out of range");
  return ch.targets;
}

ControlContext make_context(const PulseProgram& prog, const SpinSystem& system,
                            JCouplingForm form) {
  prog.validate();
  system.validate();
  ControlContext ctx;
  ctx.n_steps = prog.n_steps;
  ctx.dt = prog.dt_s;
  ctx.dim = system.dim();
  std::vector<std::string> sink;  // validity warnings not interesting here
  ctx.h_internal = internal_hamiltonian(system, form, &sink);
  const int n = system.n_spins();
  ctx.z_half_all = cxmat::Zero(ctx.dim, ctx.dim);
  for (int s = 0; s < n; ++s)
    ctx.z_half_all += 0.5 * embed(pauli(PauliAxis::Z), s, n);
  for (const ControlChannel& ch : prog.channels) {
    cxmat dx = cxmat::Zero(ctx.dim, ctx.dim);
    cxmat dy = cxmat::Zero(ctx.dim, ctx.dim);
    cxmat dz = cxmat::Zero(ctx.dim, ctx.dim);
    for (int s : resolve_targets(ch, n)) {
      dx += 0.5 * embed(pauli(PauliAxis::X), s, n);
      dy += 0.5 * embed(pauli(PauliAxis::Y), s, n);
      dz += 0.5 * embed(pauli(PauliAxis::Z), s, n);
    }
    // Carrier offset folds into the internal Hamiltonian for this channel's
    // spins (frame rotating at omega_rf).
    ctx.h_internal -= ch.omega_rf_rad_s * dz;
    ctx.dh_x.push_back(std::move(dx));
    ctx.dh_y.push_back(std::move(dy));
  }
  return ctx;
}

// Cartesian controls u_x = omega cos phi, u_y = omega sin phi, flattened as
// [channel][step][x,y].
Eigen::VectorXd encode_params(const PulseProgram& prog) {
  const int k = static_cast<int>(prog.channels.size());
  Eigen::VectorXd u(2 * k * prog.n_steps);
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < prog.n_steps; ++j) {
      const double w = prog.channels[c].omega_rad_s[j];
      const double p = prog.channels[c].phi_rad[j];
      u(2 * (c * prog.n_steps + j)) = w * std::cos(p);
      u(2 * (c * prog.n_steps + j) + 1) = w * std::sin(p);
    }
  return u;
}

void decode_params(const Eigen::VectorXd& u, PulseProgram& prog) {
  const int k = static_cast<int>(prog.channels.size());
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < prog.n_steps; ++j) {
      const double ux = u(2 * (c * prog.n_steps + j));
      const double uy = u(2 * (c * prog.n_steps + j) + 1);
      prog.channels[c].omega_rad_s[j] = std::hypot(ux, uy);
      prog.channels[c].phi_rad[j] = (ux == 0.0 && uy == 0.0) ? 0.0 : std::atan2(uy, ux);
    }
}

void project_to_bound(Eigen::VectorXd& u, int n_steps, int n_channels,
                      double omega_max) {
  for (int c = 0; c < n_channels; ++c)
    for (int j = 0; j < n_steps; ++j) {
      double& ux = u(2 * (c * n_steps + j));
      double& uy = u(2 * (c * n_steps + j) + 1);
      const double r = std::hypot(ux, uy);
      if (r > omega_max && r > 0.0) {
        ux *= omega_max / r;
        uy *= omega_max / r;
      }
    }
}

struct SampleEval {
  double fidelity = 0.0;
  Eigen::VectorXd grad;  // empty unless requested
};

// Fidelity (and optionally its exact gradient) of one ensemble sample.
SampleEval evaluate_sample(const ControlContext& ctx, const Eigen::VectorXd& u,
                           const cxmat& target, const EnsembleSample& sample,
                           bool want_gradient) {
  const long d = ctx.dim;
  const int n = ctx.n_steps;
  const int k = static_cast<int>(ctx.dh_x.size());
  const double dt = ctx.dt;

  const cxmat h_base = ctx.h_internal + sample.offset_rad_s * ctx.z_half_all;

  std::vector<cxmat> eigvecs(n), props(n);
  std::vector<Eigen::VectorXd> eigvals(n);
  for (int j = 0; j < n; ++j) {
    cxmat h = h_base;
    for (int c = 0; c < k; ++c) {
      const double ux = sample.rf_scale * u(2 * (c * n + j));
      const double uy = sample.rf_scale * u(2 * (c * n + j) + 1);
      h += ux * ctx.dh_x[c] + uy * ctx.dh_y[c];
    }
    Eigen::SelfAdjointEigenSolver<cxmat> es(h);
    eigvals[j] = es.eigenvalues();
    eigvecs[j] = es.eigenvectors();
    cxvec phases(d);
    for (long a = 0; a < d; ++a)
      phases(a) = std::exp(-imag_unit * eigvals[j](a) * dt);
    props[j] = eigvecs[j] * phases.asDiagonal() * eigvecs[j].adjoint();
  }

  // Prefixes A[j] = U_j ... U_1 (A[0] = I) and suffixes S[j] = U_N ... U_j.
  std::vector<cxmat> prefix(n + 1), suffix(n + 2);
  prefix[0] = cxmat::Identity(d, d);
  for (int j = 1; j <= n; ++j) prefix[j] = props[j - 1] * prefix[j - 1];
  suffix[n + 1] = cxmat::Identity(d, d);
  for (int j = n; j >= 1; --j) suffix[j] = suffix[j + 1] * props[j - 1];

  const cx tau = (target.adjoint() * prefix[n]).trace();
  SampleEval out;
  out.fidelity = std::norm(tau) / static_cast<double>(d * d);
  if (!want_gradient) return out;

  out.grad = Eigen::VectorXd::Zero(u.size());
  const cxmat t_dag = target.adjoint();
  for (int j = 0; j < n; ++j) {
    const cxmat m = prefix[j] * t_dag * suffix[j + 2];
    const cxmat m_eig = eigvecs[j].adjoint() * m * eigvecs[j];
    // dU in the eigenbasis: (V^dag dH V)_ab * gamma_ab with
    // gamma_ab = -i dt exp((mu_a+mu_b)/2) sinch((mu_a-mu_b)/2), mu = -i dt lambda.
    cxmat gamma(d, d);
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b) {
        const cx mu_a = -imag_unit * dt * eigvals[j](a);
        const cx mu_b = -imag_unit * dt * eigvals[j](b);
        const cx half_diff = 0.5 * (mu_a - mu_b);
        cx sinch;
        if (std::abs(half_diff) < 1e-5) {
          const cx h2 = half_diff * half_diff;
          sinch = 1.0 + h2 / 6.0 + h2 * h2 / 120.0;
        } else {
          sinch = std::sinh(half_diff) / half_diff;
        }
        gamma(a, b) = -imag_unit * dt * std::exp(0.5 * (mu_a + mu_b)) * sinch;
      }
    for (int c = 0; c < k; ++c) {
      const cxmat dx_eig = eigvecs[j].adjoint() * ctx.dh_x[c] * eigvecs[j];
      const cxmat dy_eig = eigvecs[j].adjoint() * ctx.dh_y[c] * eigvecs[j];
      cx dtau_x = 0.0, dtau_y = 0.0;
      for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) {
          const cx factor = m_eig(a, b) * gamma(b, a);
          dtau_x += factor * dx_eig(b, a);
          dtau_y += factor * dy_eig(b, a);
        }
      dtau_x *= sample.rf_scale;
      dtau_y *= sample.rf_scale;
      const double scale = 2.0 / static_cast<double>(d * d);
      out.grad(2 * (c * n + j)) += scale * (std::conj(tau) * dtau_x).real();
      out.grad(2 * (c * n + j) + 1) += scale * (std::conj(tau) * dtau_y).real();
    }
  }
  return out;
}

struct ObjectiveEval {
  double objective = 0.0;  // Phi_tot minus penalties
  double fidelity = 0.0;   // Phi_tot
  Eigen::VectorXd grad;
};

ObjectiveEval evaluate(const ControlContext& ctx, const Eigen::VectorXd& u,
                       const cxmat& target, const EnsembleSpec& ens,
                       double power_penalty, bool want_gradient) {
  ObjectiveEval out;
  if (want_gradient) out.grad = Eigen::VectorXd::Zero(u.size());
  for (const EnsembleSample& sample : ens.samples) {
    const SampleEval ev = evaluate_sample(ctx, u, target, sample, want_gradient);
    out.fidelity += sample.weight * ev.fidelity;
    if (want_gradient) out.grad += sample.weight * ev.grad;
  }
  out.objective = out.fidelity;
  if (power_penalty > 0.0) {
    out.objective -= power_penalty * ctx.dt * u.squaredNorm();
    if (want_gradient) out.grad -= 2.0 * power_penalty * ctx.dt * u;
  }
  return out;
}

void check_target(const cxmat& target, long dim) {
  if (target.rows() != dim || target.cols() != dim)
    throw std::invalid_argument("control: target dimension mismatch");
  if (!is_unitary(target))
    throw std::invalid_argument("control: target must be unitary");
}

}  // namespace

void PulseProgram::validate() const {
  if (n_steps < 1) throw std::invalid_argument("PulseProgram: need at least one step");
  if (dt_s <= 0.0) throw std::invalid_argument("PulseProgram: dt must be positive");
  if (omega_max_rad_s <= 0.0)
    throw std::invalid_argument("PulseProgram: omega_max must be positive");
  if (channels.empty()) throw std::invalid_argument("PulseProgram: no channels");
  for (const ControlChannel& ch : channels) {
    if (static_cast<int>(ch.omega_rad_s.size()) != n_steps ||
        static_cast<int>(ch.phi_rad.size()) != n_steps)
      throw std::invalid_argument("PulseProgram: channel arrays must have n_steps entries");
    for (double w : ch.omega_rad_s)
      if (w < 0.0 || w > omega_max_rad_s * (1.0 + 1e-12))
        throw std::invalid_argument("PulseProgram: amplitude outside [0, omega_max]");
  }
}

std::string PulseProgram::to_json() const {
  validate();
  json root;
  root["n_steps"] = n_steps;
  root["dt_s"] = dt_s;
  root["omega_max_rad_s"] = omega_max_rad_s;
  root["channels"] = json::array();
  for (const ControlChannel& ch : channels)
    root["channels"].push_back({{"targets", ch.targets},
                                {"omega_rf_rad_s", ch.omega_rf_rad_s},
                                {"omega_rad_s", ch.omega_rad_s},
                                {"phi_rad", ch.phi_rad}});
  return root.dump(2);
}

PulseProgram PulseProgram::from_json(const std::string& text) {
  json root = json::parse(text);
  PulseProgram prog;
  prog.n_steps = root.at("n_steps").get<int>();
  prog.dt_s = root.at("dt_s").get<double>();
  prog.omega_max_rad_s = root.at("omega_max_rad_s").get<double>();
  for (const json& jc : root.at("channels")) {
    ControlChannel ch;
    ch.targets = jc.value("targets", std::vector<int>{});
    ch.omega_rf_rad_s = jc.value("omega_rf_rad_s", 0.0);
    ch.omega_rad_s = jc.at("omega_rad_s").get<std::vector<double>>();
    ch.phi_rad = jc.at("phi_rad").get<std::vector<double>>();
    prog.channels.push_back(std::move(ch));
  }
  prog.validate();
  return prog;
}

PulseProgram PulseProgram::random_start(
    int n_steps, double dt_s, const std::vector<std::vector<int>>& channel_targets,
    double omega_max_rad_s, double amplitude_scale, std::uint64_t seed) {
  PulseProgram prog;
  prog.n_steps = n_steps;
  prog.dt_s = dt_s;
  prog.omega_max_rad_s = omega_max_rad_s;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> amp(0.0, amplitude_scale * omega_max_rad_s);
  for (const std::vector<int>& targets : channel_targets) {
    ControlChannel ch;
    ch.targets = targets;
    ch.omega_rad_s.resize(n_steps);
    ch.phi_rad.resize(n_steps);
    for (int j = 0; j < n_steps; ++j) {
      ch.omega_rad_s[j] = amp(rng);
      ch.phi_rad[j] = phase(rng);
    }
    prog.channels.push_back(std::move(ch));
  }
  prog.validate();
  return prog;
}

void EnsembleSpec::validate() const {
  if (samples.empty()) throw std::invalid_argument("EnsembleSpec: no samples");
  double sum = 0.0;
  for (const EnsembleSample& s : samples) {
    if (s.weight < 0.0) throw std::invalid_argument("EnsembleSpec: negative weight");
    sum += s.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("EnsembleSpec: weights must sum to 1");
}

EnsembleSpec EnsembleSpec::nominal() {
  EnsembleSpec ens;
  ens.samples.push_back({1.0, 0.0, 1.0});
  return ens;
}

cxmat control_hamiltonian(const PulseProgram& prog, int step,
                          const SpinSystem& system, JCouplingForm form) {
  if (step < 0 || step >= prog.n_steps)
    throw std::invalid_argument("control_hamiltonian: step out of range");
  const ControlContext ctx = make_context(prog, system, form);
  cxmat h = ctx.h_internal;
  for (std::size_t c = 0; c < prog.channels.size(); ++c) {
    const double w = prog.channels[c].omega_rad_s[step];
    const double p = prog.channels[c].phi_rad[step];
    h += w * std::cos(p) * ctx.dh_x[c] + w * std::sin(p) * ctx.dh_y[c];
  }
  return h;
}

cxmat program_propagator(const PulseProgram& prog, const SpinSystem& system,
                         JCouplingForm form) {
  const ControlContext ctx = make_context(prog, system, form);
  const Eigen::VectorXd u = encode_params(prog);
  const long d = ctx.dim;
  cxmat total = cxmat::Identity(d, d);
  for (int j = 0; j < prog.n_steps; ++j) {
    cxmat h = ctx.h_internal;
    for (std::size_t c = 0; c < prog.channels.size(); ++c) {
      h += u(2 * (c * prog.n_steps + j)) * ctx.dh_x[c] +
           u(2 * (c * prog.n_steps + j) + 1) * ctx.dh_y[c];
    }
    total = propagator(h, prog.dt_s) * total;
  }
  return total;
}

double ensemble_fidelity(const PulseProgram& prog, const cxmat& target,
                         const SpinSystem& system, const EnsembleSpec& ens,
                         JCouplingForm form) {
  ens.validate();
  const ControlContext ctx = make_context(prog, system, form);
  check_target(target, ctx.dim);
  return evaluate(ctx, encode_params(prog), target, ens, 0.0, false).fidelity;
}

Eigen::VectorXd gradient(const PulseProgram& prog, const cxmat& target,
                         const SpinSystem& system, const EnsembleSpec& ens,
                         JCouplingForm form) {
  ens.validate();
  const ControlContext ctx = make_context(prog, system, form);
  check_target(target, ctx.dim);
  return evaluate(ctx, encode_params(prog), target, ens, 0.0, true).grad;
}

GrapeResult grape_optimize(const PulseProgram& initial, const cxmat& target,
                           const SpinSystem& system, const EnsembleSpec& ens,
                           const GrapeConfig& cfg, JCouplingForm form) {
  if (cfg.epsilon <= 0.0) throw std::invalid_argument("GrapeConfig: epsilon must be positive");
  ens.validate();
  const ControlContext ctx = make_context(initial, system, form);
  check_target(target, ctx.dim);
  const int n_channels = static_cast<int>(initial.channels.size());

  GrapeResult result;
  result.program = initial;
  Eigen::VectorXd u = encode_params(initial);
  project_to_bound(u, ctx.n_steps, n_channels, initial.omega_max_rad_s);

  ObjectiveEval cur = evaluate(ctx, u, target, ens, cfg.power_penalty, false);
  if (!std::isfinite(cur.objective))
    throw std::runtime_error("grape_optimize: non-finite objective");
  result.trace.push_back(cur.objective);
  result.status = GrapeStatus::MaxIterations;

  double step = cfg.epsilon;
  const double omega_max = initial.omega_max_rad_s;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    result.iterations = iter + 1;
    const Eigen::VectorXd g =
        evaluate(ctx, u, target, ens, cfg.power_penalty, true).grad;
    const double g_max = g.cwiseAbs().maxCoeff();
    if (g_max == 0.0) {
      result.status = GrapeStatus::Converged;  // stationary point
      break;
    }

    // Backtrack until the (projected) step is non-decreasing. The trial step
    // is clamped so the largest control displacement starts between
    // 1e-4*omega_max and omega_max regardless of the gradient scale.
    double s = std::clamp(step, 1e-4 * omega_max / g_max, omega_max / g_max);
    bool improved = false;
    Eigen::VectorXd best_u;
    ObjectiveEval best;
    for (int att = 0; att < 60; ++att) {
      Eigen::VectorXd cand = u + s * g;
      project_to_bound(cand, ctx.n_steps, n_channels, initial.omega_max_rad_s);
      const ObjectiveEval ev = evaluate(ctx, cand, target, ens, cfg.power_penalty, false);
      if (!std::isfinite(ev.objective))
        throw std::runtime_error("grape_optimize: non-finite objective");
      if (ev.objective >= cur.objective) {
        improved = true;
        best_u = std::move(cand);
        best = ev;
        break;
      }
      s *= 0.5;
    }
    if (!improved) {
      result.status = GrapeStatus::Stalled;
      break;
    }
    // Expand while the objective keeps growing.
    for (int att = 0; att < 20; ++att) {
      Eigen::VectorXd cand = u + 2.0 * s * g;
      project_to_bound(cand, ctx.n_steps, n_channels, initial.omega_max_rad_s);
      const ObjectiveEval ev = evaluate(ctx, cand, target, ens, cfg.power_penalty, false);
      if (std::isfinite(ev.objective) && ev.objective > best.objective) {
        s *= 2.0;
        best_u = std::move(cand);
        best = ev;
      } else {
        break;
      }
    }
    const double gain = best.objective - cur.objective;
    u = best_u;
    cur = best;
    result.trace.push_back(cur.objective);
    step = s;
    if (cfg.target_infidelity > 0.0 && 1.0 - cur.fidelity <= cfg.target_infidelity) {
      result.status = GrapeStatus::TargetReached;
      break;
    }
    if (gain < cfg.delta_phi_threshold) {
      result.status = GrapeStatus::Converged;
      break;
    }
  }

  decode_params(u, result.program);
  result.final_fidelity = cur.fidelity;
  return result;
}

}  // namespace spinsim
