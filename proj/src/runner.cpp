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

#include "spinsim/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <Eigen/Core>
#include <openssl/evp.h>

#include "spinsim/adiabatic.hpp"
#include "spinsim/constants.hpp"
#include "spinsim/control.hpp"
#include "spinsim/csv.hpp"
#include "spinsim/decoupling.hpp"
#include "spinsim/dynamics.hpp"
#include "spinsim/fano_anderson.hpp"
#include "spinsim/hamiltonians.hpp"
#include "spinsim/ising.hpp"
#include "spinsim/lattice_gas.hpp"
#include "spinsim/reference.hpp"

namespace spinsim {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double two_pi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Numeric parameter lookup with range diagnostics.
class ParamCheck {
 public:
  ParamCheck(const json& params, std::vector<std::string>& diag)
      : params_(params), diag_(diag) {}

  double number(const std::string& key, double fallback,
                double min_value = -1e300, double max_value = 1e300) {
    if (!params_.contains(key)) return fallback;
    if (!params_[key].is_number()) {
      diag_.push_back("parameters." + key + ": must be a number");
      return fallback;
    }
    const double v = params_[key].get<double>();
    if (v < min_value || v > max_value) {
      std::ostringstream os;
      os << "parameters." << key << ": value " << v << " outside [" << min_value
         << ", " << max_value << "]";
      diag_.push_back(os.str());
    }
    return v;
  }

  int integer(const std::string& key, int fallback, int min_value,
              int max_value = 1 << 30) {
    if (!params_.contains(key)) return fallback;
    if (!params_[key].is_number_integer()) {
      diag_.push_back("parameters." + key + ": must be an integer");
      return fallback;
    }
    const int v = params_[key].get<int>();
    if (v < min_value || v > max_value) {
      std::ostringstream os;
      os << "parameters." << key << ": value " << v << " outside [" << min_value
         << ", " << max_value << "]";
      diag_.push_back(os.str());
    }
    return v;
  }

 private:
  const json& params_;
  std::vector<std::string>& diag_;
};

struct ExperimentOutput {
  std::vector<std::pair<std::string, std::string>> files;  // name -> bytes
  json oracle_deltas = json::object();
};

std::vector<std::string> base_comments(const RunConfig& config) {
  return {"experiment: " + config.experiment, "seed: " + std::to_string(config.seed),
          "spinsim: " + std::string(kVersion)};
}

// ---------------------------------------------------------------------------
// sim-ising
// ---------------------------------------------------------------------------

void validate_sim_ising(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  pc.number("j", 1.0, 1e-12, 1e12);
  pc.number("h_abs_max", 4.0, 0.0, 1e12);
  pc.integer("h_steps", 33, 1);
  const double t_min = pc.number("t_min", 0.05, 1e-12, 1e12);
  pc.number("t_max", 2.0, t_min, 1e12);
  pc.integer("t_steps", 40, 1);
}

ExperimentOutput run_sim_ising(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  const double j = pc.number("j", 1.0);
  const double h_abs = pc.number("h_abs_max", 4.0);
  const int h_steps = pc.integer("h_steps", 33, 1);
  const double t_min = pc.number("t_min", 0.05);
  const double t_max = pc.number("t_max", 2.0);
  const int t_steps = pc.integer("t_steps", 40, 1);

  std::vector<double> h_grid(h_steps), t_grid(t_steps);
  for (int i = 0; i < h_steps; ++i)
    h_grid[i] = h_steps == 1 ? 0.0 : -h_abs + 2.0 * h_abs * i / (h_steps - 1);
  for (int i = 0; i < t_steps; ++i)
    t_grid[i] = t_steps == 1 ? t_min : t_min + (t_max - t_min) * i / (t_steps - 1);

  const IsingScan scan = ising_scan(j, h_grid, t_grid);

  double max_dm = 0.0, max_ds = 0.0;
  auto comments = base_comments(config);
  comments.push_back("units: reduced (k_B = 1), J = " + csv_number(j));
  CsvWriter csv({"h", "T", "M", "S"}, comments);
  for (int hi = 0; hi < h_steps; ++hi)
    for (int ti = 0; ti < t_steps; ++ti) {
      const double m = scan.magnetization[hi][ti];
      const double s = scan.entropy[hi][ti];
      csv.add_row({h_grid[hi], t_grid[ti], m, s});
      const reference::IsingPoint ref =
          reference::ising_brute_force(j, h_grid[hi], t_grid[ti]);
      max_dm = std::max(max_dm, std::abs(m - ref.magnetization));
      max_ds = std::max(max_ds, std::abs(s - ref.entropy));
    }

  ExperimentOutput out;
  out.files.emplace_back("ising_scan.csv", csv.text());
  out.oracle_deltas["max_abs_dM_vs_enumeration"] = max_dm;
  out.oracle_deltas["max_abs_dS_vs_enumeration"] = max_ds;
  return out;
}

// ---------------------------------------------------------------------------
// sim-fano
// ---------------------------------------------------------------------------

void validate_sim_fano(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  pc.number("eps_k_rad_s", 1.0);
  pc.number("eps_rad_s", 3.0);
  pc.number("v_rad_s", 3.0);
  pc.number("t_max_s", 25.0, 1e-12, 1e12);
  pc.integer("n_samples", 256, 8, 1 << 16);
}

ExperimentOutput run_sim_fano(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  FanoAndersonParams p;
  p.eps_k = pc.number("eps_k_rad_s", 1.0);
  p.eps = pc.number("eps_rad_s", 3.0);
  p.v = pc.number("v_rad_s", 3.0);
  const double t_max = pc.number("t_max_s", 25.0);
  const int n_samples = pc.integer("n_samples", 256, 8);

  std::vector<double> times(n_samples);
  for (int i = 0; i < n_samples; ++i) times[i] = t_max * i / n_samples;
  const CorrelationSeries series = fano_anderson_g(p, times);

  auto comments = base_comments(config);
  comments.push_back("units: rad/s and seconds");
  CsvWriter g_csv({"t", "re_g_circuit", "im_g_circuit", "re_g_direct", "im_g_direct"},
                  comments);
  double max_dg = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    g_csv.add_row({times[i], series.g_circuit[i].real(), series.g_circuit[i].imag(),
                   series.g_direct[i].real(), series.g_direct[i].imag()});
    max_dg = std::max(max_dg, std::abs(series.g_circuit[i] - series.g_direct[i]));
  }

  const SpectrumResult spec = fano_anderson_spectrum(p, t_max, n_samples);
  const auto [e_lo, e_hi] = fano_anderson_single_excitation_energies(p);
  CsvWriter s_csv({"peak_rad_s", "nearest_level_rad_s", "abs_error_rad_s"},
                  base_comments(config));
  double max_peak_err = 0.0;
  for (double f : spec.peak_frequencies_rad_s) {
    const double nearest = std::abs(f - e_lo) < std::abs(f - e_hi) ? e_lo : e_hi;
    s_csv.add_row({f, nearest, std::abs(f - nearest)});
    max_peak_err = std::max(max_peak_err, std::abs(f - nearest));
  }

  ExperimentOutput out;
  out.files.emplace_back("fano_g.csv", g_csv.text());
  out.files.emplace_back("fano_spectrum.csv", s_csv.text());
  out.oracle_deltas["max_abs_circuit_vs_direct"] = max_dg;
  out.oracle_deltas["max_peak_error_rad_s"] = max_peak_err;
  out.oracle_deltas["dft_bin_rad_s"] = spec.bin_width_rad_s;
  if (spec.aliasing_warning) out.oracle_deltas["aliasing_warning"] = *spec.aliasing_warning;
  return out;
}

// ---------------------------------------------------------------------------
// sim-burgers
// ---------------------------------------------------------------------------

void validate_sim_burgers(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  pc.integer("n_nodes", 16, 4, 1 << 20);
  pc.number("kappa", 0.5, 1e-6, 1.0);
  pc.number("amplitude_rel", 0.4, 1e-9, 0.999);
  pc.integer("steps", 12, 1);
  pc.number("dx", 1.0 / 16.0, 1e-12, 1e12);
  pc.number("dt", 1.0, 1e-12, 1e12);
}

ExperimentOutput run_sim_burgers(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  const int n_nodes = pc.integer("n_nodes", 16, 4);
  const double kappa = pc.number("kappa", 0.5);
  const double amp_rel = pc.number("amplitude_rel", 0.4);
  const int steps = pc.integer("steps", 12, 1);
  const double dx = pc.number("dx", 1.0 / 16.0);
  const double dt = pc.number("dt", 1.0);

  const double alpha = 0.5 * std::asin(kappa);
  const double length = n_nodes * dx;
  const double a_scale = kappa * dx / dt;
  const double amplitude = amp_rel * a_scale;
  auto u0 = [&](double z) { return amplitude * std::sin(two_pi * z / length); };

  std::vector<double> profile(n_nodes);
  for (int i = 0; i < n_nodes; ++i) profile[i] = u0(i * dx);
  const LatticeGasState init =
      LatticeGasState::from_velocity_profile(n_nodes, dx, dt, alpha, profile);
  const LatticeGasRun lg = burgers_lattice_gas(init, steps);

  // Shock time of the inviscid equation, 1/max(-du0/dz).
  const double shock_time = length / (two_pi * amplitude);

  auto comments = base_comments(config);
  comments.push_back("units: lattice (dx = " + csv_number(dx) + ", dt = " + csv_number(dt) +
                     "), nu = " + csv_number(init.viscosity()));
  CsvWriter csv({"step", "t", "node", "z", "u", "u_ref", "abs_error"}, comments);
  double num = 0.0, den = 0.0;
  const int ref_grid = 1024;
  for (int step = 0; step <= steps; ++step) {
    const double t = step * dt;
    const std::vector<double> ref =
        reference::burgers_finite_difference(u0, length, init.viscosity(), t, ref_grid);
    const bool pre_shock = t <= shock_time;
    for (int i = 0; i < n_nodes; ++i) {
      const double u_ref = ref[static_cast<std::size_t>(i) * ref_grid / n_nodes];
      const double u_sim = lg.u_history[step][i];
      csv.add_row({static_cast<double>(step), t, static_cast<double>(i), i * dx,
                   u_sim, u_ref, std::abs(u_sim - u_ref)});
      if (pre_shock) {
        num += (u_sim - u_ref) * (u_sim - u_ref);
        den += u_ref * u_ref;
      }
    }
  }

  ExperimentOutput out;
  out.files.emplace_back("burgers_u.csv", csv.text());
  out.oracle_deltas["l2_rel_error_pre_shock"] = den > 0.0 ? std::sqrt(num / den) : 0.0;
  out.oracle_deltas["shock_time"] = shock_time;
  out.oracle_deltas["max_occupancy_drift"] =
      lg.occupancy_drift.empty()
          ? 0.0
          : *std::max_element(lg.occupancy_drift.begin(), lg.occupancy_drift.end());
  out.oracle_deltas["clamp_events"] = lg.diagnostics.size();
  return out;
}

// ---------------------------------------------------------------------------
// sim-particle
// ---------------------------------------------------------------------------

void validate_sim_particle(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  const int m = pc.integer("m_qubits", 8, 1);
  if (m > constants::max_spins)
    diag.push_back("parameters.m_qubits: dimension cap exceeded (" + std::to_string(m) +
                   " qubits > " + std::to_string(constants::max_spins) + ")");
  const double x_min = pc.number("x_min", -8.0);
  pc.number("x_max", 8.0, x_min + 1e-12, 1e300);
  pc.number("mass", 1.0, 1e-12, 1e12);
  pc.number("omega", 1.0, 0.0, 1e12);
  pc.number("sigma", std::sqrt(0.5), 1e-12, 1e12);
  pc.number("dt", 0.002, 1e-12, 1e12);
  pc.integer("steps", 3000, 1);
  pc.integer("sample_every", 25, 1);
}

ExperimentOutput run_sim_particle(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  const int m = pc.integer("m_qubits", 8, 1);
  const double x_min = pc.number("x_min", -8.0);
  const double x_max = pc.number("x_max", 8.0);
  const double x0 = pc.number("x0", 0.2);
  const double sigma = pc.number("sigma", std::sqrt(0.5));
  const double p0 = pc.number("p0", 0.0);
  const double mass = pc.number("mass", 1.0);
  const double omega = pc.number("omega", 1.0);
  const double dt = pc.number("dt", 0.002);
  const int steps = pc.integer("steps", 3000, 1);
  const int sample_every = pc.integer("sample_every", 25, 1);

  auto potential = [&](double x) { return 0.5 * mass * omega * omega * x * x; };
  GridRegister reg = GridRegister::gaussian(m, x_min, x_max, x0, sigma, p0);

  auto comments = base_comments(config);
  comments.push_back("units: dimensionless oscillator units");
  CsvWriter csv({"t", "mean_x", "cos_reference", "norm_minus_1"}, comments);
  double max_err = 0.0, max_drift = 0.0;
  csv.add_row({0.0, reg.mean_position(), x0, reg.norm() - 1.0});
  for (int s = 1; s <= steps; ++s) {
    reg = split_operator_step(reg, potential, mass, dt);
    if (s % sample_every == 0 || s == steps) {
      const double t = s * dt;
      const double ref = x0 * std::cos(omega * t);
      const double mx = reg.mean_position();
      csv.add_row({t, mx, ref, reg.norm() - 1.0});
      max_err = std::max(max_err, std::abs(mx - ref));
      max_drift = std::max(max_drift, std::abs(reg.norm() - 1.0));
    }
  }

  ExperimentOutput out;
  out.files.emplace_back("particle_x.csv", csv.text());
  out.oracle_deltas["max_abs_x_error_vs_cos"] = max_err;
  out.oracle_deltas["max_norm_drift"] = max_drift;
  return out;
}

// ---------------------------------------------------------------------------
// adiabatic
// ---------------------------------------------------------------------------

void validate_adiabatic(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  const double tau_min = pc.number("tau_min_s", 0.05, 1e-12, 1e12);
  pc.number("tau_max_s", 5.0, tau_min, 1e12);
  pc.integer("n_tau", 12, 2);
  pc.integer("n_steps", 400, 1);
}

ExperimentOutput run_adiabatic(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  const double tau_min = pc.number("tau_min_s", 0.05);
  const double tau_max = pc.number("tau_max_s", 5.0);
  const int n_tau = pc.integer("n_tau", 12, 2);
  const int n_steps = pc.integer("n_steps", 400, 1);

  const cxmat h_a = pauli(PauliAxis::X);
  const cxmat h_p = pauli(PauliAxis::Z);

  auto comments = base_comments(config);
  comments.push_back("sweep: H(t) = (1-t/tau) X + (t/tau) Z, single qubit");
  CsvWriter csv({"tau", "ground_overlap"}, comments);
  double prev = -1.0;
  int violations = 0;
  for (int i = 0; i < n_tau; ++i) {
    const double tau =
        tau_min * std::pow(tau_max / tau_min, static_cast<double>(i) / (n_tau - 1));
    const AdiabaticResult res = adiabatic_evolve(h_a, h_p, tau, n_steps);
    csv.add_row({tau, res.ground_overlap});
    if (res.ground_overlap < prev - 1e-9) ++violations;
    prev = res.ground_overlap;
  }
  // Sudden limit: overlap collapses to |<gs_P|gs_A>|^2 = 1/2.
  const AdiabaticResult sudden = adiabatic_evolve(h_a, h_p, 1e-12, 1);

  ExperimentOutput out;
  out.files.emplace_back("adiabatic.csv", csv.text());
  out.oracle_deltas["sudden_limit_error"] = std::abs(sudden.ground_overlap - 0.5);
  out.oracle_deltas["monotonicity_violations"] = violations;
  return out;
}

// ---------------------------------------------------------------------------
// grape
// ---------------------------------------------------------------------------

void validate_grape(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  const std::string task = config.parameters.value("task", "pi2x");
  if (task != "pi2x" && task != "cz-malonic")
    diag.push_back("parameters.task: unknown task '" + task + "' (pi2x | cz-malonic)");
  pc.integer("n_steps", 50, 2, 4096);
  pc.number("dt_s", 1e-5, 1e-12, 1.0);
  pc.number("omega_max_rad_s", two_pi * 25e3, 1.0, 1e12);
  pc.number("amplitude_scale", 0.1, 0.0, 1.0);
  pc.number("epsilon", 1e-9, 0.0, 1e300);
  pc.integer("max_iters", 500, 1, 1000000);
  pc.number("target_infidelity", 1e-7, 0.0, 1.0);
  pc.integer("n_starts", 1, 1, 64);
  pc.number("power_penalty", 0.0, 0.0, 1e300);
}

struct GrapeTask {
  SpinSystem system;
  cxmat target;
  std::vector<std::vector<int>> channel_targets;
};

GrapeTask make_grape_task(const std::string& task) {
  GrapeTask t;
  if (task == "pi2x") {
    t.system.spins = {{"q0", constants::gamma_1h, 0.0}};
    t.target = propagator(0.5 * pauli(PauliAxis::X), std::numbers::pi / 2.0);
    t.channel_targets = {{0}};
  } else {  // cz-malonic: the C1-Cm pair of the Table-1 system
    t.system.spins = {{"C1", constants::gamma_13c, 5693.0},
                      {"Cm", constants::gamma_13c, -3358.0}};
    Coupling c;
    c.i = 0;
    c.j = 1;
    c.kind = CouplingKind::J;
    c.j_hz = 828.0;
    t.system.couplings = {c};
    t.target = cxmat::Identity(4, 4);
    t.target(3, 3) = -1.0;
    t.channel_targets = {{0}, {1}};
  }
  return t;
}

ExperimentOutput run_grape(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  const std::string task_name = config.parameters.value("task", "pi2x");
  const int n_steps = pc.integer("n_steps", task_name == "pi2x" ? 50 : 100, 2);
  const double dt = pc.number("dt_s", 1e-5);
  const double omega_max = pc.number("omega_max_rad_s", two_pi * 25e3);
  const double amp_scale = pc.number("amplitude_scale", 0.1);
  GrapeConfig cfg;
  cfg.epsilon = pc.number("epsilon", 1e-9);
  cfg.max_iters = pc.integer("max_iters", 500, 1);
  cfg.target_infidelity = pc.number("target_infidelity", 1e-7);
  cfg.power_penalty = pc.number("power_penalty", 0.0);
  cfg.delta_phi_threshold = pc.number("delta_phi_threshold", 1e-14);
  const int n_starts = pc.integer("n_starts", 1, 1);

  const GrapeTask task = make_grape_task(task_name);
  const EnsembleSpec ens = EnsembleSpec::nominal();

  GrapeResult best;
  bool have_best = false;
  double fd_rel_error = 0.0;
  for (int start = 0; start < n_starts; ++start) {
    const PulseProgram initial = PulseProgram::random_start(
        n_steps, dt, task.channel_targets, omega_max, amp_scale,
        splitmix64(config.seed + start));
    if (start == 0) {
      // Spot-check the analytic gradient against central finite differences
      // on a few coordinates of the initial program.
      const Eigen::VectorXd g = gradient(initial, task.target, task.system, ens);
      const double h = 1e-6 * omega_max;
      double num = 0.0, den = 0.0;
      const int stride = std::max<int>(1, static_cast<int>(g.size()) / 8);
      for (int idx = 0; idx < g.size(); idx += stride) {
        // Perturb one Cartesian coordinate through the program encoding.
        auto perturb = [&](double delta) {
          PulseProgram p = initial;
          const int ch = idx / (2 * n_steps);
          const int step = (idx / 2) % n_steps;
          const bool is_y = idx % 2;
          double ux = p.channels[ch].omega_rad_s[step] *
                      std::cos(p.channels[ch].phi_rad[step]);
          double uy = p.channels[ch].omega_rad_s[step] *
                      std::sin(p.channels[ch].phi_rad[step]);
          (is_y ? uy : ux) += delta;
          p.channels[ch].omega_rad_s[step] = std::hypot(ux, uy);
          p.channels[ch].phi_rad[step] = std::atan2(uy, ux);
          return ensemble_fidelity(p, task.target, task.system, ens);
        };
        const double fd = (perturb(h) - perturb(-h)) / (2.0 * h);
        num += (g(idx) - fd) * (g(idx) - fd);
        den += fd * fd;
      }
      fd_rel_error = den > 0 ? std::sqrt(num / den) : 0.0;
    }
    GrapeResult res = grape_optimize(initial, task.target, task.system, ens, cfg);
    if (!have_best || res.final_fidelity > best.final_fidelity) {
      best = std::move(res);
      have_best = true;
    }
    if (1.0 - best.final_fidelity <= cfg.target_infidelity) break;
  }

  auto comments = base_comments(config);
  comments.push_back("task: " + task_name);
  CsvWriter trace({"iter", "phi_tot"}, comments);
  for (std::size_t i = 0; i < best.trace.size(); ++i)
    trace.add_row({static_cast<double>(i), best.trace[i]});

  ExperimentOutput out;
  out.files.emplace_back("fidelity_trace.csv", trace.text());
  out.files.emplace_back("pulse.json", best.program.to_json() + "\n");
  out.oracle_deltas["gradient_fd_rel_error"] = fd_rel_error;
  out.oracle_deltas["final_infidelity"] = 1.0 - best.final_fidelity;
  out.oracle_deltas["duration_s"] = best.program.total_time_s();
  out.oracle_deltas["iterations"] = best.iterations;
  return out;
}

// ---------------------------------------------------------------------------
// dd-bench
// ---------------------------------------------------------------------------

SequenceFamily parse_family(const std::string& name) {
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  const int arg = colon == std::string::npos
                      ? 0
                      : std::stoi(name.substr(colon + 1));
  if (kind == "free")
    return {name, [](double t) {
              DDSequence s;
              s.name = "free";
              s.total_time = t;
              s.tail_delay = t;
              return s;
            }};
  if (kind == "cpmg") return {name, [arg](double t) { return cpmg(std::max(1, arg), t); }};
  if (kind == "udd") return {name, [arg](double t) { return udd(std::max(1, arg), t); }};
  if (kind == "xy4") return {name, [](double t) { return xy4(t); }};
  if (kind == "pdd")
    return {name, [arg](double t) {
              const int reps = std::max(1, arg);
              return pdd(t / (4.0 * reps), reps);
            }};
  if (kind == "cdd")
    return {name, [arg](double t) {
              const int level = std::max(1, arg);
              return cdd(level, t / std::pow(4.0, level));
            }};
  if (kind == "qdd") return {name, [arg](double t) { return qdd(std::max(1, arg), t); }};
  if (kind == "cudd") return {name, [arg](double t) { return cudd(std::max(1, arg), t); }};
  if (kind == "kdd") return {name, [](double t) { return kdd(0.0, t); }};
  throw ConfigError("dd-bench: unknown sequence '" + name + "'");
}

void validate_dd_bench(const RunConfig& config, std::vector<std::string>& diag) {
  ParamCheck pc(config.parameters, diag);
  pc.number("sigma_rad_s", 1000.0, 0.0, 1e12);
  pc.number("tau_c_s", 0.01, 1e-12, 1e12);
  pc.integer("n_traj", 2000, 1, 10000000);
  const double t_min = pc.number("t_min_s", 1e-4, 1e-12, 1e12);
  pc.number("t_max_s", 2e-3, t_min, 1e12);
  pc.integer("n_durations", 8, 1, 4096);
  if (config.parameters.contains("sequences")) {
    if (!config.parameters["sequences"].is_array()) {
      diag.push_back("parameters.sequences: must be an array of names");
    } else {
      for (const json& s : config.parameters["sequences"]) {
        if (!s.is_string()) {
          diag.push_back("parameters.sequences: entries must be strings");
          continue;
        }
        try {
          parse_family(s.get<std::string>());
        } catch (const std::exception& e) {
          diag.push_back(std::string("parameters.sequences: ") + e.what());
        }
      }
    }
  }
}

ExperimentOutput run_dd_bench(const RunConfig& config) {
  std::vector<std::string> diag;
  ParamCheck pc(config.parameters, diag);
  NoiseModel noise;
  noise.sigma_rad_s = pc.number("sigma_rad_s", 1000.0);
  noise.tau_c_s = pc.number("tau_c_s", 0.01);
  noise.seed = config.seed;
  const int n_traj = pc.integer("n_traj", 2000, 1);
  const double t_min = pc.number("t_min_s", 1e-4);
  const double t_max = pc.number("t_max_s", 2e-3);
  const int n_durations = pc.integer("n_durations", 8, 1);

  std::vector<std::string> names = {"free", "cpmg:4", "udd:4", "xy4"};
  if (config.parameters.contains("sequences")) {
    names.clear();
    for (const json& s : config.parameters["sequences"]) names.push_back(s.get<std::string>());
  }
  std::vector<SequenceFamily> families;
  for (const std::string& n : names) families.push_back(parse_family(n));

  std::vector<double> durations(n_durations);
  for (int i = 0; i < n_durations; ++i)
    durations[i] = n_durations == 1
                       ? t_max
                       : t_min + (t_max - t_min) * i / (n_durations - 1);

  const std::vector<BenchmarkRow> rows =
      benchmark_sequences(families, noise, durations, n_traj);

  auto comments = base_comments(config);
  comments.push_back("noise: ornstein-uhlenbeck sigma_rad_s=" + csv_number(noise.sigma_rad_s) +
                     " tau_c_s=" + csv_number(noise.tau_c_s) + " n_traj=" +
                     std::to_string(n_traj));
  CsvWriter csv({"sequence", "t", "W", "stderr"}, comments);
  for (const BenchmarkRow& r : rows)
    csv.add_row(std::vector<std::string>{r.sequence, csv_number(r.t), csv_number(r.w),
                                         csv_number(r.stderr_w)});

  // Statistical sanity record: |W| may not exceed 1 beyond Monte Carlo error.
  double worst_excess = 0.0;
  for (const BenchmarkRow& r : rows)
    worst_excess = std::max(worst_excess, std::abs(r.w) - 1.0 - 5.0 * r.stderr_w);

  ExperimentOutput out;
  out.files.emplace_back("dd_bench.csv", csv.text());
  out.oracle_deltas["max_w_excess_over_unity"] = std::max(0.0, worst_excess);
  // Free-decay check against the quasi-static Gaussian when applicable.
  if (noise.tau_c_s >= 100.0 * t_max) {
    for (const SequenceFamily& fam : families) {
      if (fam.name != "free") continue;
      double max_err = 0.0;
      for (const BenchmarkRow& r : rows) {
        if (r.sequence != "free") continue;
        const double expected =
            std::exp(-0.5 * noise.sigma_rad_s * noise.sigma_rad_s * r.t * r.t);
        max_err = std::max(max_err, std::abs(r.w - expected));
      }
      out.oracle_deltas["free_decay_vs_gaussian"] = max_err;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, std::string>> kExperiments = {
    {"grape", "gradient-ascent pulse optimization (pi/2-X or malonic CZ target)"},
    {"dd-bench", "Monte Carlo coherence benchmark of decoupling sequences"},
    {"sim-ising", "three-spin frustrated Ising thermal scan (M and S over h, T)"},
    {"sim-fano", "Fano-Anderson impurity correlation G(t) and spectrum"},
    {"sim-burgers", "type-II lattice-gas solution of Burgers' equation"},
    {"sim-particle", "split-operator harmonic-oscillator wavepacket"},
    {"adiabatic", "single-qubit adiabatic X->Z sweep overlap ladder"},
};

ExperimentOutput dispatch(const RunConfig& config) {
  if (config.experiment == "sim-ising") return run_sim_ising(config);
  if (config.experiment == "sim-fano") return run_sim_fano(config);
  if (config.experiment == "sim-burgers") return run_sim_burgers(config);
  if (config.experiment == "sim-particle") return run_sim_particle(config);
  if (config.experiment == "adiabatic") return run_adiabatic(config);
  if (config.experiment == "grape") return run_grape(config);
  if (config.experiment == "dd-bench") return run_dd_bench(config);
  throw ConfigError("unknown experiment '" + config.experiment + "'");
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  RunConfig config;
  if (!root.contains("experiment") || !root["experiment"].is_string())
    throw ConfigError("config: 'experiment' string is required");
  config.experiment = root["experiment"].get<std::string>();
  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer())
      throw ConfigError("config: 'seed' must be an integer");
    config.seed = root["seed"].get<std::uint64_t>();
  }
  config.output_dir = root.value("output_dir", "");
  if (root.contains("parameters")) {
    if (!root["parameters"].is_object())
      throw ConfigError("config: 'parameters' must be an object");
    config.parameters = root["parameters"];
  }
  return config;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

json RunConfig::to_json() const {
  return json{{"experiment", experiment},
              {"seed", seed},
              {"output_dir", output_dir},
              {"parameters", parameters}};
}

json RunManifest::to_json() const {
  json outs = json::array();
  for (const OutputRecord& o : outputs)
    outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  return json{{"config", config.to_json()},
              {"versions", {{"spinsim", spinsim_version}, {"eigen", eigen_version}}},
              {"wall_time_s", wall_time_s},
              {"oracle_deltas", oracle_deltas},
              {"outputs", outs}};
}

std::vector<std::string> validate_config(const RunConfig& config) {
  std::vector<std::string> diag;
  bool known = false;
  for (const auto& [name, desc] : kExperiments)
    if (name == config.experiment) known = true;
  if (!known) {
    diag.push_back("experiment: unknown experiment '" + config.experiment + "'");
    return diag;
  }
  if (config.experiment == "sim-ising") validate_sim_ising(config, diag);
  if (config.experiment == "sim-fano") validate_sim_fano(config, diag);
  if (config.experiment == "sim-burgers") validate_sim_burgers(config, diag);
  if (config.experiment == "sim-particle") validate_sim_particle(config, diag);
  if (config.experiment == "adiabatic") validate_adiabatic(config, diag);
  if (config.experiment == "grape") validate_grape(config, diag);
  if (config.experiment == "dd-bench") validate_dd_bench(config, diag);
  return diag;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

RunManifest run(const RunConfig& config) {
  const std::vector<std::string> problems = validate_config(config);
  if (!problems.empty()) {
    std::string joined = "invalid config:";
    for (const std::string& p : problems) joined += "\n  - " + p;
    throw ConfigError(joined);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentOutput result = dispatch(config);  // compute before touching disk
  const auto t1 = std::chrono::steady_clock::now();

  std::string out_dir = config.output_dir;
  if (out_dir.empty()) {
    const char* env = std::getenv("SPINSIM_OUTPUT_DIR");
    out_dir = env ? env : ".";
  }
  fs::create_directories(out_dir);

  RunManifest manifest;
  manifest.config = config;
  manifest.spinsim_version = kVersion;
  manifest.eigen_version = std::to_string(EIGEN_WORLD_VERSION) + "." +
                           std::to_string(EIGEN_MAJOR_VERSION) + "." +
                           std::to_string(EIGEN_MINOR_VERSION);
  manifest.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  manifest.oracle_deltas = result.oracle_deltas;

  for (const auto& [name, bytes] : result.files) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("run: cannot write " + path.string());
    out << bytes;
    out.close();
    manifest.outputs.push_back({name, sha256_hex(bytes)});
  }

  // Manifest last, atomically.
  const fs::path mpath = fs::path(out_dir) / "manifest.json";
  const fs::path tmp = fs::path(out_dir) / "manifest.json.tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("run: cannot write " + tmp.string());
    out << manifest.to_json().dump(2) << "\n";
  }
  fs::rename(tmp, mpath);
  return manifest;
}

std::vector<std::pair<std::string, std::string>> list_experiments() {
  return kExperiments;
}

}  // namespace spinsim
