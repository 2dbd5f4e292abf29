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

#include "spinsim/spin_system.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spinsim {

using nlohmann::json;

double DipolarGeometry::theta() const {
  return std::acos(std::clamp(e.z() / e.norm(), -1.0, 1.0));
}

void DipolarGeometry::validate() const {
  if (r_m <= 0.0) throw std::invalid_argument("DipolarGeometry: r must be positive");
  if (std::abs(e.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("DipolarGeometry: e must be a unit vector");
}

HyperfineParams HyperfineParams::from_tensor(const Eigen::Matrix3d& tensor_rad_s) {
  HyperfineParams p;
  p.a_tensor = tensor_rad_s;
  p.a_zz = tensor_rad_s(2, 2);
  p.b_perp = std::hypot(tensor_rad_s(2, 0), tensor_rad_s(2, 1));
  return p;
}

HyperfineParams HyperfineParams::from_secular(double a_zz_rad_s, double b_perp_rad_s) {
  HyperfineParams p;
  p.a_zz = a_zz_rad_s;
  p.b_perp = b_perp_rad_s;
  p.validate();
  return p;
}

void HyperfineParams::validate() const {
  if (b_perp < 0.0) throw std::invalid_argument("HyperfineParams: B must be >= 0");
  if (a_tensor) {
    const double scale = std::max(1.0, a_tensor->norm());
    if (std::abs((*a_tensor)(2, 2) - a_zz) > 1e-9 * scale ||
        std::abs(std::hypot((*a_tensor)(2, 0), (*a_tensor)(2, 1)) - b_perp) >
            1e-9 * scale)
      throw std::invalid_argument(
          "HyperfineParams: (A, B) scalars inconsistent with tensor");
  }
}

void SpinSystem::validate() const {
  if (spins.empty()) throw std::invalid_argument("SpinSystem: no spins");
  std::set<std::string> labels;
  for (const Spin& s : spins)
    if (!labels.insert(s.label).second)
      throw std::invalid_argument("SpinSystem: duplicate spin label '" + s.label + "'");
  for (const Coupling& c : couplings) {
    if (c.i == c.j)
      throw std::invalid_argument("SpinSystem: coupling indices must be distinct");
    if (c.i < 0 || c.j < 0 || c.i >= n_spins() || c.j >= n_spins())
      throw std::invalid_argument("SpinSystem: coupling index out of range");
    if (c.kind == CouplingKind::Dipolar) c.geometry.validate();
    if (c.kind == CouplingKind::Hyperfine) c.hyperfine.validate();
  }
}

namespace {

json matrix3_to_json(const Eigen::Matrix3d& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return rows;
}

Eigen::Matrix3d matrix3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("SpinSystem: 3x3 tensor expected");
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3)
      throw std::invalid_argument("SpinSystem: 3x3 tensor expected");
    for (int c = 0; c < 3; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

constexpr double two_pi = 6.283185307179586476925286766559;

}  // namespace

std::string SpinSystem::to_json() const {
  validate();
  json root;
  root["units"] = {{"offset", "Hz"},
                   {"coupling", "Hz"},
                   {"gyromagnetic_ratio", "rad/(s*T)"}};
  root["spins"] = json::array();
  for (const Spin& s : spins)
    root["spins"].push_back({{"label", s.label},
                             {"gyromagnetic_ratio", s.gyromagnetic_ratio},
                             {"offset_hz", s.offset_hz}});
  root["couplings"] = json::array();
  for (const Coupling& c : couplings) {
    json jc = {{"i", c.i}, {"j", c.j}};
    switch (c.kind) {
      case CouplingKind::J:
        jc["kind"] = "J";
        if (c.j_tensor_hz)
          jc["j_tensor_hz"] = matrix3_to_json(*c.j_tensor_hz);
        else
          jc["j_hz"] = c.j_hz;
        break;
      case CouplingKind::Dipolar:
        jc["kind"] = "dipolar";
        jc["r_m"] = c.geometry.r_m;
        jc["e"] = {c.geometry.e.x(), c.geometry.e.y(), c.geometry.e.z()};
        break;
      case CouplingKind::Hyperfine:
        jc["kind"] = "hyperfine";
        if (c.hyperfine.a_tensor) {
          jc["a_tensor_hz"] = matrix3_to_json(*c.hyperfine.a_tensor / two_pi);
        } else {
          jc["a_zz_hz"] = c.hyperfine.a_zz / two_pi;
          jc["b_perp_hz"] = c.hyperfine.b_perp / two_pi;
        }
        break;
    }
    root["couplings"].push_back(jc);
  }
  return root.dump(2);
}

SpinSystem SpinSystem::from_json(const std::string& text) {
  json root = json::parse(text);
  if (!root.contains("units"))
    throw std::invalid_argument("SpinSystem: mandatory 'units' field missing");
  if (root["units"].value("offset", "") != "Hz" ||
      root["units"].value("coupling", "") != "Hz")
    throw std::invalid_argument("SpinSystem: unsupported units; offsets and couplings must be Hz");

  SpinSystem sys;
  for (const json& js : root.at("spins")) {
    Spin s;
    s.label = js.at("label").get<std::string>();
    s.gyromagnetic_ratio = js.value("gyromagnetic_ratio", 0.0);
    s.offset_hz = js.at("offset_hz").get<double>();
    sys.spins.push_back(s);
  }
  for (const json& jc : root.value("couplings", json::array())) {
    Coupling c;
    c.i = jc.at("i").get<int>();
    c.j = jc.at("j").get<int>();
    const std::string kind = jc.at("kind").get<std::string>();
    if (kind == "J") {
      c.kind = CouplingKind::J;
      if (jc.contains("j_tensor_hz"))
        c.j_tensor_hz = matrix3_from_json(jc["j_tensor_hz"]);
      else
        c.j_hz = jc.at("j_hz").get<double>();
    } else if (kind == "dipolar") {
      c.kind = CouplingKind::Dipolar;
      c.geometry.r_m = jc.at("r_m").get<double>();
      const json& e = jc.at("e");
      c.geometry.e = Eigen::Vector3d(e[0].get<double>(), e[1].get<double>(),
                                     e[2].get<double>());
    } else if (kind == "hyperfine") {
      c.kind = CouplingKind::Hyperfine;
      if (jc.contains("a_tensor_hz"))
        c.hyperfine = HyperfineParams::from_tensor(
            matrix3_from_json(jc["a_tensor_hz"]) * two_pi);
      else
        c.hyperfine = HyperfineParams::from_secular(
            jc.at("a_zz_hz").get<double>() * two_pi,
            jc.at("b_perp_hz").get<double>() * two_pi);
    } else {
      throw std::invalid_argument("SpinSystem: unknown coupling kind '" + kind + "'");
    }
    sys.couplings.push_back(c);
  }
  sys.validate();
  return sys;
}

SpinSystem SpinSystem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("SpinSystem: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void SpinSystem::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("SpinSystem: cannot write " + path);
  out << to_json() << "\n";
}

}  // namespace spinsim
