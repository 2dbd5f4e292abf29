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

#ifndef SPINSIM_RUNNER_HPP
#define SPINSIM_RUNNER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spinsim {

// Configuration or schema problems (CLI exit code 2); numeric failures
// surface as std::runtime_error (exit code 3).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string experiment;  // grape | dd-bench | sim-ising | sim-fano |
                           // sim-burgers | sim-particle | adiabatic
  std::uint64_t seed = 0;
  std::string output_dir;  // empty: $SPINSIM_OUTPUT_DIR, else "."
  nlohmann::json parameters = nlohmann::json::object();

  static RunConfig from_json(const std::string& text);
  static RunConfig load(const std::string& path);
  nlohmann::json to_json() const;
};

struct OutputRecord {
  std::string path;    // relative to output_dir
  std::string sha256;
};

struct RunManifest {
  RunConfig config;
  std::string spinsim_version;
  std::string eigen_version;
  double wall_time_s = 0.0;
  nlohmann::json oracle_deltas;
  std::vector<OutputRecord> outputs;

  nlohmann::json to_json() const;
};

// Schema + physics sanity diagnostics; empty means the config is runnable.
std::vector<std::string> validate_config(const RunConfig& config);

// Execute the experiment deterministically under config.seed, write the data
// files plus manifest.json (atomically, at run end) into output_dir.
// Throws ConfigError before anything is written when validate_config fails.
RunManifest run(const RunConfig& config);

// (name, one-line description) for every experiment.
std::vector<std::pair<std::string, std::string>> list_experiments();

// SHA-256 hex digest (manifest content hashes).
std::string sha256_hex(const std::string& bytes);

}  // namespace spinsim

#endif  // SPINSIM_RUNNER_HPP
