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

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinsim/runner.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericError = 3;

void print_error_record(const std::string& kind, const std::string& message) {
  nlohmann::json record{{"error", kind}, {"message", message}};
  std::cerr << record.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinsim: spin-system simulation and optimal-control experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  bool have_seed = false;
  std::uint64_t seed_override = 0;

  CLI::App* run_cmd = app.add_subcommand("run", "execute an experiment config");
  run_cmd->add_option("config", config_path, "JSON run configuration")->required();
  run_cmd->add_option("--output-dir", output_dir, "override the config output_dir");
  run_cmd->add_option("--seed", seed_override, "override the config seed")
      ->each([&](const std::string&) { have_seed = true; });

  std::string validate_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a config without running it");
  validate_cmd->add_option("config", validate_path, "JSON run configuration")->required();

  CLI::App* list_cmd = app.add_subcommand("list-experiments", "list experiment names");

  CLI11_PARSE(app, argc, argv);

  if (list_cmd->parsed()) {
    for (const auto& [name, desc] : spinsim::list_experiments())
      std::cout << name << "  -  " << desc << "\n";
    return 0;
  }

  if (validate_cmd->parsed()) {
    try {
      const spinsim::RunConfig config = spinsim::RunConfig::load(validate_path);
      const std::vector<std::string> diag = spinsim::validate_config(config);
      for (const std::string& d : diag) std::cout << d << "\n";
      if (!diag.empty()) return kExitConfigError;
      std::cout << "ok\n";
      return 0;
    } catch (const spinsim::ConfigError& e) {
      print_error_record("config", e.what());
      return kExitConfigError;
    } catch (const std::exception& e) {
      print_error_record("internal", e.what());
      return kExitNumericError;
    }
  }

  // run
  try {
    spinsim::RunConfig config = spinsim::RunConfig::load(config_path);
    if (!output_dir.empty()) config.output_dir = output_dir;
    if (have_seed) config.seed = seed_override;
    const spinsim::RunManifest manifest = spinsim::run(config);
    std::cout << "wrote " << manifest.outputs.size() << " output file(s) + manifest.json"
              << "\n";
    for (const auto& [key, value] : manifest.oracle_deltas.items())
      std::cout << "  " << key << " = " << value.dump() << "\n";
    return 0;
  } catch (const spinsim::ConfigError& e) {
    print_error_record("config", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    print_error_record("numeric", e.what());
    // Flag the failed run in the output directory when one was requested.
    try {
      std::string dir = output_dir;
      if (dir.empty()) {
        const char* env = std::getenv("SPINSIM_OUTPUT_DIR");
        dir = env ? env : "";
      }
      if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        std::ofstream out(std::filesystem::path(dir) / "error.json");
        out << nlohmann::json{{"error", "numeric"}, {"message", e.what()}}.dump(2)
            << "\n";
      }
    } catch (...) {
    }
    return kExitNumericError;
  }
}
