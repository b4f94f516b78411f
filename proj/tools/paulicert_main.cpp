// Copyright 2026 The paulicert developers
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

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "paulicert/cli.hpp"

namespace {

int emit(const paulicert::cli::ExperimentConfig& config,
         const paulicert::cli::RunReport& report) {
  const std::string body = paulicert::cli::render_report(config, report);
  if (config.out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(config.out_path);
  if (!out) {
    std::cerr << "error: cannot open " << config.out_path << " for writing\n";
    return 1;
  }
  out << body;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using paulicert::cli::ExperimentConfig;
  using paulicert::cli::RunReport;
  using paulicert::cli::RunStatus;

  CLI::App app{"Self-testing and network entanglement-certification workbench"};
  app.require_subcommand(1);

  ExperimentConfig config;
  config.max_circuit_sites = paulicert::cli::max_circuit_sites_from_env();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "RNG seed for stochastic searches");
    cmd->add_option("--format", config.out_format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", config.out_path, "Output path (default: stdout)");
  };

  CLI::App* selftest = app.add_subcommand("selftest", "Single-copy self-test run");
  selftest->add_option("--epsilon", config.epsilon, "Bell-value deficit to realize")
      ->check(CLI::NonNegativeNumber);
  add_common(selftest);

  CLI::App* parallel =
      app.add_subcommand("parallel-selftest", "n-copy parallel self-test run");
  parallel->add_option("--n", config.n, "Number of copies (1..4)");
  add_common(parallel);

  CLI::App* certify = app.add_subcommand("certify", "Network certification run");
  certify->add_option("--n", config.n, "Copies per side of the target");
  certify->add_option("--p", config.p, "Werner parameter of the target state");
  certify->add_option("--eta", config.eta, "Visibility of the auxiliary states");
  certify->add_option("--witness-file", config.witness_file, "Witness JSON file");
  certify->add_flag("--correlations", config.export_correlations,
                    "Include the full correlation table in the report");
  add_common(certify);

  CLI::App* curve = app.add_subcommand("robust-curve", "Critical-radius curve");
  curve->add_option("--p", config.p, "Werner parameter of the target state");
  curve->add_option("--eta-min", config.eta_min, "Grid start");
  curve->add_option("--eta-max", config.eta_max, "Grid end");
  curve->add_option("--steps", config.steps, "Number of grid points");
  add_common(curve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors (help exits 0)
  }

  config.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  const RunStatus status = paulicert::cli::run(config, report);
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

  if (emit(config, report) != 0) return 2;
  std::cerr << "wall-time: " << wall.count() << " s\n";
  if (report.metrics.contains("error")) {
    std::cerr << "error: " << report.metrics["error"].get<std::string>() << "\n";
  }
  return static_cast<int>(status);
}
