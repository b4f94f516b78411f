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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "paulicert/certify.hpp"
#include "paulicert/parallel.hpp"
#include "paulicert/robustness.hpp"

// Batch experiment driver: configure a protocol run, execute it, emit a
// machine-readable report.  Reports are deterministic for a fixed
// configuration and seed (timing goes to stderr, never into the report).
namespace paulicert::cli {

struct ExperimentConfig {
  std::string command;  // selftest | parallel-selftest | certify | robust-curve
  int n = 1;
  double epsilon = 0.0;
  double eta = 1.0;
  double p = 0.6;
  std::string witness_file;
  std::uint64_t seed = 42;
  std::string out_format;  // json | csv; empty = command default
  std::string out_path;    // empty = stdout
  double eta_min = 0.7;
  double eta_max = 1.0;
  int steps = 31;
  bool export_correlations = false;
  int max_circuit_sites = 3;  // full-circuit cap; env override
};

struct Verdict {
  std::string name;
  bool pass = false;
};

struct RunReport {
  nlohmann::json config;
  nlohmann::json metrics;
  std::vector<Verdict> verdicts;
  std::string csv_body;  // robust-curve payload when format is csv

  bool all_pass() const;
  nlohmann::json to_json() const;
};

enum class RunStatus : int {
  Pass = 0,
  VerdictFailure = 1,
  Usage = 2,
  ResourceCap = 3,
};

/// Executes one experiment.  Throws nothing; configuration problems and
/// resource-cap violations are reported through the status code, with a
/// human-readable message appended to report.metrics["error"].
RunStatus run(const ExperimentConfig& config, RunReport& report);

/// Renders the report in the effective format ("json" or "csv").
std::string render_report(const ExperimentConfig& config, const RunReport& report);

/// Reads the circuit cap from PAULI_SELFTEST_MAX_QUBITS (falls back to 3).
int max_circuit_sites_from_env();

}  // namespace paulicert::cli
