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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "paulicert/io.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the driver with the given arguments; `env` is prepended verbatim
/// (e.g. "FOO=1 "). Captures stdout only; stderr goes to /dev/null.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string out_path = "cli_test_stdout_" + std::to_string(counter++) + ".txt";
  const std::string cmd = env + std::string(PAULICERT_CLI_PATH) + " " + args +
                          " > " + out_path + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("ideal selftest passes with the maximal Bell value") {
  const CliResult r = run_cli("selftest --epsilon 0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["metrics"]["bell_value"]) ==
        doctest::Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(double(j["metrics"]["extraction_fidelity"]) ==
        doctest::Approx(1.0).epsilon(1e-10));
  for (const auto& v : j["verdicts"]) CHECK(v["pass"] == true);
}

TEST_CASE("noisy selftest reports the requested deficit") {
  const CliResult r = run_cli("selftest --epsilon 0.001");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["metrics"]["epsilon"]) == doctest::Approx(0.001).epsilon(1e-9));
}

TEST_CASE("certify exit codes track the verdict") {
  const CliResult pass = run_cli("certify --n 1 --p 0.6 --eta 1.0");
  CHECK(pass.exit_code == 0);
  const auto j = nlohmann::json::parse(pass.out);
  CHECK(double(j["metrics"]["certification_value"]) ==
        doctest::Approx(-0.05).epsilon(1e-12));
  bool certified = false;
  for (const auto& v : j["verdicts"]) {
    if (v["name"] == "entanglement-certified") certified = v["pass"];
  }
  CHECK(certified);

  // Separable region: the run completes but the certification verdict fails.
  const CliResult fail = run_cli("certify --n 1 --p 0.2 --eta 1.0");
  CHECK(fail.exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("--no-such-flag").exit_code == 2);
  CHECK(run_cli("selftest --epsilon not-a-number").exit_code == 2);
  CHECK(run_cli("certify --p 1.7").exit_code == 2);  // out-of-range Werner parameter
  CHECK(run_cli("parallel-selftest --n 9").exit_code == 2);
}

TEST_CASE("help is not an error") {
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("the resource cap environment variable yields exit code 3") {
  CHECK(run_cli("parallel-selftest --n 3", "PAULI_SELFTEST_MAX_QUBITS=2 ").exit_code == 3);
  CHECK(run_cli("parallel-selftest --n 2", "PAULI_SELFTEST_MAX_QUBITS=2 ").exit_code == 0);
}

TEST_CASE("identical config and seed produce byte-identical reports") {
  const CliResult a = run_cli("certify --n 1 --p 0.6 --eta 0.9 --seed 7");
  const CliResult b = run_cli("certify --n 1 --p 0.6 --eta 0.9 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  const CliResult c = run_cli("robust-curve --p 0.6 --eta-min 0.7 --eta-max 1.0 --steps 31");
  const CliResult d = run_cli("robust-curve --p 0.6 --eta-min 0.7 --eta-max 1.0 --steps 31");
  CHECK(c.out == d.out);
}

TEST_CASE("robust-curve defaults to CSV with zero theta below the threshold") {
  const CliResult r = run_cli("robust-curve --p 0.6 --eta-min 0.70 --eta-max 1.0 --steps 31");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "eta,expected_I,theta_crit");
  int rows = 0;
  while (std::getline(lines, line)) {
    const size_t first = line.find(',');
    const size_t last = line.rfind(',');
    REQUIRE(first != std::string::npos);
    const double eta = std::stod(line.substr(0, first));
    const double theta = std::stod(line.substr(last + 1));
    if (eta <= 0.7237) CHECK(theta == 0.0);
    if (eta > 0.7247) CHECK(theta > 0.0);
    ++rows;
  }
  CHECK(rows == 31);
  // JSON on request.
  const CliResult j = run_cli(
      "robust-curve --p 0.6 --eta-min 0.70 --eta-max 1.0 --steps 5 --format json");
  CHECK(nlohmann::json::parse(j.out)["metrics"]["points"].size() == 5);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "cli_test_report.csv";
  const CliResult r =
      run_cli("robust-curve --p 0.6 --eta-min 0.9 --eta-max 1.0 --steps 3 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const std::string contents = slurp(path);
  CHECK(contents.rfind("eta,expected_I,theta_crit", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("witness files round-trip through the certify command") {
  using namespace paulicert;
  const std::string path = "cli_test_witness.json";
  save_witness(decompose_witness(isotropic_witness_matrix(), 1), path);

  const CliResult ok = run_cli("certify --p 0.6 --witness-file " + path);
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(double(j["metrics"]["certification_value"]) ==
        doctest::Approx(-0.05).epsilon(1e-12));

  // Corrupt one coefficient: the reconstruction invariant must reject it.
  nlohmann::json raw = nlohmann::json::parse(slurp(path));
  raw["omega"][0]["value"] = double(raw["omega"][0]["value"]) + 0.25;
  {
    std::ofstream f(path);
    f << raw.dump(2);
  }
  CHECK(run_cli("certify --p 0.6 --witness-file " + path).exit_code == 2);

  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(run_cli("certify --p 0.6 --witness-file " + path).exit_code == 2);
  std::remove(path.c_str());

  CHECK(run_cli("certify --p 0.6 --witness-file does_not_exist.json").exit_code == 2);
}
