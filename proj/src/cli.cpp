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

#include "paulicert/cli.hpp"

#include <cmath>
#include <cstdlib>

#include "paulicert/io.hpp"

namespace paulicert::cli {

using nlohmann::json;

namespace {

json config_echo(const ExperimentConfig& c) {
  json j;
  j["command"] = c.command;
  j["n"] = c.n;
  j["epsilon"] = c.epsilon;
  j["eta"] = c.eta;
  j["p"] = c.p;
  j["seed"] = c.seed;
  if (!c.witness_file.empty()) j["witness_file"] = c.witness_file;
  if (c.command == "robust-curve") {
    j["eta_min"] = c.eta_min;
    j["eta_max"] = c.eta_max;
    j["steps"] = c.steps;
  }
  return j;
}

void add_verdict(RunReport& report, const std::string& name, bool pass) {
  report.verdicts.push_back({name, pass});
}

RunStatus run_selftest(const ExperimentConfig& config, RunReport& report) {
  Strategy strategy;
  double epsilon_target = config.epsilon;
  if (epsilon_target == 0.0) {
    strategy = ideal_qubit_strategy();
  } else {
    strategy = noisy_qubit_selftest(epsilon_target).strategy;
  }
  const SosReport sos = sos_residuals(strategy);
  const auto anti = anticommutator_norms(strategy);
  const auto bounds = anticommutator_bounds(std::max(sos.epsilon, 0.0));
  const SwapResult swap = swap_isometry(strategy, 1e-6 + epsilon_target);

  report.metrics["bell_value"] = sos.bell_value;
  report.metrics["epsilon"] = sos.epsilon;
  report.metrics["sos_residuals"] = sos.residuals;
  report.metrics["anticommutator_norms"] = {anti[0], anti[1], anti[2]};
  report.metrics["anticommutator_bounds"] = {bounds[0], bounds[1], bounds[2]};
  report.metrics["extraction_fidelity"] = swap.extracted_fidelity;
  report.metrics["junk_branch_weights"] = swap.junk.branch_weights;
  report.metrics["junk_off_diagonal_residual"] = swap.junk.off_diagonal_residual;

  double sos_sum = 0.0;
  for (double r : sos.residuals) sos_sum += r * r;
  add_verdict(report, "bell-deficit-matches-target",
              std::abs(sos.epsilon - epsilon_target) <= 1e-9);
  add_verdict(report, "sos-residuals-match-deficit",
              std::abs(sos_sum - 2.0 * sos.epsilon) <= 1e-8);
  add_verdict(report, "anticommutators-within-bounds",
              anti[0] <= bounds[0] + 1e-12 && anti[1] <= bounds[1] + 1e-12 &&
                  anti[2] <= bounds[2] + 1e-12);
  if (epsilon_target == 0.0) {
    const Lemma1Report actions = verify_lemma1_actions(strategy);
    report.metrics["reference_action_residuals"] = actions.residuals;
    add_verdict(report, "bell-value-maximal",
                std::abs(sos.bell_value - kTripleChshMax) <= 1e-9);
    add_verdict(report, "extraction-fidelity-unit",
                std::abs(swap.extracted_fidelity - 1.0) <= 1e-9);
    add_verdict(report, "junk-two-branch-form",
                swap.junk.off_diagonal_residual <= 1e-9);
    add_verdict(report, "reference-actions-exact", actions.max_residual <= 1e-9);
  }
  return report.all_pass() ? RunStatus::Pass : RunStatus::VerdictFailure;
}

RunStatus run_parallel(const ExperimentConfig& config, RunReport& report) {
  const int n = config.n;
  if (n < 1 || n > 4) {
    report.metrics["error"] = "parallel-selftest requires 1 <= n <= 4";
    return RunStatus::Usage;
  }
  const Strategy strategy = parallel_strategy(n);
  const std::vector<double> bells = parallel_bell_values(strategy, n);
  report.metrics["bell_values"] = bells;
  double bell_dev = 0.0;
  for (double b : bells) bell_dev = std::max(bell_dev, std::abs(b - kTripleChshMax));
  add_verdict(report, "per-site-bell-maximal", bell_dev <= 1e-9);

  if (n >= 2) {
    const BsmCorrelationReport bsm = bsm_correlations(strategy, n);
    report.metrics["bsm_max_deviation"] = bsm.max_deviation;
    add_verdict(report, "alignment-table-matched", bsm.max_deviation <= 1e-9);
    std::vector<double> identity_residuals;
    for (int l = 1; l <= n / 2; ++l) {
      const auto r = bsm_identity_residuals(strategy, n, l);
      identity_residuals.push_back(r[0]);
      identity_residuals.push_back(r[1]);
      add_verdict(report, "pair-projector-identities-l" + std::to_string(l),
                  r[0] <= 1e-9 && r[1] <= 1e-9);
    }
    report.metrics["pair_identity_residuals"] = identity_residuals;
  }

  // Sharp-vs-effective and cross-site commutation spot checks.
  double spot = 0.0;
  for (int site = 0; site < n; ++site) {
    for (int axis = 1; axis <= 3; ++axis) {
      spot = std::max(spot, sharp_vs_effective_residual(strategy, n, site, axis));
    }
  }
  if (n >= 2) {
    spot = std::max(spot, cross_site_commutation_residual(strategy, n, 0, 1, 1, 3));
  }
  report.metrics["operator_relation_residual"] = spot;
  add_verdict(report, "operator-relations-hold", spot <= 1e-9);

  const bool circuit_wanted = n <= 3;
  if (circuit_wanted && n > config.max_circuit_sites) {
    report.metrics["error"] =
        "extraction circuit for n=" + std::to_string(n) +
        " exceeds the configured cap (raise PAULI_SELFTEST_MAX_QUBITS)";
    return RunStatus::ResourceCap;
  }
  if (n <= config.max_circuit_sites) {
    const Index max_dim = Index{1} << (6 * config.max_circuit_sites);
    try {
      const ParallelSwapResult swap = parallel_swap_isometry(strategy, n, 0, max_dim);
      report.metrics["fidelities"] = swap.fidelities;
      report.metrics["junk_branch_weights"] = swap.junk.branch_weights;
      report.metrics["junk_off_diagonal_residual"] = swap.junk.off_diagonal_residual;
      double fid_dev = 0.0;
      for (double f : swap.fidelities) fid_dev = std::max(fid_dev, std::abs(f - 1.0));
      add_verdict(report, "extraction-fidelities-unit", fid_dev <= 1e-9);
      add_verdict(report, "junk-diagonal-branches",
                  swap.junk.off_diagonal_residual <= 1e-9);
      if (n >= 2) {
        const Lemma3Report l3 = verify_lemma3(strategy, n);
        report.metrics["two_term_residual"] = l3.two_term_residual;
        add_verdict(report, "alignment-implies-two-branch-junk",
                    l3.applicable && l3.aligned);
      }
    } catch (const resource_cap_error& e) {
      report.metrics["error"] = e.what();
      return RunStatus::ResourceCap;
    }
  } else {
    report.metrics["note"] = "circuit skipped (spot-check invariants only at this size)";
  }
  return report.all_pass() ? RunStatus::Pass : RunStatus::VerdictFailure;
}

RunStatus run_certify(const ExperimentConfig& config, RunReport& report) {
  Witness wit;
  int n = config.n;
  if (!config.witness_file.empty()) {
    wit = load_witness(config.witness_file);
    n = wit.n;
    if (config.n != 1 && config.n != wit.n) {
      report.metrics["error"] = "witness arity does not match --n";
      return RunStatus::Usage;
    }
  } else {
    Matrix w = isotropic_witness_matrix();
    Matrix full = w;
    for (int i = 1; i < n; ++i) full = kron(full, w);
    if (n > 1) {
      // Reorder from (A1 B1 A2 B2 ...) to (A1 A2 ... B1 B2 ...).
      std::vector<Index> perm;
      for (int i = 0; i < n; ++i) perm.push_back(2 * i);
      for (int i = 0; i < n; ++i) perm.push_back(2 * i + 1);
      full = permute_factors(full, perm, std::vector<Index>(2 * n, 2));
    }
    wit = decompose_witness(full, n);
  }

  // Target: Werner(p) per copy.
  Matrix target = werner_state(config.p);
  for (int i = 1; i < n; ++i) target = kron(target, werner_state(config.p));
  if (n > 1) {
    std::vector<Index> perm;
    for (int i = 0; i < n; ++i) perm.push_back(2 * i);
    for (int i = 0; i < n; ++i) perm.push_back(2 * i + 1);
    target = permute_factors(target, perm, std::vector<Index>(2 * n, 2));
  }

  if (config.eta < 1.0 && n != 1) {
    report.metrics["error"] = "noisy auxiliaries are supported for n=1 only";
    return RunStatus::Usage;
  }
  const NetworkStrategy ns = config.eta < 1.0 ? noisy_network(target, config.eta)
                                              : ideal_network(target, n);
  const double I = certification_value(ns, wit);
  const double d4 = std::pow(4.0, 2 * n);
  report.metrics["certification_value"] = I;

  if (config.eta >= 1.0) {
    const double expected = std::real((wit.matrix * target).trace()) / d4;
    report.metrics["expected_value"] = expected;
    add_verdict(report, "network-consistency", std::abs(I - expected) <= 1e-9);
  } else if (config.witness_file.empty()) {
    const double expected = simulated_I_werner(config.eta, config.p);
    report.metrics["expected_value"] = expected;
    report.metrics["conservative_bound_value"] = expected_I_werner(config.eta, config.p);
    add_verdict(report, "network-consistency", std::abs(I - expected) <= 1e-10);
  }
  add_verdict(report, "entanglement-certified", I < 0.0);

  if (config.export_correlations) {
    report.metrics["correlations"] = network_correlation_records(ns);
  }
  return report.all_pass() ? RunStatus::Pass : RunStatus::VerdictFailure;
}

RunStatus run_curve(const ExperimentConfig& config, RunReport& report) {
  if (config.steps < 1 || config.eta_min < 0.0 || config.eta_max > 1.0 ||
      config.eta_min > config.eta_max) {
    report.metrics["error"] = "invalid eta grid";
    return RunStatus::Usage;
  }
  const auto curve =
      robustness_curve(config.p, uniform_grid(config.eta_min, config.eta_max, config.steps));
  json points = json::array();
  bool nonneg = true, relation = true;
  double prev = -1.0;
  bool nondecreasing = true;
  for (const RobustnessCurvePoint& pt : curve) {
    points.push_back({{"eta", pt.eta},
                      {"expected_I", pt.expected_I},
                      {"theta_crit", pt.theta_crit}});
    nonneg = nonneg && pt.theta_crit >= 0.0;
    nondecreasing = nondecreasing && pt.theta_crit >= prev - 1e-15;
    prev = pt.theta_crit;
    if (pt.theta_crit > 0.0) {
      relation = relation && std::abs(pt.expected_I +
                                      worst_case_I_penalty(pt.theta_crit)) <= 1e-12;
    } else {
      relation = relation && pt.expected_I >= -1e-15;
    }
  }
  report.metrics["points"] = std::move(points);
  report.csv_body = curve_to_csv(curve);
  add_verdict(report, "theta-nonnegative", nonneg);
  add_verdict(report, "theta-nondecreasing", nondecreasing);
  add_verdict(report, "critical-relation-holds", relation);
  return report.all_pass() ? RunStatus::Pass : RunStatus::VerdictFailure;
}

}  // namespace

bool RunReport::all_pass() const {
  for (const Verdict& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

json RunReport::to_json() const {
  json j;
  j["config"] = config;
  j["metrics"] = metrics;
  json verdict_list = json::array();
  for (const Verdict& v : verdicts) {
    verdict_list.push_back({{"name", v.name}, {"pass", v.pass}});
  }
  j["verdicts"] = std::move(verdict_list);
  return j;
}

int max_circuit_sites_from_env() {
  const char* env = std::getenv("PAULI_SELFTEST_MAX_QUBITS");
  if (env == nullptr) return 3;
  const int value = std::atoi(env);
  return value >= 1 ? value : 3;
}

RunStatus run(const ExperimentConfig& config, RunReport& report) {
  report.config = config_echo(config);
  try {
    if (config.command == "selftest") return run_selftest(config, report);
    if (config.command == "parallel-selftest") return run_parallel(config, report);
    if (config.command == "certify") return run_certify(config, report);
    if (config.command == "robust-curve") return run_curve(config, report);
    report.metrics["error"] = "unknown command: " + config.command;
    return RunStatus::Usage;
  } catch (const resource_cap_error& e) {
    report.metrics["error"] = e.what();
    return RunStatus::ResourceCap;
  } catch (const std::exception& e) {
    report.metrics["error"] = e.what();
    return RunStatus::Usage;
  }
}

std::string render_report(const ExperimentConfig& config, const RunReport& report) {
  std::string format = config.out_format;
  if (format.empty()) {
    format = config.command == "robust-curve" ? "csv" : "json";
  }
  if (format == "csv" && !report.csv_body.empty()) return report.csv_body;
  return report.to_json().dump(2) + "\n";
}

}  // namespace paulicert::cli
