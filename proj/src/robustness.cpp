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

#include "paulicert/robustness.hpp"

#include <cmath>
#include <stdexcept>

namespace paulicert {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

double lemma1_state_bound(double epsilon) {
  if (epsilon < 0.0) {
    throw std::invalid_argument("lemma1_state_bound: epsilon must be >= 0");
  }
  return (55.0 + 36.0 * kSqrt2) * std::sqrt(epsilon);
}

std::array<double, 3> anticommutator_bounds(double epsilon) {
  const double root = std::sqrt(epsilon);
  return {(4.0 + 4.0 * kSqrt2) * root, (6.0 + 6.0 * kSqrt2) * root,
          (8.0 + 8.0 * kSqrt2) * root};
}

NoisySelftest noisy_qubit_selftest(double epsilon_target) {
  if (epsilon_target < 0.0 || epsilon_target > kTripleChshMax) {
    throw std::invalid_argument("noisy_qubit_selftest: unreachable epsilon");
  }
  const double v = 1.0 - epsilon_target / kTripleChshMax;

  // Purify the Werner state over the Bell basis; the purifying register
  // (dimension 4) rides on Alice's side.
  const double weights[4] = {v + (1.0 - v) / 4.0, (1.0 - v) / 4.0,
                             (1.0 - v) / 4.0, (1.0 - v) / 4.0};
  Vector amps = Vector::Zero(16);
  for (int k = 0; k < 4; ++k) {
    const Vector bell = bell_state(k).amps;
    const double root = std::sqrt(weights[k]);
    for (Index ca = 0; ca < 4; ++ca) {
      amps(ca * 4 + k) += root * bell(ca);
    }
  }

  const Strategy ideal = ideal_qubit_strategy();
  NoisySelftest out;
  out.visibility = v;
  out.strategy.state = StateVector(std::move(amps), {2, 2, 4});
  out.strategy.charlie_factors = 1;
  out.strategy.charlie = ideal.charlie;
  // Alice's effects extended by identity on the purifying register.
  out.strategy.alice.setting_labels = ideal.alice.setting_labels;
  out.strategy.alice.outcome_labels = ideal.alice.outcome_labels;
  for (const auto& setting : ideal.alice.effects) {
    std::vector<Matrix> effects;
    for (const Matrix& e : setting) effects.push_back(kron(e, identity(4)));
    out.strategy.alice.effects.push_back(std::move(effects));
  }
  out.sos = sos_residuals(out.strategy);
  return out;
}

double worst_case_I_penalty(double theta) {
  if (theta < 0.0) {
    throw std::invalid_argument("worst_case_I_penalty: theta must be >= 0");
  }
  const double u = kSqrt2 * theta + theta * theta;
  return 12.0 * (u * u + u);
}

double expected_I_werner(double eta, double p) {
  if (eta < 0.0 || eta > 1.0 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("expected_I_werner: parameters must be in [0,1]");
  }
  return ((1.0 - 3.0 * p) * eta * eta + 2.0 * eta * (1.0 - eta) +
          0.25 * (1.0 - eta) * (1.0 - eta)) / 16.0;
}

double simulated_I_werner(double eta, double p) {
  if (eta < 0.0 || eta > 1.0 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("simulated_I_werner: parameters must be in [0,1]");
  }
  return ((1.0 - 3.0 * p) * eta * eta + 2.0 * eta * (1.0 - eta) +
          (1.0 - eta) * (1.0 - eta)) / 16.0;
}

double critical_theta(double eta, double p) {
  const double I = expected_I_werner(eta, p);
  if (I >= 0.0) return 0.0;
  const double m = -I;
  // 12 (u^2 + u) = m  =>  u = (-1 + sqrt(1 + m/3)) / 2
  const double u = 0.5 * (-1.0 + std::sqrt(1.0 + m / 3.0));
  // theta^2 + sqrt(2) theta = u  =>  theta = -sqrt(2)/2 + sqrt(1/2 + u)
  const double theta = -kSqrt2 / 2.0 + std::sqrt(0.5 + u);

  // Bisection cross-check (the penalty is strictly increasing).
  double lo = 0.0, hi = 1.0;
  while (worst_case_I_penalty(hi) < m) hi *= 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (worst_case_I_penalty(mid) < m ? lo : hi) = mid;
  }
  if (std::abs(theta - 0.5 * (lo + hi)) > 1e-9) {
    throw std::logic_error("critical_theta: closed form and bisection disagree");
  }
  return theta;
}

std::vector<double> uniform_grid(double eta_min, double eta_max, int steps) {
  std::vector<double> grid;
  if (steps <= 1) {
    grid.push_back(eta_min);
    return grid;
  }
  for (int i = 0; i < steps; ++i) {
    grid.push_back(eta_min + (eta_max - eta_min) * i / (steps - 1));
  }
  return grid;
}

std::vector<RobustnessCurvePoint> robustness_curve(double p,
                                                   const std::vector<double>& eta_grid) {
  std::vector<RobustnessCurvePoint> curve;
  for (double eta : eta_grid) {
    curve.push_back({eta, expected_I_werner(eta, p), critical_theta(eta, p)});
  }
  return curve;
}

}  // namespace paulicert
