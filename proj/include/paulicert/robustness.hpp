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

#include <vector>

#include "paulicert/selftest.hpp"

// Closed-form noise-robustness bounds for the single-copy self-test and
// the Werner-state analysis of the certification functional, including
// the critical self-testing radius curve.
namespace paulicert {

struct NoiseModel {
  double eta = 1.0;      // visibility of the auxiliary Werner states
  double epsilon = 0.0;  // Bell-value deficit 6 sqrt(2) - <B>
  double theta = 0.0;    // self-testing vector-norm radius
};

struct RobustnessCurvePoint {
  double eta = 0.0;
  double expected_I = 0.0;
  double theta_crit = 0.0;
};

/// (55 + 36 sqrt(2)) sqrt(eps): distance bound between the circuit output
/// and the ideal junk (x) |Phi+> at Bell deficit eps.
double lemma1_state_bound(double epsilon);

/// Anti-commutator bounds at deficit eps: {Z,X} <= (4+4 sqrt(2)) sqrt(eps),
/// {Z,Y} <= (6+6 sqrt(2)) sqrt(eps), {X,Y} <= (8+8 sqrt(2)) sqrt(eps).
std::array<double, 3> anticommutator_bounds(double epsilon);

struct NoisySelftest {
  Strategy strategy;   // purified Werner state, ideal measurements
  SosReport sos;
  double visibility = 1.0;
};

/// A concrete strategy achieving Bell value 6 sqrt(2) - eps: a purified
/// Werner state of visibility 1 - eps/(6 sqrt(2)) with the ideal
/// measurements (the purifying register rides on Alice's side).
NoisySelftest noisy_qubit_selftest(double epsilon_target);

/// 12 (u^2 + u) with u = sqrt(2) theta + theta^2: worst-case shift of the
/// certification value when every self-tested input may deviate by theta
/// in vector norm (12 = projector terms of the isotropic witness).
double worst_case_I_penalty(double theta);

/// (1/16)[(1-3p) eta^2 + 2 eta (1-eta) + (1-eta)^2 / 4]: certification
/// value for a Werner target of parameter p through Werner auxiliaries of
/// visibility eta with noiseless measurements.
double expected_I_werner(double eta, double p);

/// (1/16)[(1-3p) eta^2 + 2 eta (1-eta) + (1-eta)^2]: exact certification
/// value produced by a full network simulation with the same noise model.
/// Differs from expected_I_werner in the fully-depolarized branch, whose
/// exact weight is tr[W]/64 = 1/16 per setting pair rather than the 1/64
/// assumed by the conservative closed form (see the design notes).
double simulated_I_werner(double eta, double p);

/// The largest theta for which the noisy certification still certifies:
/// 0 when expected_I >= 0, else the positive root of
/// expected_I + worst_case_I_penalty(theta) = 0 (closed-form quadratics,
/// cross-checked by bisection).
double critical_theta(double eta, double p);

/// Samples the curve over an eta grid.
std::vector<RobustnessCurvePoint> robustness_curve(double p,
                                                   const std::vector<double>& eta_grid);

/// Convenience: uniform grid of `steps` points on [eta_min, eta_max].
std::vector<double> uniform_grid(double eta_min, double eta_max, int steps);

}  // namespace paulicert
