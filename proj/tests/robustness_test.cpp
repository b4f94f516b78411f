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

#include <cmath>

#include "paulicert/certify.hpp"
#include "paulicert/robustness.hpp"

using namespace paulicert;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("closed-form bound values") {
  CHECK(lemma1_state_bound(0.0) == 0.0);
  CHECK(lemma1_state_bound(1e-4) ==
        doctest::Approx((55.0 + 36.0 * kSqrt2) * 0.01).epsilon(1e-12));
  CHECK_THROWS_AS(lemma1_state_bound(-1.0), std::invalid_argument);

  const auto b = anticommutator_bounds(1e-4);
  CHECK(b[0] == doctest::Approx((4.0 + 4.0 * kSqrt2) * 0.01).epsilon(1e-12));
  CHECK(b[1] == doctest::Approx((6.0 + 6.0 * kSqrt2) * 0.01).epsilon(1e-12));
  CHECK(b[2] == doctest::Approx((8.0 + 8.0 * kSqrt2) * 0.01).epsilon(1e-12));
}

TEST_CASE("noisy strategy hits the requested Bell deficit and respects the bounds") {
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const NoisySelftest noisy = noisy_qubit_selftest(eps);
    CHECK(noisy.sos.bell_value ==
          doctest::Approx(kTripleChshMax - eps).epsilon(1e-12));
    CHECK(noisy.visibility ==
          doctest::Approx(1.0 - eps / kTripleChshMax).epsilon(1e-12));

    // Sum of squared SOS residuals equals twice the deficit.
    double sum_sq = 0.0;
    for (double r : noisy.sos.residuals) {
      sum_sq += r * r;
      CHECK(r <= std::sqrt(2.0 * eps) + 1e-12);
    }
    CHECK(std::abs(sum_sq - 2.0 * eps) <= 1e-8);

    // Each measured anti-commutator norm respects its closed-form bound.
    const auto bounds = anticommutator_bounds(eps);
    const auto norms = anticommutator_norms(noisy.strategy);
    for (int i = 0; i < 3; ++i) CHECK(norms[i] <= bounds[i]);
  }
  CHECK_THROWS_AS(noisy_qubit_selftest(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(noisy_qubit_selftest(10.0), std::invalid_argument);
}

TEST_CASE("worst-case penalty formula and monotonicity") {
  CHECK(worst_case_I_penalty(0.0) == 0.0);
  const double theta = 1e-3;
  const double u = kSqrt2 * theta + theta * theta;
  CHECK(worst_case_I_penalty(theta) ==
        doctest::Approx(12.0 * (u * u + u)).epsilon(1e-14));
  CHECK(worst_case_I_penalty(theta) == doctest::Approx(0.017007).epsilon(1e-4));
  double prev = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double v = worst_case_I_penalty(i * 5e-4);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("Werner-noise certification values") {
  CHECK(expected_I_werner(1.0, 0.6) == doctest::Approx(-0.05).epsilon(1e-14));
  CHECK(expected_I_werner(0.0, 0.6) == doctest::Approx(1.0 / 64.0).epsilon(1e-14));
  CHECK(expected_I_werner(1.0, 1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(expected_I_werner(1.5, 0.5), std::invalid_argument);

  // Sign change of the conservative value sits at eta* ~ 0.7237 for p = 0.6.
  const double eta_star = (1.5 + std::sqrt(2.25 + 2.55)) / 5.1;
  CHECK(eta_star == doctest::Approx(0.7237).epsilon(1e-3));
  CHECK(std::abs(expected_I_werner(eta_star, 0.6)) < 1e-12);
  CHECK(expected_I_werner(eta_star - 1e-3, 0.6) > 0.0);
  CHECK(expected_I_werner(eta_star + 1e-3, 0.6) < 0.0);

  // The exact simulated value differs only in the doubly-depolarized branch.
  CHECK(simulated_I_werner(1.0, 0.6) == doctest::Approx(-0.05).epsilon(1e-14));
  CHECK(simulated_I_werner(0.0, 0.6) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("simulated value matches a full network run") {
  const Witness wiso = decompose_witness(isotropic_witness_matrix(), 1);
  for (double eta : {1.0, 0.9, 0.72, 0.5}) {
    for (double p : {1.0, 0.6, 1.0 / 3.0}) {
      const NetworkStrategy ns = noisy_network(werner_state(p), eta);
      CHECK(std::abs(certification_value(ns, wiso) - simulated_I_werner(eta, p)) <=
            1e-10);
    }
  }
}

TEST_CASE("critical radius: threshold, defining equation, and endpoint value") {
  CHECK(critical_theta(0.72, 0.6) == 0.0);
  CHECK(critical_theta(0.5, 0.6) == 0.0);

  const double at_one = critical_theta(1.0, 0.6);
  CHECK(at_one == doctest::Approx(2.93e-3).epsilon(0.02));
  CHECK(std::abs(expected_I_werner(1.0, 0.6) + worst_case_I_penalty(at_one)) <=
        1e-12);

  // Cross-check the closed-form roots by bisection on the defining equation.
  for (double eta : {0.8, 0.9, 1.0}) {
    const double target = -expected_I_werner(eta, 0.6);
    REQUIRE(target > 0.0);
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (worst_case_I_penalty(mid) < target ? lo : hi) = mid;
    }
    CHECK(critical_theta(eta, 0.6) == doctest::Approx(lo).epsilon(1e-10));
  }

  // Strictly increasing above the threshold.
  double prev = 0.0;
  for (int i = 0; i <= 26; ++i) {
    const double t = critical_theta(0.73 + 0.01 * i, 0.6);
    CHECK(t > prev);
    prev = t;
  }
  CHECK(at_one > prev);
}

TEST_CASE("robustness curve sampling") {
  const auto pts = robustness_curve(0.6, {0.72, 0.86, 1.0});
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].theta_crit == 0.0);
  CHECK(pts[1].theta_crit > 0.0);
  CHECK(pts[2].theta_crit > pts[1].theta_crit);
  CHECK(pts[2].theta_crit == doctest::Approx(2.93e-3).epsilon(0.02));
  for (const auto& pt : pts) {
    CHECK(pt.expected_I == doctest::Approx(expected_I_werner(pt.eta, 0.6)).epsilon(1e-14));
  }

  // At the detection boundary p = 1/3 the radius is zero everywhere.
  for (const auto& pt : robustness_curve(1.0 / 3.0, uniform_grid(0.0, 1.0, 11))) {
    CHECK(pt.theta_crit == 0.0);
  }
}

TEST_CASE("uniform grid endpoints and spacing") {
  const auto g = uniform_grid(0.7, 1.0, 4);
  REQUIRE(g.size() == 4);
  CHECK(g.front() == doctest::Approx(0.7));
  CHECK(g.back() == doctest::Approx(1.0));
  CHECK(g[1] == doctest::Approx(0.8));
  CHECK(uniform_grid(0.5, 0.5, 1) == std::vector<double>{0.5});
}
