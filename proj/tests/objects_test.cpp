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
#include "paulicert/objects.hpp"

using namespace paulicert;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("pauli projectors") {
  // pi_{+|z} = diag(1, 0)
  Matrix want(2, 2);
  want << 1, 0, 0, 0;
  CHECK(max_abs_diff(pauli_projector(+1, 1), want) < 1e-15);

  // pi_{-|y} = 1/2 [[1, i], [-i, 1]]
  Matrix wanty(2, 2);
  wanty << Complex(0.5), Complex(0, 0.5), Complex(0, -0.5), Complex(0.5);
  CHECK(max_abs_diff(pauli_projector(-1, 3), wanty) < 1e-15);

  // Resolution of the observable: pi_+ - pi_- = sigma for each setting.
  for (int z = 1; z <= 3; ++z) {
    CHECK(max_abs_diff(pauli_projector(+1, z) - pauli_projector(-1, z),
                       pauli_by_setting(z)) < 1e-15);
    CHECK(max_abs_diff(pauli_projector(+1, z) + pauli_projector(-1, z),
                       identity(2)) < 1e-15);
  }
}

TEST_CASE("bell states are orthonormal and |Phi+> has the right amplitudes") {
  const Vector phi = bell_state(0).amps;
  CHECK(std::abs(phi(0) - Complex(1.0 / kSqrt2)) < 1e-15);
  CHECK(std::abs(phi(1)) < 1e-15);
  CHECK(std::abs(phi(2)) < 1e-15);
  CHECK(std::abs(phi(3) - Complex(1.0 / kSqrt2)) < 1e-15);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      const Complex ip = bell_state(j).amps.dot(bell_state(k).amps);
      CHECK(std::abs(ip - (j == k ? Complex(1) : Complex(0))) < 1e-15);
    }
  }
}

TEST_CASE("max_entangled(4) equals Phi+ x Phi+ after factor interleaving") {
  const Vector direct = max_entangled(4).amps;  // factors (4, 4) = (C1C2, A1A2)
  const Vector product = kron_vec(bell_state(0).amps, bell_state(0).amps);
  // product is ordered (C1, A1, C2, A2); reorder to (C1, C2, A1, A2).
  Vector reordered(16);
  for (Index c1 = 0; c1 < 2; ++c1)
    for (Index a1 = 0; a1 < 2; ++a1)
      for (Index c2 = 0; c2 < 2; ++c2)
        for (Index a2 = 0; a2 < 2; ++a2)
          reordered(((c1 * 2 + c2) * 2 + a1) * 2 + a2) =
              product(((c1 * 2 + a1) * 2 + c2) * 2 + a2);
  CHECK((direct - reordered).norm() < 1e-14);
}

TEST_CASE("werner_state endpoints, positivity, and witness trace") {
  CHECK(max_abs_diff(werner_state(0.0), 0.25 * identity(4)) < 1e-15);
  const Vector phi = bell_state(0).amps;
  CHECK(max_abs_diff(werner_state(1.0), phi * phi.adjoint()) < 1e-15);
  CHECK_THROWS_AS(werner_state(1.5), std::invalid_argument);

  const Matrix w = isotropic_witness_matrix();
  for (double p : {0.0, 0.25, 0.6, 1.0}) {
    const Matrix rho = werner_state(p);
    CHECK(std::abs(rho.trace() - Complex(1)) < 1e-14);
    CHECK(eigh(rho).eigenvalues.minCoeff() >= -1e-14);
    CHECK(std::real((w * rho).trace()) == doctest::Approx(1.0 - 3.0 * p).epsilon(1e-12));
  }
}

TEST_CASE("ideal qubit strategy observables") {
  const Strategy s = ideal_qubit_strategy();
  REQUIRE(s.charlie.num_settings() == 3);
  REQUIRE(s.alice.num_settings() == 6);

  CHECK(max_abs_diff(s.charlie.observable(0), pauli(Pauli::Z)) < 1e-14);
  CHECK(max_abs_diff(s.charlie.observable(1), pauli(Pauli::X)) < 1e-14);
  CHECK(max_abs_diff(s.charlie.observable(2), pauli(Pauli::Y)) < 1e-14);
  CHECK(max_abs_diff(s.alice.observable(0),
                     (pauli(Pauli::Z) + pauli(Pauli::X)) / kSqrt2) < 1e-14);
  CHECK(max_abs_diff(s.alice.observable(3),
                     (pauli(Pauli::Z) - pauli(Pauli::Y)) / kSqrt2) < 1e-14);

  // All nine observables are Hermitian unitaries.
  for (Index z = 0; z < 3; ++z) {
    const Matrix o = s.charlie.observable(z);
    CHECK(max_abs_diff(o * o, identity(2)) < 1e-12);
  }
  for (Index x = 0; x < 6; ++x) {
    const Matrix o = s.alice.observable(x);
    CHECK(max_abs_diff(o * o, identity(2)) < 1e-12);
  }
}

TEST_CASE("strategy probabilities are a normalized distribution") {
  const Strategy s = ideal_qubit_strategy();
  for (Index z = 0; z < 3; ++z) {
    for (Index x = 0; x < 6; ++x) {
      double total = 0.0;
      for (Index c = 0; c < 2; ++c)
        for (Index a = 0; a < 2; ++a) {
          const double p = strategy_probability(s, z, c, x, a);
          CHECK(p >= -1e-14);
          total += p;
        }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("ideal correlators are +-1/sqrt(2) in the CHSH pattern") {
  const Strategy s = ideal_qubit_strategy();
  auto corr = [&](Index z, Index x) {
    double e = 0.0;
    for (Index c = 0; c < 2; ++c)
      for (Index a = 0; a < 2; ++a)
        e += (c == a ? 1.0 : -1.0) * strategy_probability(s, z, c, x, a);
    return e;
  };
  // Block z-x: E(1,1) = E(1,2) = E(2,1) = 1/sqrt(2), E(2,2) = -1/sqrt(2).
  CHECK(corr(0, 0) == doctest::Approx(1 / kSqrt2).epsilon(1e-12));
  CHECK(corr(0, 1) == doctest::Approx(1 / kSqrt2).epsilon(1e-12));
  CHECK(corr(1, 0) == doctest::Approx(1 / kSqrt2).epsilon(1e-12));
  CHECK(corr(1, 1) == doctest::Approx(-1 / kSqrt2).epsilon(1e-12));
  // y side: <sigma_y (x) sigma_y> on |Phi+> is -1, so signs flip.
  CHECK(corr(2, 2) == doctest::Approx(-1 / kSqrt2).epsilon(1e-12));
  CHECK(corr(2, 3) == doctest::Approx(1 / kSqrt2).epsilon(1e-12));
}

TEST_CASE("transposing all measurements leaves every probability unchanged") {
  const Strategy s = ideal_qubit_strategy();
  const Strategy t = transpose_strategy(s);
  const auto table_s = correlation_table(s);
  const auto table_t = correlation_table(t);
  REQUIRE(table_s.size() == table_t.size());
  for (size_t i = 0; i < table_s.size(); ++i) {
    CHECK(table_s[i] == doctest::Approx(table_t[i]).epsilon(1e-12));
  }
}

TEST_CASE("parallel strategy has the n-copy setting shape") {
  const Strategy s = parallel_strategy(2);
  CHECK(s.charlie.num_settings() == 9);
  CHECK(s.alice.num_settings() == 36 + 2);  // 6^2 products + two Bell-basis rows
  CHECK(s.charlie_dim() == 4);
  CHECK(s.alice_dim() == 4);
  CHECK(s.state.dim() == 16);
  CHECK(s.state.norm() == doctest::Approx(1.0));
  // Product settings: probability normalization spot check.
  double total = 0.0;
  for (Index c = 0; c < 4; ++c)
    for (Index a = 0; a < 4; ++a) total += strategy_probability(s, 5, c, 17, a);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // Bell-basis setting of Alice: 4 outcomes, effects sum to identity.
  const auto& bsm = s.alice.effects.at(36);
  REQUIRE(bsm.size() == 4);
  Matrix sum = Matrix::Zero(4, 4);
  for (const Matrix& e : bsm) sum += e;
  CHECK(max_abs_diff(sum, identity(4)) < 1e-12);
}

TEST_CASE("digits and pow_int helpers") {
  CHECK(pow_int(3, 4) == 81);
  CHECK(pow_int(6, 0) == 1);
  CHECK(digits(11, 2, 4) == std::vector<int>{1, 0, 1, 1});
  CHECK(digits(5, 3, 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("direct sum strategy mixes two strategies coherently") {
  const Strategy a = ideal_qubit_strategy();
  const Strategy b = transpose_strategy(a);
  const Strategy sum = direct_sum_strategy(a, b);
  CHECK(sum.state.norm() == doctest::Approx(1.0));
  // Probabilities are the average of the two block strategies.
  for (Index z = 0; z < 3; ++z)
    for (Index x = 0; x < 6; ++x)
      for (Index c = 0; c < 2; ++c)
        for (Index o = 0; o < 2; ++o) {
          const double want = 0.5 * (strategy_probability(a, z, c, x, o) +
                                     strategy_probability(b, z, c, x, o));
          CHECK(strategy_probability(sum, z, c, x, o) ==
                doctest::Approx(want).epsilon(1e-10));
        }
}
