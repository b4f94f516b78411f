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

#include <map>
#include <string>
#include <vector>

#include "paulicert/tensor.hpp"

// Canonical constructors for the states, observables, projectors, and
// two-party measurement strategies used throughout the library.
namespace paulicert {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

/// The 2x2 Pauli matrix for the given axis (Pauli::I gives the identity).
Matrix pauli(Pauli which);

/// Qubit projector onto outcome c = +/-1 of the basis setting
/// z in {1,2,3} == {z-axis, x-axis, y-axis}: (I + c * sigma_z(z)) / 2.
Matrix pauli_projector(int c, int z);

/// Pauli observable addressed by basis-setting index z in {1,2,3}
/// (sigma_z, sigma_x, sigma_y respectively).
Matrix pauli_by_setting(int z);

/// The four Bell states as 2x2-factored StateVectors:
/// k = 0..3 -> Phi+, Phi-, Psi+, Psi-.
StateVector bell_state(int k);

/// Maximally entangled state (1/sqrt(d)) sum_i |ii>, factored as (d, d).
StateVector max_entangled(Index d);

/// Werner state p |Phi+><Phi+| + (1-p) I/4 on two qubits.
Matrix werner_state(double p);

/// A labelled measurement: one list of effect operators per setting.
struct MeasurementFamily {
  std::vector<std::string> setting_labels;
  // effects[s][o] is the operator for outcome o of setting s.
  std::vector<std::vector<Matrix>> effects;
  std::vector<std::vector<std::string>> outcome_labels;

  Index num_settings() const { return static_cast<Index>(effects.size()); }
  /// Sum_o lambda_o * effect with outcomes read as +1, -1 in listed order;
  /// only meaningful for dichotomic settings.
  Matrix observable(Index setting) const;
};

/// A shared pure state plus one measurement family per party.  The state
/// factors split as [first charlie_factors factors | the rest]; Charlie's
/// effects act on the left block, Alice's on the right block.
struct Strategy {
  StateVector state;
  Index charlie_factors = 1;
  MeasurementFamily charlie;
  MeasurementFamily alice;

  std::vector<Index> charlie_positions() const;
  std::vector<Index> alice_positions() const;
  Index charlie_dim() const;
  Index alice_dim() const;
};

/// Joint outcome probability p(c,a|z,x) = <psi| M_{c|z} (x) M_{a|x} |psi>.
double strategy_probability(const Strategy& s, Index z, Index c, Index x, Index a);

/// Full correlation table, flattened in (z, x, c, a) order.
std::vector<double> correlation_table(const Strategy& s);

/// The two-qubit strategy achieving the triple-CHSH maximum: state Phi+,
/// Charlie measures sigma_z, sigma_x, sigma_y (settings 1..3), Alice
/// measures D/E = (sigma_i +/- sigma_j)/sqrt(2) for the pairs
/// (z,x), (z,y), (x,y) (settings 1..6, odd = D, even = E).
Strategy ideal_qubit_strategy();

/// n independent copies of the ideal strategy on |Phi+>^(x)n, with
/// Charlie's side first.  Charlie: 3^n settings with 2^n outcomes; Alice:
/// 6^n settings with 2^n outcomes plus two extra settings that measure
/// the Bell basis across qubit pairs (2l-1, 2l) and (2l, 2l+1)
/// respectively.  Supported range: 1 <= n <= 4.
Strategy parallel_strategy(int n);

/// Replaces every measurement operator by its transpose in the
/// computational basis; the (real-amplitude) state is unchanged.  The
/// resulting strategy is observationally equivalent to the input.
Strategy transpose_strategy(const Strategy& s);

/// Transposes the measurements of one site only (0-based), for strategies
/// whose families are site-products (as built by parallel_strategy).
Strategy transpose_site(const Strategy& s, int site, int n);

/// Block-diagonal direct sum of two strategies of equal shape: the state
/// is an equal superposition of |0>|0> (x) psi_1 and |1>|1> (x) psi_2
/// with one block qubit per side, and each measurement operator is the
/// corresponding block-diagonal sum.
Strategy direct_sum_strategy(const Strategy& s1, const Strategy& s2);

/// Number of settings/outcomes helpers for parallel shapes.
int pow_int(int base, int exp);
/// Digits of `value` in the given base, most significant first, width n.
std::vector<int> digits(int value, int base, int n);

}  // namespace paulicert
