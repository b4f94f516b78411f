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

#include "paulicert/objects.hpp"

// Single-copy self-test: the triple-CHSH Bell operator, its
// sum-of-squares certificate, the swap-circuit extraction of |Phi+>, and
// the structure of the leftover (junk) state.
namespace paulicert {

/// 6*sqrt(2), the quantum maximum of the triple-CHSH operator.
inline const double kTripleChshMax = 6.0 * std::sqrt(2.0);

struct BellOperator {
  Matrix matrix;              // on the joint C (x) A space
  double max_quantum_value = kTripleChshMax;
};

struct SosReport {
  std::vector<double> residuals;  // one per squared term, ||P |psi>||
  double bell_value = 0.0;
  double epsilon = 0.0;           // 6 sqrt(2) - bell_value
};

/// The leftover state after extraction, resolved by the control-register
/// bitstring pair.  Keys are "q|r" with q the C-side and r the A-side
/// control bits; for exact self-tests only q == r branches carry weight.
struct JunkDecomposition {
  std::map<std::string, StateVector> components;  // sub-normalized
  std::map<std::string, double> norms;
  double off_diagonal_residual = 0.0;  // total norm^2 on q != r branches
  /// Norm^2 by diagonal branch bitstring q.
  std::map<std::string, double> branch_weights;
};

/// Assembles B = Z(D_zx+E_zx) + X(D_zx-E_zx) + Z(D_zy+E_zy) - Y(D_zy-E_zy)
///             + X(D_xy+E_xy) - Y(D_xy-E_xy)
/// from the strategy's observables (Charlie factors left, Alice right).
BellOperator build_triple_chsh(const Strategy& s);

/// Bell value of one of the three CHSH blocks (0: zx, 1: zy, 2: xy).
double chsh_block_value(const Strategy& s, int block);

/// Evaluates the six squared-term residuals of the shifted-operator
/// identity  2(6 sqrt(2) I - B) = sum_k P_k^2  on the strategy's state.
SosReport sos_residuals(const Strategy& s);

/// Builds the six P_k operators for arbitrary dichotomic observables
/// (Charlie's Z,X,Y and Alice's six), on the joint space.
std::vector<Matrix> sos_terms(const Matrix& Z, const Matrix& X, const Matrix& Y,
                              const std::vector<Matrix>& alice_obs);

/// || {Z,X} |psi> ||, || {Z,Y} |psi> ||, || {X,Y} |psi> || for Charlie's
/// observables acting on the shared state.
std::array<double, 3> anticommutator_norms(const Strategy& s);

struct SwapResult {
  StateVector transformed;  // circuit output on [C, A, C'', A'', C', A']
  JunkDecomposition junk;
  double extracted_fidelity = 0.0;  // <Phi+| rho_{C'A'} |Phi+>
  double bell_value = 0.0;
  bool near_maximal = true;  // Bell value within the warning threshold
};

/// Applies the extraction circuit: auxiliary qubits C'', C', A'', A'
/// initialized to |0>, Hadamards, controlled observables Z / X / iYX on
/// Charlie's side and their regularized counterparts on Alice's side,
/// final Hadamards on the C''/A'' controls.
SwapResult swap_isometry(const Strategy& s, double epsilon_warn = 1e-6);

struct Lemma1Report {
  // Residual || U[O |psi> (x) |00>] - expected || per Charlie observable,
  // where "expected" carries the extracted junk and sigma_o |Phi+> on
  // C'A' (with an extra sigma_z on C'' for O = Y).
  std::map<std::string, double> residuals;
  // The same residual for O = Y with the sigma_z control factor omitted.
  double y_residual_without_control = 0.0;
  double max_residual = 0.0;
};

/// Verifies how the extraction circuit transports Charlie's observables
/// onto the reference qubit.
Lemma1Report verify_lemma1_actions(const Strategy& s);

/// Resolves a circuit output laid out as
/// [C, A, C''_1..C''_n, A''_1..A''_n, C'_1, A'_1, ..., C'_n, A'_n]
/// into junk components by contracting <q| on the C'' block, <r| on the
/// A'' block and <Phi+| on every primed pair.
JunkDecomposition extract_junk(const StateVector& out, Index dc, Index da, int n);

/// Internal circuit driver shared with the parallel module: applies the
/// extraction gates for one site.  `state` has the side registers at
/// positions 0 (C side) and 1 (A side) and the four auxiliary qubits for
/// this site at the given positions.
StateVector apply_swap_gates(StateVector state, const Matrix& Zc, const Matrix& Xc,
                             const Matrix& Yc, const Matrix& Za, const Matrix& Xa,
                             const Matrix& Ya, Index c2, Index c1, Index a2, Index a1);

}  // namespace paulicert
