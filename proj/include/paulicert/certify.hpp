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
#include <map>
#include <string>
#include <vector>

#include "paulicert/objects.hpp"

// Four-party line-network certification: Charlie - [aux] - Alice | Bob -
// [aux] - Daisy, where Alice and Bob project their halves onto a
// maximally entangled state and Charlie/Daisy perform Pauli-product
// measurements.  A witness expanded over Pauli projectors turns the
// observed correlations into a linear functional that is non-negative on
// all separable target states.
namespace paulicert {

struct NetworkStrategy {
  int n = 1;             // local dimension 2^n per side of the target
  Matrix aux_ca;         // state on C  (x) A0
  Matrix target_ab;      // state on A  (x) B
  Matrix aux_bd;         // state on B0 (x) D
  MeasurementFamily charlie;  // 3^n settings, 2^n outcomes, on C
  MeasurementFamily alice;    // single setting, effects on A0 (x) A
  MeasurementFamily bob;      // single setting, effects on B (x) B0
  MeasurementFamily daisy;    // 3^n settings, 2^n outcomes, on D
};

/// One coefficient of a witness expansion over products of Pauli
/// projectors: outcome signs c, d in {+1,-1}^n and settings z, w in
/// {1,2,3}^n per site.
struct WitnessTerm {
  std::vector<int> c, z, d, w;
  double value = 0.0;
};

struct Witness {
  int n = 1;
  Matrix matrix;  // on A (x) B, dimension 4^n
  std::vector<WitnessTerm> omega;
};

/// 2I - 4|Phi+><Phi+| = I - sigma_z sigma_z + sigma_y sigma_y
/// - sigma_x sigma_x: the optimal two-qubit witness for the Werner family
/// p|Phi+><Phi+| + (1-p) I/4, normalized so tr[W rho_W(p)] = 1 - 3p.
Matrix isotropic_witness_matrix();

/// Builds the network with perfect auxiliary states |Phi+><Phi+| of local
/// dimension 2^n, Pauli-product measurements for Charlie and Daisy, and
/// the maximally-entangled projection for Alice and Bob.
NetworkStrategy ideal_network(const Matrix& target_ab, int n);

/// Same network with Werner-noise auxiliary states of visibility eta
/// (n = 1 only): aux = eta |Phi+><Phi+| + (1-eta) I/4.
NetworkStrategy noisy_network(const Matrix& target_ab, double eta);

/// Transposes Charlie's and Daisy's measurement operators (a relabelling
/// of the unobserved local frames; all probabilities are unchanged).
NetworkStrategy transpose_ends(const NetworkStrategy& ns);

/// Born-rule probability p(c,a,b,d | z, *, *, w).  Outcome indices:
/// c, d in [0, 2^n) over Charlie's/Daisy's projectors, a, b in {0,1} with
/// 0 = the maximally-entangled projection outcome.  Computed from the
/// steered conditional states rather than the global six-factor state.
double network_probability(const NetworkStrategy& ns, Index z, Index c, Index a,
                           Index b, Index w, Index d);

/// Canonical projector expansion of a Hermitian matrix on (2^n)^2 dims:
/// Pauli coefficients t = tr[w sigma_u (x) sigma_v]/4^n with the identity
/// routed through the z = 1 setting.
Witness decompose_witness(const Matrix& w, int n);

/// Rebuilds the matrix from the omega coefficients (for validation).
Matrix witness_from_omega(const std::vector<WitnessTerm>& omega, int n);

/// I = sum omega p(c,+,+,d | z,*,*,w); equals tr[W rho]/d^4 on the ideal
/// network and is >= 0 whenever the target is separable.
double certification_value(const NetworkStrategy& ns, const Witness& wit);

struct SteeredEnsemble {
  // key: (setting z, outcome c)
  std::map<std::pair<Index, Index>, Matrix> tau;
};

enum class NetworkSide { CharlieToAlice, DaisyToBob };

/// tau_{c|z} = tr over the measured end of (Pi_{c|z} (x) I) aux.
SteeredEnsemble steered_states(const NetworkStrategy& ns, NetworkSide side);

struct SeparableSearchBudget {
  int samples = 10000;       // random product-state draws
  int refine_iters = 60;     // coordinate-descent sweeps on the best draw
  std::uint64_t seed = 42;
};

struct SeparableMinimum {
  double min_value = 0.0;
  Vector argmin_a, argmin_b;  // the minimizing pure product state
};

/// Brute-force minimization of the certification value over pure product
/// targets |psi_a><psi_a| (x) |psi_b><psi_b| (random restarts plus
/// angle-wise coordinate descent with a shrinking step).  By linearity
/// this lower-bounds the value over every separable target.
SeparableMinimum separable_minimum(const Witness& wit, const NetworkStrategy& ns_template,
                                   const SeparableSearchBudget& budget = {});

/// Replaces the target state of a network (dimension-checked).
NetworkStrategy with_target(const NetworkStrategy& ns, const Matrix& target_ab);

}  // namespace paulicert
