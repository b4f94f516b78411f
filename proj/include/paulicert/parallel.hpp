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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paulicert/selftest.hpp"

// Parallel self-test over n copies: coarse-grained per-site observables,
// one Bell value per site, the per-site extraction circuit, and the
// Bell-state-measurement alignment table that ties the sites' sigma_y
// frames together.
namespace paulicert {

/// Per-site observables derived from an n-parallel-shaped strategy.
struct CoarseObservables {
  int n = 1;
  // charlie_avg[i] = {Z_i, X_i, Y_i}: site-i outcome observables averaged
  // over the 3^(n-1) settings compatible with each axis choice.
  std::vector<std::array<Matrix, 3>> charlie_avg;
  // alice_avg[i][x-1] for x = 1..6 (D_zx, E_zx, D_zy, E_zy, D_xy, E_xy),
  // averaged over the 6^(n-1) compatible settings.
  std::vector<std::array<Matrix, 6>> alice_avg;
};

/// Site-i marginal observable of a product-shaped setting: the sum over
/// outcomes of (+/-1 for the site's outcome bit) times the effect.
Matrix site_marginal_observable(const MeasurementFamily& f, Index setting,
                                int site, int n);

/// Sharp Charlie observable O_i^(k): site i measured along `axis` (1..3),
/// the other sites' axes given by k in [0, 3^(n-1)) (digits base 3, in
/// site order with site i skipped).
Matrix sharp_charlie_observable(const Strategy& s, int n, int site, int axis, int k = 0);

/// Sharp Alice observable P_i^(l) for setting value x in 1..6 at site i.
Matrix sharp_alice_observable(const Strategy& s, int n, int site, int x, int l = 0);

CoarseObservables coarse_grain(const Strategy& s, int n);

/// Alice's effective (regularized) per-site operators built from the
/// averaged D/E observables: Zhat, Xhat, Yhat with
/// Y = (D_zy - E_zy)/sqrt(2); on the ideal strategy Yhat is the
/// transpose (= negative conjugate frame) of Charlie's sigma_y.
struct AliceEffective {
  Matrix Zhat, Xhat, Yhat;
};
AliceEffective alice_effective_site(const CoarseObservables& co, int site);

/// One Bell value per site, from the coarse-grained observables.
std::vector<double> parallel_bell_values(const Strategy& s, int n);

struct ParallelSwapResult {
  JunkDecomposition junk;
  std::vector<double> fidelities;  // per primed pair
};

/// Runs the per-site extraction circuits (sharp Charlie observables with
/// compatible-setting index k, regularized averaged Alice operators) and
/// resolves the junk components.  Throws if 2^(6n) exceeds `max_dim`.
ParallelSwapResult parallel_swap_isometry(const Strategy& s, int n, int k = 0,
                                          Index max_dim = Index{1} << 18);

/// Alignment-table report: rows are the coarse Bell-measurement projector
/// sums S_{l,a} (pairs (2l-1,2l)) and T_{l,a} (pairs (2l,2l+1)) on
/// Alice's side, columns the Charlie operators {I, ZZ, XX, YY} on the
/// same pair, entries <psi| col (x) row |psi>.
struct BsmCorrelationReport {
  struct Entry {
    std::string row;   // e.g. "S[1,0]"
    std::string col;   // "I", "ZZ", "XX", "YY"
    double value = 0.0;
    double target = 0.0;
  };
  std::vector<Entry> table;
  double max_deviation = 0.0;
};

BsmCorrelationReport bsm_correlations(const Strategy& s, int n);

struct Lemma3Report {
  bool applicable = false;
  bool aligned = false;
  double two_term_residual = 0.0;   // junk weight outside {0...0, 1...1}
  double bell_deviation = 0.0;      // max_i |6 sqrt(2) - B_i|
  double bsm_deviation = 0.0;
};

/// Checks the hypotheses (per-site Bell values maximal, alignment table
/// matched within tol) and, when they hold, verifies that the junk state
/// lives entirely on the all-zeros / all-ones control branches.
Lemma3Report verify_lemma3(const Strategy& s, int n, double tol = 1e-8);

/// Residuals of the pair-projector reconstruction identities for pair l
/// (1-based): first = || S_{l,0} psi - 1/4 (I + ZZ + XX - YY) psi ||,
/// second = || (XX ZZ + YY) psi || with sharp Charlie operators.
std::array<double, 2> bsm_identity_residuals(const Strategy& s, int n, int l);

/// || (O_i^(k) - Ohat_{i+n}) psi || for axis in {1,2,3}: sharp Charlie
/// site observable vs. the regularized averaged Alice counterpart.
double sharp_vs_effective_residual(const Strategy& s, int n, int site, int axis, int k = 0);

/// || (O_i^(k) O_j^(k') - O_j^(k') O_i^(k)) psi || for two Charlie site
/// observables on distinct sites.
double cross_site_commutation_residual(const Strategy& s, int n, int i, int axis_i,
                                       int j, int axis_j, int k = 0, int kp = 0);

}  // namespace paulicert
