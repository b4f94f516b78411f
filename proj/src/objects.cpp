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

#include "paulicert/objects.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace paulicert {

namespace {
const Complex kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

int pow_int(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<int> digits(int value, int base, int n) {
  std::vector<int> d(n, 0);
  for (int k = n - 1; k >= 0; --k) {
    d[k] = value % base;
    value /= base;
  }
  return d;
}

Matrix pauli(Pauli which) {
  Matrix m(2, 2);
  switch (which) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix pauli_by_setting(int z) {
  switch (z) {
    case 1: return pauli(Pauli::Z);
    case 2: return pauli(Pauli::X);
    case 3: return pauli(Pauli::Y);
    default: throw std::invalid_argument("pauli_by_setting: z must be 1..3");
  }
}

Matrix pauli_projector(int c, int z) {
  if (c != 1 && c != -1) {
    throw std::invalid_argument("pauli_projector: outcome must be +/-1");
  }
  return 0.5 * (identity(2) + static_cast<double>(c) * pauli_by_setting(z));
}

StateVector bell_state(int k) {
  Vector v = Vector::Zero(4);
  const double s = 1.0 / kSqrt2;
  switch (k) {
    case 0: v(0) = s; v(3) = s; break;   // Phi+
    case 1: v(0) = s; v(3) = -s; break;  // Phi-
    case 2: v(1) = s; v(2) = s; break;   // Psi+
    case 3: v(1) = s; v(2) = -s; break;  // Psi-
    default: throw std::invalid_argument("bell_state: k must be 0..3");
  }
  return StateVector(std::move(v), {2, 2});
}

StateVector max_entangled(Index d) {
  Vector v = Vector::Zero(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i) v(i * d + i) = s;
  return StateVector(std::move(v), {d, d});
}

Matrix werner_state(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("werner_state: p must be in [0,1]");
  }
  const Vector phi = bell_state(0).amps;
  return p * (phi * phi.adjoint()) + (1.0 - p) * 0.25 * identity(4);
}

Matrix MeasurementFamily::observable(Index setting) const {
  const auto& eff = effects.at(setting);
  if (eff.size() != 2) {
    throw std::invalid_argument("observable: setting is not dichotomic");
  }
  return eff[0] - eff[1];
}

std::vector<Index> Strategy::charlie_positions() const {
  std::vector<Index> p(charlie_factors);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Index> Strategy::alice_positions() const {
  std::vector<Index> p(state.num_factors() - charlie_factors);
  std::iota(p.begin(), p.end(), charlie_factors);
  return p;
}

Index Strategy::charlie_dim() const {
  Index d = 1;
  for (Index k = 0; k < charlie_factors; ++k) d *= state.dims[k];
  return d;
}

Index Strategy::alice_dim() const { return state.dim() / charlie_dim(); }

double strategy_probability(const Strategy& s, Index z, Index c, Index x, Index a) {
  StateVector w = apply_local(s.charlie.effects.at(z).at(c), s.charlie_positions(), s.state);
  w = apply_local(s.alice.effects.at(x).at(a), s.alice_positions(), w);
  return std::real(s.state.amps.dot(w.amps));
}

std::vector<double> correlation_table(const Strategy& s) {
  std::vector<double> table;
  for (Index z = 0; z < s.charlie.num_settings(); ++z) {
    for (Index x = 0; x < s.alice.num_settings(); ++x) {
      for (Index c = 0; c < static_cast<Index>(s.charlie.effects[z].size()); ++c) {
        for (Index a = 0; a < static_cast<Index>(s.alice.effects[x].size()); ++a) {
          table.push_back(strategy_probability(s, z, c, x, a));
        }
      }
    }
  }
  return table;
}

namespace {

// Effects (I +/- O)/2 of a Hermitian-unitary observable.
std::vector<Matrix> dichotomic_effects(const Matrix& obs) {
  const Matrix id = identity(obs.rows());
  return {0.5 * (id + obs), 0.5 * (id - obs)};
}

// Alice's six observables: D/E = (sigma_i +/- sigma_j)/sqrt(2) for the
// pairs (z,x), (z,y), (x,y); odd settings are D, even are E.
Matrix alice_observable(int x) {
  static const std::pair<Pauli, Pauli> pairs[3] = {
      {Pauli::Z, Pauli::X}, {Pauli::Z, Pauli::Y}, {Pauli::X, Pauli::Y}};
  const auto [pi, pj] = pairs[(x - 1) / 2];
  const double sign = (x % 2 == 1) ? 1.0 : -1.0;
  return (pauli(pi) + sign * pauli(pj)) / kSqrt2;
}

const char* alice_setting_name(int x) {
  static const char* names[6] = {"D_zx", "E_zx", "D_zy", "E_zy", "D_xy", "E_xy"};
  return names[x - 1];
}

}  // namespace

Strategy ideal_qubit_strategy() {
  Strategy s;
  s.state = bell_state(0);
  s.charlie_factors = 1;
  s.charlie.setting_labels = {"Z", "X", "Y"};
  for (int z = 1; z <= 3; ++z) {
    s.charlie.effects.push_back(dichotomic_effects(pauli_by_setting(z)));
    s.charlie.outcome_labels.push_back({"+", "-"});
  }
  for (int x = 1; x <= 6; ++x) {
    s.alice.setting_labels.push_back(alice_setting_name(x));
    s.alice.effects.push_back(dichotomic_effects(alice_observable(x)));
    s.alice.outcome_labels.push_back({"+", "-"});
  }
  return s;
}

namespace {

// Tensor product of per-qubit 2x2 operators, leftmost first.
Matrix kron_chain(const std::vector<Matrix>& ops) {
  Matrix out = ops.front();
  for (size_t i = 1; i < ops.size(); ++i) out = kron(out, ops[i]);
  return out;
}

// Bell-basis rank-1 projector |Psi_k><Psi_k| on two qubits.
Matrix bell_projector(int k) {
  const Vector v = bell_state(k).amps;
  return v * v.adjoint();
}

// Effects of the Bell-state-measurement setting pairing qubits
// (start, start+1), (start+2, start+3), ... of an n-qubit side, with
// identity on uncovered qubits.  `pairs` Bell measurements produce 4^pairs
// outcomes; pairs == 0 yields the single trivial effect I.
std::vector<Matrix> bsm_effects(int n, int start, int pairs) {
  std::vector<Matrix> out;
  const int outcomes = pow_int(4, pairs);
  for (int o = 0; o < outcomes; ++o) {
    const std::vector<int> a = digits(o, 4, pairs);
    std::vector<Matrix> factors;
    int q = 0;
    while (q < start) { factors.push_back(identity(2)); ++q; }
    for (int l = 0; l < pairs; ++l) {
      factors.push_back(bell_projector(a[l]));
      q += 2;
    }
    while (q < n) { factors.push_back(identity(2)); ++q; }
    out.push_back(kron_chain(factors));
  }
  return out;
}

std::vector<std::string> bsm_outcome_labels(int pairs) {
  std::vector<std::string> labels;
  for (int o = 0; o < pow_int(4, pairs); ++o) {
    std::string lab;
    for (int d : digits(o, 4, pairs)) lab += static_cast<char>('0' + d);
    if (lab.empty()) lab = "0";
    labels.push_back(lab);
  }
  return labels;
}

}  // namespace

Strategy parallel_strategy(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("parallel_strategy: n must be 1..4");
  }
  const int dn = pow_int(2, n);

  Strategy s;
  // |Phi+>^(x)n with qubit C_i paired to A_i; in the global order
  // C_1..C_n A_1..A_n the amplitudes coincide with those of the
  // d-dimensional maximally entangled state.
  StateVector me = max_entangled(dn);
  s.state = StateVector(me.amps, std::vector<Index>(2 * n, 2));
  s.charlie_factors = n;

  // Charlie: all 3^n products of Pauli-basis settings, 2^n outcomes.
  for (int zi = 0; zi < pow_int(3, n); ++zi) {
    const std::vector<int> z = digits(zi, 3, n);
    std::string label = "z=";
    for (int d : z) label += static_cast<char>('1' + d);
    s.charlie.setting_labels.push_back(label);
    std::vector<Matrix> effects;
    std::vector<std::string> outcomes;
    for (int o = 0; o < dn; ++o) {
      const std::vector<int> bits = digits(o, 2, n);
      std::vector<Matrix> factors;
      std::string lab;
      for (int i = 0; i < n; ++i) {
        const int c = bits[i] == 0 ? 1 : -1;
        factors.push_back(pauli_projector(c, z[i] + 1));
        lab += (c == 1 ? '+' : '-');
      }
      effects.push_back(kron_chain(factors));
      outcomes.push_back(lab);
    }
    s.charlie.effects.push_back(std::move(effects));
    s.charlie.outcome_labels.push_back(std::move(outcomes));
  }

  // Alice: all 6^n products of D/E settings, 2^n outcomes.
  for (int xi = 0; xi < pow_int(6, n); ++xi) {
    const std::vector<int> x = digits(xi, 6, n);
    std::string label = "x=";
    for (size_t i = 0; i < x.size(); ++i) {
      if (i) label += ',';
      label += alice_setting_name(x[i] + 1);
    }
    s.alice.setting_labels.push_back(label);
    std::vector<Matrix> effects;
    std::vector<std::string> outcomes;
    for (int o = 0; o < dn; ++o) {
      const std::vector<int> bits = digits(o, 2, n);
      std::vector<Matrix> factors;
      std::string lab;
      for (int i = 0; i < n; ++i) {
        const double a = bits[i] == 0 ? 1.0 : -1.0;
        factors.push_back(0.5 * (identity(2) + a * alice_observable(x[i] + 1)));
        lab += (bits[i] == 0 ? '+' : '-');
      }
      effects.push_back(kron_chain(factors));
      outcomes.push_back(lab);
    }
    s.alice.effects.push_back(std::move(effects));
    s.alice.outcome_labels.push_back(std::move(outcomes));
  }

  // Two extra Alice settings: Bell-state measurements across qubit pairs
  // (1,2),(3,4),... and the shifted pairs (2,3),(4,5),...
  const int m_odd = n / 2;
  const int m_even = (n - 1) / 2;
  s.alice.setting_labels.push_back("bsm-odd");
  s.alice.effects.push_back(bsm_effects(n, 0, m_odd));
  s.alice.outcome_labels.push_back(bsm_outcome_labels(m_odd));
  s.alice.setting_labels.push_back("bsm-even");
  s.alice.effects.push_back(bsm_effects(n, 1, m_even));
  s.alice.outcome_labels.push_back(bsm_outcome_labels(m_even));
  return s;
}

Strategy transpose_strategy(const Strategy& s) {
  Strategy t = s;
  for (auto& setting : t.charlie.effects) {
    for (auto& e : setting) e = e.transpose().eval();
  }
  for (auto& setting : t.alice.effects) {
    for (auto& e : setting) e = e.transpose().eval();
  }
  return t;
}

Strategy transpose_site(const Strategy& s, int site, int n) {
  // Flips the local frame of one qubit site on both parties' per-site
  // measurements.  Pair-spanning settings (the Bell-basis rows appended
  // after the 6^n product settings) are deliberately left canonical: a
  // per-site frame flip is invisible to product statistics but shifts the
  // pair-row correlations, which is exactly what they exist to detect.
  Strategy t = s;
  const std::vector<Index> qubits(static_cast<size_t>(n), 2);
  for (auto& setting : t.charlie.effects) {
    for (auto& e : setting) e = partial_transpose(e, {site}, qubits);
  }
  const Index product_settings = pow_int(6, n);
  for (Index x = 0; x < t.alice.num_settings() && x < product_settings; ++x) {
    for (auto& e : t.alice.effects[x]) e = partial_transpose(e, {site}, qubits);
  }
  return t;
}

Strategy direct_sum_strategy(const Strategy& s1, const Strategy& s2) {
  if (s1.state.dims != s2.state.dims || s1.charlie_factors != s2.charlie_factors) {
    throw std::invalid_argument("direct_sum_strategy: shape mismatch");
  }
  const Index dc = s1.charlie_dim();
  const Index da = s1.alice_dim();

  Strategy out;
  // Factor order: [block qubit C | C factors | block qubit A | A factors].
  std::vector<Index> dims;
  dims.push_back(2);
  for (Index k = 0; k < s1.charlie_factors; ++k) dims.push_back(s1.state.dims[k]);
  dims.push_back(2);
  for (Index k = s1.charlie_factors; k < s1.state.num_factors(); ++k) {
    dims.push_back(s1.state.dims[k]);
  }
  Vector amps = Vector::Zero(4 * dc * da);
  for (Index c = 0; c < dc; ++c) {
    for (Index a = 0; a < da; ++a) {
      // index = ((b*dc + c)*2 + b)*da + a
      amps(((0 * dc + c) * 2 + 0) * da + a) = s1.state.amps(c * da + a) / kSqrt2;
      amps(((1 * dc + c) * 2 + 1) * da + a) = s2.state.amps(c * da + a) / kSqrt2;
    }
  }
  out.state = StateVector(std::move(amps), std::move(dims));
  out.charlie_factors = s1.charlie_factors + 1;

  auto block_family = [](const MeasurementFamily& f1, const MeasurementFamily& f2) {
    MeasurementFamily out;
    out.setting_labels = f1.setting_labels;
    out.outcome_labels = f1.outcome_labels;
    const Matrix p0 = pauli_projector(1, 1), p1 = pauli_projector(-1, 1);
    for (Index st = 0; st < f1.num_settings(); ++st) {
      std::vector<Matrix> effects;
      for (size_t o = 0; o < f1.effects[st].size(); ++o) {
        effects.push_back(kron(p0, f1.effects[st][o]) + kron(p1, f2.effects[st][o]));
      }
      out.effects.push_back(std::move(effects));
    }
    return out;
  };
  out.charlie = block_family(s1.charlie, s2.charlie);
  out.alice = block_family(s1.alice, s2.alice);
  return out;
}

}  // namespace paulicert
