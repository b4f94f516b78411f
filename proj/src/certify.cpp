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

#include "paulicert/certify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace paulicert {

namespace {

// Pauli-string digit g in {0..3}: 0 = identity, g >= 1 = basis setting g.
Matrix pauli_digit(int g) {
  return g == 0 ? identity(2) : pauli_by_setting(g);
}

Matrix pauli_string(const std::vector<int>& gs) {
  Matrix out = pauli_digit(gs[0]);
  for (size_t i = 1; i < gs.size(); ++i) out = kron(out, pauli_digit(gs[i]));
  return out;
}

Matrix projector_string(const std::vector<int>& c, const std::vector<int>& z) {
  Matrix out = pauli_projector(c[0], z[0]);
  for (size_t i = 1; i < c.size(); ++i) out = kron(out, pauli_projector(c[i], z[i]));
  return out;
}

MeasurementFamily pauli_product_family(int n) {
  MeasurementFamily f;
  const int dn = pow_int(2, n);
  for (int zi = 0; zi < pow_int(3, n); ++zi) {
    const std::vector<int> zd = digits(zi, 3, n);
    std::string label = "z=";
    for (int d : zd) label += static_cast<char>('1' + d);
    f.setting_labels.push_back(label);
    std::vector<Matrix> effects;
    std::vector<std::string> outcomes;
    for (int o = 0; o < dn; ++o) {
      const std::vector<int> bits = digits(o, 2, n);
      std::vector<int> c(n), z(n);
      std::string lab;
      for (int i = 0; i < n; ++i) {
        c[i] = bits[i] == 0 ? 1 : -1;
        z[i] = zd[i] + 1;
        lab += (c[i] == 1 ? '+' : '-');
      }
      effects.push_back(projector_string(c, z));
      outcomes.push_back(lab);
    }
    f.effects.push_back(std::move(effects));
    f.outcome_labels.push_back(std::move(outcomes));
  }
  return f;
}

MeasurementFamily entangled_projection_family(Index d) {
  const Vector phi = max_entangled(d).amps;
  const Matrix proj = phi * phi.adjoint();
  MeasurementFamily f;
  f.setting_labels = {"*"};
  f.effects = {{proj, identity(d * d) - proj}};
  f.outcome_labels = {{"+", "-"}};
  return f;
}

Matrix steered_state(const NetworkStrategy& ns, NetworkSide side, Index z, Index c) {
  const Index d = Index{1} << ns.n;
  if (side == NetworkSide::CharlieToAlice) {
    const Matrix& effect = ns.charlie.effects.at(z).at(c);
    return partial_trace(kron(effect, identity(d)) * ns.aux_ca, {1}, {d, d});
  }
  const Matrix& effect = ns.daisy.effects.at(z).at(c);
  return partial_trace(kron(identity(d), effect) * ns.aux_bd, {0}, {d, d});
}

}  // namespace

Matrix isotropic_witness_matrix() {
  // Optimal witness for the Werner family p|Phi+><Phi+| + (1-p) I/4,
  // normalized so that tr[W rho_W(p)] = 1 - 3p.  Equal to 2I - 4|Phi+><Phi+|.
  const Vector phi = bell_state(0).amps;
  return 2.0 * identity(4) - 4.0 * (phi * phi.adjoint());
}

NetworkStrategy ideal_network(const Matrix& target_ab, int n) {
  const Index d = Index{1} << n;
  if (target_ab.rows() != d * d || target_ab.cols() != d * d) {
    throw std::invalid_argument("ideal_network: target dimension mismatch");
  }
  NetworkStrategy ns;
  ns.n = n;
  const Vector phi = max_entangled(d).amps;
  ns.aux_ca = phi * phi.adjoint();
  ns.aux_bd = ns.aux_ca;
  ns.target_ab = target_ab;
  ns.charlie = pauli_product_family(n);
  ns.daisy = pauli_product_family(n);
  ns.alice = entangled_projection_family(d);
  ns.bob = entangled_projection_family(d);
  return ns;
}

NetworkStrategy noisy_network(const Matrix& target_ab, double eta) {
  NetworkStrategy ns = ideal_network(target_ab, 1);
  ns.aux_ca = werner_state(eta);
  ns.aux_bd = ns.aux_ca;
  return ns;
}

NetworkStrategy transpose_ends(const NetworkStrategy& ns) {
  NetworkStrategy out = ns;
  for (auto& setting : out.charlie.effects) {
    for (auto& e : setting) e = e.transpose().eval();
  }
  for (auto& setting : out.daisy.effects) {
    for (auto& e : setting) e = e.transpose().eval();
  }
  return out;
}

double network_probability(const NetworkStrategy& ns, Index z, Index c, Index a,
                           Index b, Index w, Index d) {
  const Matrix tau_c = steered_state(ns, NetworkSide::CharlieToAlice, z, c);
  const Matrix tau_d = steered_state(ns, NetworkSide::DaisyToBob, w, d);
  // State and effects on [A0, A, B, B0].
  const Matrix state = kron(tau_c, kron(ns.target_ab, tau_d));
  const Matrix effect = kron(ns.alice.effects.at(0).at(a), ns.bob.effects.at(0).at(b));
  return std::real((effect * state).trace());
}

Witness decompose_witness(const Matrix& w, int n) {
  const Index d = Index{1} << n;
  if (w.rows() != d * d || w.cols() != d * d) {
    throw std::invalid_argument("decompose_witness: dimension mismatch");
  }
  if (!is_hermitian(w)) {
    throw std::invalid_argument("decompose_witness: matrix is not Hermitian");
  }
  const double norm = 1.0 / pow_int(4, n);

  // Expand in the tensor Pauli basis, then substitute each sigma by
  // pi_+ - pi_- and each identity by pi_{+|1} + pi_{-|1}, keeping one
  // term per (Pauli string, outcome combination).
  Witness wit;
  wit.n = n;
  wit.matrix = w;
  const int strings = pow_int(4, n);
  for (int ui = 0; ui < strings; ++ui) {
    const std::vector<int> u = digits(ui, 4, n);
    for (int vi = 0; vi < strings; ++vi) {
      const std::vector<int> v = digits(vi, 4, n);
      const Matrix basis = kron(pauli_string(u), pauli_string(v));
      const double t = std::real((w * basis).trace()) * norm;
      if (std::abs(t) < 1e-14) continue;
      const int combos = pow_int(2, 2 * n);
      for (int s = 0; s < combos; ++s) {
        const std::vector<int> bits = digits(s, 2, 2 * n);
        WitnessTerm term;
        double sign = 1.0;
        for (int side = 0; side < 2; ++side) {
          const std::vector<int>& g = side == 0 ? u : v;
          for (int i = 0; i < n; ++i) {
            const int bit = bits[side * n + i];  // 0 -> outcome +1
            const int zset = g[i] == 0 ? 1 : g[i];
            if (g[i] != 0 && bit == 1) sign = -sign;
            if (side == 0) {
              term.z.push_back(zset);
              term.c.push_back(bit == 0 ? 1 : -1);
            } else {
              term.w.push_back(zset);
              term.d.push_back(bit == 0 ? 1 : -1);
            }
          }
        }
        term.value = sign * t;
        wit.omega.push_back(std::move(term));
      }
    }
  }
  return wit;
}

Matrix witness_from_omega(const std::vector<WitnessTerm>& omega, int n) {
  const Index d = Index{1} << n;
  Matrix out = Matrix::Zero(d * d, d * d);
  for (const WitnessTerm& t : omega) {
    out += t.value * kron(projector_string(t.c, t.z), projector_string(t.d, t.w));
  }
  return out;
}

namespace {

Index setting_index(const std::vector<int>& z) {
  Index idx = 0;
  for (int zi : z) idx = idx * 3 + (zi - 1);
  return idx;
}

Index outcome_index(const std::vector<int>& c) {
  Index idx = 0;
  for (int ci : c) idx = idx * 2 + (ci == 1 ? 0 : 1);
  return idx;
}

}  // namespace

double certification_value(const NetworkStrategy& ns, const Witness& wit) {
  if (wit.n != ns.n) {
    throw std::invalid_argument("certification_value: witness arity mismatch");
  }
  double total = 0.0;
  for (const WitnessTerm& t : wit.omega) {
    total += t.value * network_probability(ns, setting_index(t.z), outcome_index(t.c),
                                           0, 0, setting_index(t.w), outcome_index(t.d));
  }
  return total;
}

SteeredEnsemble steered_states(const NetworkStrategy& ns, NetworkSide side) {
  SteeredEnsemble ensemble;
  const MeasurementFamily& family =
      side == NetworkSide::CharlieToAlice ? ns.charlie : ns.daisy;
  for (Index z = 0; z < family.num_settings(); ++z) {
    for (Index c = 0; c < static_cast<Index>(family.effects[z].size()); ++c) {
      ensemble.tau[{z, c}] = steered_state(ns, side, z, c);
    }
  }
  return ensemble;
}

NetworkStrategy with_target(const NetworkStrategy& ns, const Matrix& target_ab) {
  if (target_ab.rows() != ns.target_ab.rows()) {
    throw std::invalid_argument("with_target: dimension mismatch");
  }
  NetworkStrategy out = ns;
  out.target_ab = target_ab;
  return out;
}

namespace {

// Effective operator K on A (x) B with certification_value = tr[K rho]
// for every target rho, obtained by absorbing the steered states and the
// projective effects.
Matrix effective_target_operator(const NetworkStrategy& ns, const Witness& wit) {
  const Index d = Index{1} << ns.n;
  Matrix K = Matrix::Zero(d * d, d * d);
  const Matrix id2 = identity(d * d);
  for (const WitnessTerm& t : wit.omega) {
    const Matrix tau_c = steered_state(ns, NetworkSide::CharlieToAlice,
                                       setting_index(t.z), outcome_index(t.c));
    const Matrix tau_d = steered_state(ns, NetworkSide::DaisyToBob,
                                       setting_index(t.w), outcome_index(t.d));
    const Matrix effect =
        kron(ns.alice.effects.at(0).at(0), ns.bob.effects.at(0).at(0));
    const Matrix weighted = effect * kron(tau_c, kron(id2, tau_d));
    // tr[effect (tau_c (x) rho (x) tau_d)] = tr_AB[rho tr_{A0,B0}[...]]
    K += t.value * partial_trace(weighted, {1, 2}, {d, d, d, d});
  }
  return 0.5 * (K + Matrix(K.adjoint()));
}

// Unit vector from 2(d-1) angles: d-1 nested polar angles followed by
// d-1 phases on components 1..d-1.
Vector state_from_angles(const std::vector<double>& angles, Index d) {
  Vector v(d);
  double radius = 1.0;
  for (Index j = 0; j < d; ++j) {
    double mag;
    if (j + 1 < d) {
      mag = radius * std::cos(angles[j]);
      radius *= std::sin(angles[j]);
    } else {
      mag = radius;
    }
    const double phase = j == 0 ? 0.0 : angles[d - 1 + (j - 1)];
    v(j) = mag * Complex(std::cos(phase), std::sin(phase));
  }
  return v;
}

}  // namespace

SeparableMinimum separable_minimum(const Witness& wit, const NetworkStrategy& ns_template,
                                   const SeparableSearchBudget& budget) {
  const Index d = Index{1} << ns_template.n;
  const Matrix K = effective_target_operator(ns_template, wit);
  const Index na = 2 * (d - 1);  // angles per side

  auto value_of = [&](const std::vector<double>& angles) {
    const Vector a = state_from_angles(
        std::vector<double>(angles.begin(), angles.begin() + na), d);
    const Vector b = state_from_angles(
        std::vector<double>(angles.begin() + na, angles.end()), d);
    const Vector ab = kron_vec(a, b);
    return std::real(ab.dot(K * ab));
  };

  std::mt19937_64 rng(budget.seed);
  std::uniform_real_distribution<double> polar(0.0, M_PI);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

  std::vector<double> best(2 * na, 0.0);
  double best_value = value_of(best);

  // Coarse deterministic grid on the first polar angle of each side,
  // then random restarts.
  const int grid = 7;
  for (int ga = 0; ga < grid; ++ga) {
    for (int gb = 0; gb < grid; ++gb) {
      std::vector<double> angles(2 * na, 0.0);
      angles[0] = M_PI * ga / (grid - 1);
      angles[na] = M_PI * gb / (grid - 1);
      const double v = value_of(angles);
      if (v < best_value) { best_value = v; best = angles; }
    }
  }
  for (int sample = 0; sample < budget.samples; ++sample) {
    std::vector<double> angles(2 * na);
    for (Index side = 0; side < 2; ++side) {
      for (Index j = 0; j < d - 1; ++j) angles[side * na + j] = polar(rng);
      for (Index j = d - 1; j < na; ++j) angles[side * na + j] = phase(rng);
    }
    const double v = value_of(angles);
    if (v < best_value) { best_value = v; best = angles; }
  }

  // Coordinate descent with shrinking step.
  double step = 0.3;
  for (int iter = 0; iter < budget.refine_iters && step > 1e-10; ++iter) {
    bool improved = false;
    for (size_t j = 0; j < best.size(); ++j) {
      for (double dir : {+1.0, -1.0}) {
        std::vector<double> cand = best;
        cand[j] += dir * step;
        const double v = value_of(cand);
        if (v < best_value - 1e-15) {
          best_value = v;
          best = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  SeparableMinimum result;
  result.min_value = best_value;
  result.argmin_a =
      state_from_angles(std::vector<double>(best.begin(), best.begin() + na), d);
  result.argmin_b =
      state_from_angles(std::vector<double>(best.begin() + na, best.end()), d);
  return result;
}

}  // namespace paulicert
