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

#include "paulicert/selftest.hpp"

#include <cmath>
#include <stdexcept>

namespace paulicert {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const Complex kI(0.0, 1.0);

void require_triple_chsh_shape(const Strategy& s) {
  if (s.charlie.num_settings() != 3 || s.alice.num_settings() < 6) {
    throw std::invalid_argument("strategy does not have the 3/6-setting shape");
  }
  for (Index z = 0; z < 3; ++z) {
    if (s.charlie.effects[z].size() != 2) {
      throw std::invalid_argument("charlie settings must be dichotomic");
    }
  }
  for (Index x = 0; x < 6; ++x) {
    if (s.alice.effects[x].size() != 2) {
      throw std::invalid_argument("alice settings must be dichotomic");
    }
  }
}

struct Observables {
  Matrix Z, X, Y;                // Charlie, on his full side
  std::vector<Matrix> alice;     // D_zx, E_zx, D_zy, E_zy, D_xy, E_xy
};

Observables observables_of(const Strategy& s) {
  Observables o;
  o.Z = s.charlie.observable(0);
  o.X = s.charlie.observable(1);
  o.Y = s.charlie.observable(2);
  for (Index x = 0; x < 6; ++x) o.alice.push_back(s.alice.observable(x));
  return o;
}

double expectation(const Strategy& s, const Matrix& charlie_op, const Matrix& alice_op) {
  StateVector w = apply_local(charlie_op, s.charlie_positions(), s.state);
  w = apply_local(alice_op, s.alice_positions(), w);
  return std::real(s.state.amps.dot(w.amps));
}

// 2x2 Hadamard.
Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / kSqrt2;
}

// |0><0| (x) I + |1><1| (x) op, to be applied on targets [control, side].
Matrix controlled(const Matrix& op) {
  const Index d = op.rows();
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = identity(d);
  out.bottomRightCorner(d, d) = op;
  return out;
}

}  // namespace

BellOperator build_triple_chsh(const Strategy& s) {
  require_triple_chsh_shape(s);
  Observables o = observables_of(s);
  Matrix B = kron(o.Z, o.alice[0] + o.alice[1]) + kron(o.X, o.alice[0] - o.alice[1]) +
             kron(o.Z, o.alice[2] + o.alice[3]) - kron(o.Y, o.alice[2] - o.alice[3]) +
             kron(o.X, o.alice[4] + o.alice[5]) - kron(o.Y, o.alice[4] - o.alice[5]);
  return {std::move(B), kTripleChshMax};
}

double chsh_block_value(const Strategy& s, int block) {
  require_triple_chsh_shape(s);
  Observables o = observables_of(s);
  const Matrix* first = nullptr;
  const Matrix* second = nullptr;
  double second_sign = 1.0;
  switch (block) {
    case 0: first = &o.Z; second = &o.X; break;
    case 1: first = &o.Z; second = &o.Y; second_sign = -1.0; break;
    case 2: first = &o.X; second = &o.Y; second_sign = -1.0; break;
    default: throw std::invalid_argument("chsh_block_value: block must be 0..2");
  }
  const Matrix& D = o.alice[2 * block];
  const Matrix& E = o.alice[2 * block + 1];
  return expectation(s, *first, D + E) + second_sign * expectation(s, *second, D - E);
}

std::vector<Matrix> sos_terms(const Matrix& Z, const Matrix& X, const Matrix& Y,
                              const std::vector<Matrix>& a) {
  // Scaled so that sum_k P_k^2 = 2(6 sqrt(2) I - B) holds exactly as an
  // operator identity for arbitrary Hermitian-unitary inputs.
  const double scale = std::pow(2.0, 0.25);
  const Matrix idC = identity(Z.rows());
  const Matrix idA = identity(a[0].rows());
  auto term = [&](const Matrix& O, const Matrix& combo, double sign) {
    return (scale * (kron(O, idA) + sign * kron(idC, combo) / kSqrt2)).eval();
  };
  return {
      term(Z, a[0] + a[1], -1.0), term(X, a[0] - a[1], -1.0),
      term(Z, a[2] + a[3], -1.0), term(Y, a[2] - a[3], +1.0),
      term(X, a[4] + a[5], -1.0), term(Y, a[4] - a[5], +1.0),
  };
}

SosReport sos_residuals(const Strategy& s) {
  require_triple_chsh_shape(s);
  Observables o = observables_of(s);
  SosReport report;
  BellOperator bell = build_triple_chsh(s);
  const std::vector<Index> both = [&] {
    std::vector<Index> p = s.charlie_positions();
    for (Index q : s.alice_positions()) p.push_back(q);
    return p;
  }();
  report.bell_value = std::real(
      s.state.amps.dot(apply_local(bell.matrix, both, s.state).amps));
  report.epsilon = kTripleChshMax - report.bell_value;
  for (const Matrix& P : sos_terms(o.Z, o.X, o.Y, o.alice)) {
    report.residuals.push_back(apply_local(P, both, s.state).norm());
  }
  return report;
}

std::array<double, 3> anticommutator_norms(const Strategy& s) {
  Observables o = observables_of(s);
  auto norm_of = [&](const Matrix& P, const Matrix& Q) {
    const Matrix anti = P * Q + Q * P;
    return apply_local(anti, s.charlie_positions(), s.state).norm();
  };
  return {norm_of(o.Z, o.X), norm_of(o.Z, o.Y), norm_of(o.X, o.Y)};
}

StateVector apply_swap_gates(StateVector state, const Matrix& Zc, const Matrix& Xc,
                             const Matrix& Yc, const Matrix& Za, const Matrix& Xa,
                             const Matrix& Ya, Index c2, Index c1, Index a2, Index a1) {
  const Matrix H = hadamard();
  const Index C = 0, A = 1;
  state = apply_local(H, {c2}, state);
  state = apply_local(H, {c1}, state);
  state = apply_local(H, {a2}, state);
  state = apply_local(H, {a1}, state);
  state = apply_local(controlled(Zc), {c1, C}, state);
  state = apply_local(controlled(Za), {a1, A}, state);
  state = apply_local(H, {c1}, state);
  state = apply_local(H, {a1}, state);
  state = apply_local(controlled(Xc), {c1, C}, state);
  state = apply_local(controlled(Xa), {a1, A}, state);
  state = apply_local(controlled((kI * Yc * Xc).eval()), {c2, C}, state);
  state = apply_local(controlled((kI * Ya * Xa).eval()), {a2, A}, state);
  state = apply_local(H, {c2}, state);
  state = apply_local(H, {a2}, state);
  return state;
}

JunkDecomposition extract_junk(const StateVector& out, Index dc, Index da, int n) {
  JunkDecomposition junk;
  const Index d2n = Index{1} << n;       // C'' (and A'') configurations
  const Index d_primes = Index{1} << (2 * n);
  const double phi_amp = std::pow(2.0, -0.5 * n);

  auto bits_label = [&](Index q) {
    std::string lab;
    for (int b = n - 1; b >= 0; --b) lab += ((q >> b) & 1) ? '1' : '0';
    return lab;
  };

  // components[q][r] over the [C, A] space
  std::vector<std::vector<Vector>> comp(
      d2n, std::vector<Vector>(d2n, Vector::Zero(dc * da)));
  for (Index ca = 0; ca < dc * da; ++ca) {
    for (Index q = 0; q < d2n; ++q) {
      for (Index r = 0; r < d2n; ++r) {
        const Index base = ((ca * d2n + q) * d2n + r) * d_primes;
        Complex acc = 0.0;
        for (int b = 0; b < (1 << n); ++b) {
          // primed index with C'_i = A'_i = bit i of b
          Index p = 0;
          for (int i = 0; i < n; ++i) {
            const Index bit = (b >> (n - 1 - i)) & 1;
            p = (p << 2) | (bit << 1) | bit;
          }
          acc += out.amps(base + p);
        }
        comp[q][r](ca) += phi_amp * acc;
      }
    }
  }
  for (Index q = 0; q < d2n; ++q) {
    for (Index r = 0; r < d2n; ++r) {
      const double norm = comp[q][r].norm();
      const std::string key = bits_label(q) + "|" + bits_label(r);
      junk.components.emplace(
          key, StateVector(comp[q][r], std::vector<Index>{dc, da}));
      junk.norms[key] = norm;
      if (q == r) {
        junk.branch_weights[bits_label(q)] = norm * norm;
      } else {
        junk.off_diagonal_residual += norm * norm;
      }
    }
  }
  return junk;
}

SwapResult swap_isometry(const Strategy& s, double epsilon_warn) {
  require_triple_chsh_shape(s);
  Observables o = observables_of(s);
  const Matrix Za = regularize((o.alice[0] + o.alice[1]) / kSqrt2);
  const Matrix Xa = regularize((o.alice[0] - o.alice[1]) / kSqrt2);
  const Matrix Ya = regularize((o.alice[2] - o.alice[3]) / kSqrt2);

  const Index dc = s.charlie_dim();
  const Index da = s.alice_dim();

  // Circuit register order: [C, A, C'', A'', C', A'], aux start in |0>.
  Vector amps = Vector::Zero(dc * da * 16);
  for (Index ca = 0; ca < dc * da; ++ca) amps(ca * 16) = s.state.amps(ca);
  StateVector circ(std::move(amps), {dc, da, 2, 2, 2, 2});
  circ = apply_swap_gates(std::move(circ), o.Z, o.X, o.Y, Za, Xa, Ya, 2, 4, 3, 5);

  SwapResult result;
  result.bell_value = sos_residuals(s).bell_value;
  result.near_maximal = std::abs(kTripleChshMax - result.bell_value) <= epsilon_warn;
  result.junk = extract_junk(circ, dc, da, 1);
  const Matrix rho = reduced_density(circ, {4, 5});
  const Vector phi = bell_state(0).amps;
  result.extracted_fidelity = std::real(phi.dot(rho * phi));
  result.transformed = std::move(circ);
  return result;
}

Lemma1Report verify_lemma1_actions(const Strategy& s) {
  Observables o = observables_of(s);
  const Matrix Za = regularize((o.alice[0] + o.alice[1]) / kSqrt2);
  const Matrix Xa = regularize((o.alice[0] - o.alice[1]) / kSqrt2);
  const Matrix Ya = regularize((o.alice[2] - o.alice[3]) / kSqrt2);
  const Index dc = s.charlie_dim();
  const Index da = s.alice_dim();

  auto run_circuit = [&](const StateVector& input) {
    Vector amps = Vector::Zero(dc * da * 16);
    for (Index ca = 0; ca < dc * da; ++ca) amps(ca * 16) = input.amps(ca);
    StateVector circ(std::move(amps), {dc, da, 2, 2, 2, 2});
    return apply_swap_gates(std::move(circ), o.Z, o.X, o.Y, Za, Xa, Ya, 2, 4, 3, 5);
  };

  // Reference run: extract xi on [C, A, C'', A''] by contracting the
  // primed pair against <Phi+|.
  const StateVector base = run_circuit(s.state);
  Vector xi = Vector::Zero(dc * da * 4);
  const double inv_sqrt2 = 1.0 / kSqrt2;
  for (Index k = 0; k < dc * da * 4; ++k) {
    // primed sub-index: |00> and |11> components of C'A'
    xi(k) = inv_sqrt2 * (base.amps(k * 4 + 0) + base.amps(k * 4 + 3));
  }
  const StateVector xi_state(xi, {dc, da, 2, 2});

  auto expected_output = [&](const StateVector& junk, Pauli axis) {
    const StateVector prime = [&] {
      StateVector phi = bell_state(0);
      return apply_local(pauli(axis), {0}, phi);
    }();
    return tensor(junk, prime);
  };

  Lemma1Report report;
  struct Case { const char* name; const Matrix* op; Pauli axis; bool z_control; };
  const Case cases[] = {
      {"identity", nullptr, Pauli::I, false},
      {"Z", &o.Z, Pauli::Z, false},
      {"X", &o.X, Pauli::X, false},
      {"Y", &o.Y, Pauli::Y, true},
  };
  for (const Case& c : cases) {
    StateVector input = s.state;
    if (c.op != nullptr) {
      input = apply_local(*c.op, s.charlie_positions(), input);
    }
    const StateVector actual = run_circuit(input);
    StateVector junk = xi_state;
    if (c.z_control) {
      junk = apply_local(pauli(Pauli::Z), {2}, junk);  // sigma_z on C''
    }
    const StateVector expect = expected_output(junk, c.axis);
    const double res = (actual.amps - expect.amps).norm();
    report.residuals[c.name] = res;
    report.max_residual = std::max(report.max_residual, res);
    if (c.name == std::string("Y")) {
      const StateVector plain = expected_output(xi_state, Pauli::Y);
      report.y_residual_without_control = (actual.amps - plain.amps).norm();
    }
  }
  return report;
}

}  // namespace paulicert
