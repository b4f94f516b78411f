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

#include "paulicert/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace paulicert {

namespace {

Index product(const std::vector<Index>& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

// Strides of a big-endian multi-index: stride[k] = prod of dims right of k.
std::vector<Index> strides_of(const std::vector<Index>& dims) {
  std::vector<Index> s(dims.size(), 1);
  for (Index k = static_cast<Index>(dims.size()) - 2; k >= 0; --k) {
    s[k] = s[k + 1] * dims[k + 1];
  }
  return s;
}

}  // namespace

StateVector::StateVector(Vector a, std::vector<Index> d)
    : amps(std::move(a)), dims(std::move(d)) {
  if (amps.size() != product(dims)) {
    throw std::invalid_argument("StateVector: amplitudes do not match factor dims");
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Index> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return StateVector(kron_vec(a.amps, b.amps), std::move(dims));
}

StateVector apply_local(const Matrix& op, const std::vector<Index>& targets,
                        const StateVector& v) {
  if (op.rows() != op.cols()) {
    throw std::invalid_argument("apply_local: operator must be square");
  }
  std::set<Index> uniq(targets.begin(), targets.end());
  if (uniq.size() != targets.size()) {
    throw std::invalid_argument("apply_local: duplicate target");
  }
  Index dop = 1;
  for (Index t : targets) {
    if (t < 0 || t >= v.num_factors()) {
      throw std::invalid_argument("apply_local: target out of range");
    }
    dop *= v.dims[t];
  }
  if (op.rows() != dop) {
    throw std::invalid_argument("apply_local: operator dim mismatch");
  }

  const std::vector<Index> strides = strides_of(v.dims);

  // Strides of the operator's own multi-index, in target-list order.
  const Index nt = static_cast<Index>(targets.size());
  std::vector<Index> op_strides(nt, 1);
  for (Index k = nt - 2; k >= 0; --k) {
    op_strides[k] = op_strides[k + 1] * v.dims[targets[k + 1]];
  }

  // Enumerate the non-target factors.
  std::vector<Index> rest;
  for (Index f = 0; f < v.num_factors(); ++f) {
    if (!uniq.count(f)) rest.push_back(f);
  }
  Index drest = 1;
  for (Index f : rest) drest *= v.dims[f];

  // For each fixed configuration of the rest factors, gather the dop
  // amplitudes addressed by the targets, multiply, scatter.
  Vector out = Vector::Zero(v.dim());
  std::vector<Index> gather_offsets(dop);
  for (Index g = 0; g < dop; ++g) {
    Index rem = g, off = 0;
    for (Index k = 0; k < nt; ++k) {
      const Index ik = rem / op_strides[k];
      rem %= op_strides[k];
      off += ik * strides[targets[k]];
    }
    gather_offsets[g] = off;
  }
  Vector block(dop);
  for (Index r = 0; r < drest; ++r) {
    Index rem = r, base = 0;
    for (Index k = static_cast<Index>(rest.size()) - 1; k >= 0; --k) {
      const Index f = rest[k];
      base += (rem % v.dims[f]) * strides[f];
      rem /= v.dims[f];
    }
    for (Index g = 0; g < dop; ++g) block(g) = v.amps(base + gather_offsets[g]);
    block = op * block;
    for (Index g = 0; g < dop; ++g) out(base + gather_offsets[g]) = block(g);
  }
  return StateVector(std::move(out), v.dims);
}

Matrix partial_trace(const Matrix& m, const std::vector<Index>& keep,
                     const std::vector<Index>& factor_dims) {
  if (m.rows() != m.cols() || m.rows() != product(factor_dims)) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  const std::vector<Index> strides = strides_of(factor_dims);
  std::set<Index> kept(keep.begin(), keep.end());
  std::vector<Index> rest;
  for (Index f = 0; f < static_cast<Index>(factor_dims.size()); ++f) {
    if (!kept.count(f)) rest.push_back(f);
  }
  Index dk = 1;
  for (Index f : keep) dk *= factor_dims[f];
  Index dr = 1;
  for (Index f : rest) dr *= factor_dims[f];

  auto offset = [&](const std::vector<Index>& factors, Index flat) {
    Index off = 0;
    for (Index k = static_cast<Index>(factors.size()) - 1; k >= 0; --k) {
      const Index f = factors[k];
      off += (flat % factor_dims[f]) * strides[f];
      flat /= factor_dims[f];
    }
    return off;
  };
  // Keep-offsets follow the order of `keep` big-endian, matching the
  // convention that output factor order is the order given.
  std::vector<Index> keep_off(dk), rest_off(dr);
  for (Index i = 0; i < dk; ++i) keep_off[i] = offset(keep, i);
  for (Index r = 0; r < dr; ++r) rest_off[r] = offset(rest, r);
  Matrix out = Matrix::Zero(dk, dk);
  for (Index r = 0; r < dr; ++r) {
    for (Index i = 0; i < dk; ++i) {
      for (Index j = 0; j < dk; ++j) {
        out(i, j) += m(keep_off[i] + rest_off[r], keep_off[j] + rest_off[r]);
      }
    }
  }
  return out;
}

Matrix reduced_density(const StateVector& v, const std::vector<Index>& keep) {
  const std::vector<Index> strides = strides_of(v.dims);
  std::set<Index> kept(keep.begin(), keep.end());
  std::vector<Index> rest;
  for (Index f = 0; f < v.num_factors(); ++f) {
    if (!kept.count(f)) rest.push_back(f);
  }
  Index dk = 1;
  for (Index f : keep) dk *= v.dims[f];
  Index dr = 1;
  for (Index f : rest) dr *= v.dims[f];

  std::vector<Index> keep_off(dk), rest_off(dr);
  auto offset = [&](const std::vector<Index>& factors, Index flat) {
    Index off = 0;
    for (Index k = static_cast<Index>(factors.size()) - 1; k >= 0; --k) {
      const Index f = factors[k];
      off += (flat % v.dims[f]) * strides[f];
      flat /= v.dims[f];
    }
    return off;
  };
  for (Index i = 0; i < dk; ++i) keep_off[i] = offset(keep, i);
  for (Index r = 0; r < dr; ++r) rest_off[r] = offset(rest, r);

  Matrix rho = Matrix::Zero(dk, dk);
  Vector col(dk);
  for (Index r = 0; r < dr; ++r) {
    for (Index i = 0; i < dk; ++i) col(i) = v.amps(keep_off[i] + rest_off[r]);
    rho.noalias() += col * col.adjoint();
  }
  return rho;
}

Matrix permute_factors(const Matrix& m, const std::vector<Index>& perm,
                       const std::vector<Index>& factor_dims) {
  const Index d = product(factor_dims);
  if (m.rows() != d || m.cols() != d || perm.size() != factor_dims.size()) {
    throw std::invalid_argument("permute_factors: dimension mismatch");
  }
  std::vector<Index> out_dims(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) out_dims[k] = factor_dims[perm[k]];
  const std::vector<Index> in_strides = strides_of(factor_dims);
  const std::vector<Index> out_strides = strides_of(out_dims);
  // map[i_out] = i_in
  std::vector<Index> map(d);
  const Index nf = static_cast<Index>(factor_dims.size());
  std::vector<Index> idx(nf);
  for (Index o = 0; o < d; ++o) {
    Index rem = o;
    for (Index k = nf - 1; k >= 0; --k) {
      idx[k] = rem % out_dims[k];
      rem /= out_dims[k];
    }
    Index in = 0;
    for (Index k = 0; k < nf; ++k) in += idx[k] * in_strides[perm[k]];
    map[o] = in;
  }
  Matrix out(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) out(r, c) = m(map[r], map[c]);
  }
  return out;
}

Matrix partial_transpose(const Matrix& m, const std::vector<Index>& factors,
                         const std::vector<Index>& factor_dims) {
  const Index d = product(factor_dims);
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  }
  const std::vector<Index> strides = strides_of(factor_dims);
  std::set<Index> flip(factors.begin(), factors.end());
  Matrix out(d, d);
  const Index nf = static_cast<Index>(factor_dims.size());
  std::vector<Index> ri(nf), ci(nf);
  for (Index r = 0; r < d; ++r) {
    Index rem = r;
    for (Index k = nf - 1; k >= 0; --k) {
      ri[k] = rem % factor_dims[k];
      rem /= factor_dims[k];
    }
    for (Index c = 0; c < d; ++c) {
      rem = c;
      for (Index k = nf - 1; k >= 0; --k) {
        ci[k] = rem % factor_dims[k];
        rem /= factor_dims[k];
      }
      Index rr = 0, cc = 0;
      for (Index k = 0; k < nf; ++k) {
        const bool t = flip.count(k) > 0;
        rr += (t ? ci[k] : ri[k]) * strides[k];
        cc += (t ? ri[k] : ci[k]) * strides[k];
      }
      out(rr, cc) = m(r, c);
    }
  }
  return out;
}

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_error(m) <= tol;
}

EighResult eigh(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("eigh: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix regularize(const Matrix& m, double tol) {
  EighResult e = eigh(m, tol);
  Eigen::VectorXd signs(e.eigenvalues.size());
  for (Index i = 0; i < signs.size(); ++i) {
    signs(i) = e.eigenvalues(i) < 0.0 ? -1.0 : 1.0;  // sign(0) := +1
  }
  return e.eigenvectors * signs.asDiagonal() * e.eigenvectors.adjoint();
}

Matrix identity(Index d) { return Matrix::Identity(d, d); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace paulicert
