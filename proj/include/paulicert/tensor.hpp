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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Dense complex linear algebra and matrix-free tensor operations over
// Hilbert spaces factored into labelled subsystems.
//
// Conventions used throughout the library:
//  * factor 0 is the LEFTMOST tensor factor;
//  * the composite basis index is big-endian in factor order, i.e. for
//    factor dims (d0, d1, ...) index = ((i0 * d1 + i1) * d2 + i2) ...
namespace paulicert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Default tolerance for Hermiticity / unitarity checks.
inline constexpr double kHermTol = 1e-10;

/// Thrown when a computation would exceed a configured dimension cap
/// (e.g. an extraction-circuit state too large for the current limits).
struct resource_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A subsystem handle: a human-readable label plus the zero-based position
/// of the factor inside a StateVector's factor list.
struct SubsystemIndex {
  std::string label;
  Index position = 0;
};

/// A pure state over an ordered list of tensor factors.
struct StateVector {
  Vector amps;
  std::vector<Index> dims;  // factor dimensions, leftmost first

  StateVector() = default;
  StateVector(Vector a, std::vector<Index> d);

  Index dim() const { return amps.size(); }
  Index num_factors() const { return static_cast<Index>(dims.size()); }
  double norm() const { return amps.norm(); }
};

/// Kronecker product, entry (i1*rows_b + i2, j1*cols_b + j2) = a(i1,j1)*b(i2,j2).
Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker product of vectors (amplitudes of a product state).
Vector kron_vec(const Vector& a, const Vector& b);

/// Tensor product of two states; factor lists are concatenated.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Applies `op` to the factors listed in `targets` (in that order) without
/// materializing the kron-padded operator.  `op` must be square with
/// dimension equal to the product of the targeted factor dims.  Throws
/// std::invalid_argument on dimension mismatch or duplicate targets.
StateVector apply_local(const Matrix& op, const std::vector<Index>& targets,
                        const StateVector& v);

/// Dense partial trace: keeps the factors listed in `keep` (ascending
/// output order follows the order given) and traces out the rest.
Matrix partial_trace(const Matrix& m, const std::vector<Index>& keep,
                     const std::vector<Index>& factor_dims);

/// Reduced density matrix of a pure state on the kept factors.
/// Equivalent to partial_trace(v v†, keep, v.dims) but avoids forming
/// the full outer product.
Matrix reduced_density(const StateVector& v, const std::vector<Index>& keep);

/// Hermitian eigendecomposition, eigenvalues ascending.  Throws if the
/// input is not Hermitian within `tol`.
struct EighResult {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;  // columns
};
EighResult eigh(const Matrix& m, double tol = kHermTol);

/// Replaces each eigenvalue of a Hermitian matrix by its sign, mapping
/// zero eigenvalues to +1, yielding a Hermitian unitary with the same
/// eigenvectors.
Matrix regularize(const Matrix& m, double tol = kHermTol);

/// Max-entry deviation from Hermiticity.
double hermiticity_error(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermTol);

/// Reorders the tensor factors of a square matrix: output slot k holds
/// the input factor perm[k].
Matrix permute_factors(const Matrix& m, const std::vector<Index>& perm,
                       const std::vector<Index>& factor_dims);

/// Partial transpose of a square matrix on the listed factors.
Matrix partial_transpose(const Matrix& m, const std::vector<Index>& factors,
                         const std::vector<Index>& factor_dims);

/// Identity matrix helper.
Matrix identity(Index d);

/// Max-entry absolute difference between two matrices.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace paulicert
