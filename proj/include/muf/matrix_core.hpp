// Copyright 2026 The MUF Authors
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

// Dense complex linear algebra shared by every other module.
//
// Composite index convention for C^d (x) C^d: basis vector |i>|j> has index
// i*d + j. kron, partial_trace, partial_transpose and swap_operator all use
// it, and so does every identity checked elsewhere in the library.

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace muf {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// A d^2 x d^2 operator on C^d (x) C^d. Same storage as ComplexMatrix; the
/// local dimension is recovered with local_dimension().
using BipartiteMatrix = ComplexMatrix;

inline constexpr double kDefaultMatrixTolerance = 1e-10;

enum class Side { First, Second };

/// Returns d such that m is d^2 x d^2. Throws DimensionError otherwise.
int local_dimension(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Traces out `side`; the result lives on the remaining factor.
ComplexMatrix partial_trace(const BipartiteMatrix& m, Side side);

/// Transposes the second tensor factor.
BipartiteMatrix partial_transpose(const BipartiteMatrix& m);

BipartiteMatrix swap_operator(int d);

struct SymAsymProjectors {
  BipartiteMatrix sym;
  BipartiteMatrix asym;
};
SymAsymProjectors sym_asym_projectors(int d);

/// tr(A^dagger B).
Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-abs entry deviation predicates.
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultMatrixTolerance);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultMatrixTolerance);
/// PSD iff Hermitian and smallest eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& m, double tol = kDefaultMatrixTolerance);

double max_abs(const ComplexMatrix& m);

/// Singular values > rel_tol * sigma_max.
int numerical_rank(const ComplexMatrix& m, double rel_tol = 1e-9);

/// |v><v|
ComplexMatrix outer(const ComplexVector& v);

ComplexVector basis_vector(int d, int i);

}  // namespace muf
