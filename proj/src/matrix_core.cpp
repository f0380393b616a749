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

#include "muf/matrix_core.hpp"

#include <cmath>
#include <string>

#include "muf/error.hpp"

namespace muf {

int local_dimension(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("bipartite operator must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  const auto n = m.rows();
  auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
  if (d < 1 || d * d != n) {
    throw DimensionError("dimension " + std::to_string(n) +
                         " is not the square of an integer");
  }
  return static_cast<int>(d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix partial_trace(const BipartiteMatrix& m, Side side) {
  const int d = local_dimension(m);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) {
        s += side == Side::First ? m(k * d + a, k * d + b)
                                 : m(a * d + k, b * d + k);
      }
      out(a, b) = s;
    }
  return out;
}

BipartiteMatrix partial_transpose(const BipartiteMatrix& m) {
  const int d = local_dimension(m);
  BipartiteMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          out(i * d + j, k * d + l) = m(i * d + l, k * d + j);
  return out;
}

BipartiteMatrix swap_operator(int d) {
  if (d < 1) throw InvalidArgumentError("swap_operator: d must be >= 1");
  BipartiteMatrix u = BipartiteMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) u(j * d + i, i * d + j) = 1.0;
  return u;
}

SymAsymProjectors sym_asym_projectors(int d) {
  const BipartiteMatrix u = swap_operator(d);
  const BipartiteMatrix id = BipartiteMatrix::Identity(d * d, d * d);
  return {0.5 * (id + u), 0.5 * (id - u)};
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m -
                 ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double cut = rel_tol * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector basis_vector(int d, int i) {
  ComplexVector e = ComplexVector::Zero(d);
  e(i) = 1.0;
  return e;
}

}  // namespace muf
