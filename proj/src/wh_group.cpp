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

#include "muf/wh_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "muf/error.hpp"

namespace muf {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

WHContext::WHContext(int d) : d_(d) {
  if (d < 1) throw InvalidArgumentError("WHContext: d must be >= 1");
  const int two_d = 2 * d;
  roots_.resize(two_d);
  for (int m = 0; m < two_d; ++m) {
    roots_[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / two_d);
  }
  shift_ = ComplexMatrix::Zero(d, d);
  clock_ = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    shift_((i + 1) % d, i) = 1.0;
    clock_(i, i) = tau_power(2 * i);
  }
  ops_.reserve(std::size_t(d) * d);
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2) ops_.push_back(weyl_operator({a1, a2}));
}

Complex WHContext::tau_power(std::int64_t k) const {
  // tau^k = exp(2 pi i (d+1) k / 2d); reduce before multiplying to avoid
  // overflow.
  const std::int64_t two_d = 2 * d_;
  const std::int64_t m = mod(mod(d_ + 1, two_d) * mod(k, two_d), two_d);
  return roots_[static_cast<std::size_t>(m)];
}

WHLabel WHContext::canonical(const WHLabel& a) const {
  return {mod(a.a1, d_), mod(a.a2, d_)};
}

std::vector<WHLabel> WHContext::fundamental_labels() const {
  std::vector<WHLabel> out;
  out.reserve(std::size_t(d_) * d_);
  for (int a1 = 0; a1 < d_; ++a1)
    for (int a2 = 0; a2 < d_; ++a2) out.push_back({a1, a2});
  return out;
}

ComplexMatrix WHContext::weyl_operator(const WHLabel& a) const {
  // S^a1 C^a2 |i> = omega^(a2 i) |i + a1>, so
  // W_a |i> = tau^(a1 a2 + 2 a2 i) |i + a1>.
  const std::int64_t two_d = 2 * d_;
  const std::int64_t base = mod(mod(a.a1, two_d) * mod(a.a2, two_d), two_d);
  const std::int64_t a2m = mod(a.a2, two_d);
  const std::int64_t s = mod(a.a1, d_);
  ComplexMatrix w = ComplexMatrix::Zero(d_, d_);
  for (int i = 0; i < d_; ++i) {
    w((i + s) % d_, i) = tau_power(base + 2 * mod(a2m * i, two_d));
  }
  return w;
}

ComplexVector WHContext::apply(const WHLabel& a, const ComplexVector& v) const {
  const std::int64_t two_d = 2 * d_;
  const std::int64_t base = mod(mod(a.a1, two_d) * mod(a.a2, two_d), two_d);
  const std::int64_t a2m = mod(a.a2, two_d);
  const std::int64_t s = mod(a.a1, d_);
  ComplexVector out(d_);
  for (int i = 0; i < d_; ++i) {
    out((i + s) % d_) = tau_power(base + 2 * mod(a2m * i, two_d)) * v(i);
  }
  return out;
}

Complex WHContext::expectation(const WHLabel& a, const ComplexVector& v) const {
  return v.dot(apply(a, v));
}

double WHRelationReport::max_dev() const {
  return std::max({product_dev, adjoint_dev, periodicity_dev});
}

WHRelationReport wh_relations_check(const WHContext& ctx) {
  WHRelationReport r;
  const auto labels = ctx.fundamental_labels();
  const int d = ctx.dim();
  for (const auto& a : labels) {
    const ComplexMatrix wa = ctx.weyl_operator(a);
    r.adjoint_dev =
        std::max(r.adjoint_dev, max_abs(wa.adjoint() - ctx.weyl_operator(-a)));
    for (const auto& b : labels) {
      const ComplexMatrix wb = ctx.weyl_operator(b);
      const auto ab = symplectic(a, b);
      r.product_dev = std::max(
          r.product_dev,
          max_abs(wa * wb - ctx.tau_power(ab) * ctx.weyl_operator(a + b)));
      r.periodicity_dev = std::max(
          r.periodicity_dev,
          max_abs(ctx.weyl_operator(a + b * d) - ctx.tau_power(d * ab) * wa));
    }
  }
  return r;
}

ComplexMatrix fourier_matrix(int d) {
  if (d < 1) throw InvalidArgumentError("fourier_matrix: d must be >= 1");
  const WHContext ctx(d);
  ComplexMatrix f(d, d);
  const double scale = 1.0 / std::sqrt(double(d));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) f(k, l) = scale * ctx.tau_power(2LL * k * l);
  return f;
}

Frame wh_orbit(const WHContext& ctx, const ComplexVector& fiducial) {
  if (fiducial.size() != ctx.dim()) {
    throw DimensionError("wh_orbit: fiducial has wrong length");
  }
  const double norm = fiducial.norm();
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw NormalizationError("wh_orbit: fiducial has norm " +
                             std::to_string(norm) + ", expected 1");
  }
  std::vector<ComplexVector> vs;
  for (const auto& a : ctx.fundamental_labels()) vs.push_back(ctx.apply(a, fiducial));
  return make_frame(ctx.dim(), std::move(vs));
}

BipartiteMatrix twirl_conjugation(const WHContext& ctx, const BipartiteMatrix& x) {
  if (local_dimension(x) != ctx.dim()) {
    throw DimensionError("twirl_conjugation: operator is not on C^d (x) C^d");
  }
  BipartiteMatrix acc = BipartiteMatrix::Zero(x.rows(), x.cols());
  for (const auto& w : ctx.fundamental_operators()) {
    const ComplexMatrix ww = kron(w, w);
    acc += ww * x * ww.adjoint();
  }
  return acc;
}

BipartiteMatrix twirl_coefficient_form(const WHContext& ctx,
                                       const BipartiteMatrix& x) {
  if (local_dimension(x) != ctx.dim()) {
    throw DimensionError("twirl_coefficient_form: operator is not on C^d (x) C^d");
  }
  BipartiteMatrix acc = BipartiteMatrix::Zero(x.rows(), x.cols());
  for (const auto& w : ctx.fundamental_operators()) {
    const Complex c = (x * kron(w.adjoint(), w)).trace();
    acc += c * kron(w, w.adjoint());
  }
  return acc;
}

}  // namespace muf
