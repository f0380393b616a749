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

#include "muf/obstruction.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "muf/decomposition.hpp"
#include "muf/error.hpp"

namespace muf {

CharTable char_table(const WHContext& ctx, const ComplexVector& v) {
  if (v.size() != ctx.dim()) throw DimensionError("char_table: wrong length");
  if (!(std::abs(v.norm() - 1.0) <= 1e-12)) {
    throw NormalizationError("char_table: vector has norm " +
                             std::to_string(v.norm()));
  }
  CharTable t;
  t.d = ctx.dim();
  for (const auto& a : ctx.fundamental_labels())
    t.values.push_back(ctx.expectation(a, v));
  return t;
}

ObstructionReport prop4_obstruction(const WHContext& ctx,
                                    const ComplexVector& x,
                                    const ComplexVector& y,
                                    double residual_tol) {
  MufPair p{wh_orbit(ctx, x), wh_orbit(ctx, y), 0.0};
  ObstructionReport r;
  r.residual_t0 = decomposition_residual(p);
  if (!(r.residual_t0 < residual_tol)) {
    throw NotASolutionError("orbit pair does not solve the t=0 decomposition "
                            "(residual " + std::to_string(r.residual_t0) + ")");
  }
  const CharTable cx = char_table(ctx, x);
  const CharTable cy = char_table(ctx, y);
  for (const auto& a : ctx.fundamental_labels()) {
    if (a.a1 == 0 && a.a2 == 0) continue;
    if (std::abs(cx.at(a)) < kCharacterZero && std::abs(cy.at(a)) < kCharacterZero)
      r.witnesses.push_back(a);
  }
  r.obstructed = !r.witnesses.empty();
  return r;
}

ComplexVector evading_fiducial(int d, std::uint64_t seed) {
  if (d < 2) throw InvalidArgumentError("evading_fiducial requires d >= 2");
  const WHContext ctx(d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double amp = 1.0 / std::sqrt(double(d));
  for (int draw = 0; draw < 1000; ++draw) {
    ComplexVector y(d);
    for (int i = 0; i < d; ++i) y(i) = std::polar(amp, phase(rng));
    bool ok = true;
    for (const auto& a : ctx.fundamental_labels()) {
      if (a.a1 == 0) continue;
      if (!(std::abs(ctx.expectation(a, y)) > kCharacterNonzero)) {
        ok = false;
        break;
      }
    }
    if (ok) return y;
  }
  throw GenerationError("no evading fiducial found in 1000 draws");
}

MufPair fourier_pair(int d) {
  const WHContext ctx(d);
  const ComplexVector e0 = basis_vector(d, 0);
  return {wh_orbit(ctx, e0), wh_orbit(ctx, fourier_matrix(d) * e0), 0.0};
}

MufPair basis_product_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.cols()) {
    throw DimensionError("basis_product_pair: bases must be d x d");
  }
  const int d = static_cast<int>(a.rows());
  std::vector<ComplexVector> xs, ys;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      xs.push_back(a.col(k));
      ys.push_back(b.col(l));
    }
  return {make_frame(d, std::move(xs)), make_frame(d, std::move(ys)), 0.0};
}

MufPair evading_pair(int d, std::uint64_t seed) {
  const WHContext ctx(d);
  return {wh_orbit(ctx, basis_vector(d, 0)), wh_orbit(ctx, evading_fiducial(d, seed)),
          0.0};
}

}  // namespace muf
