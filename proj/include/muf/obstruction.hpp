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

// Differentiability obstruction for covariant solution families at t = 0.
//
// A covariant family through the pair (x, y) at t = 0 that is differentiable
// there needs, for every label a != 0, a first-order term whose overlap with
// W_a^dagger (x) W_a equals one. That overlap only involves <x|W_a|x> and
// <y|W_a|y>, so any label where both characters vanish is a witness that no
// such family exists.

#pragma once

#include <cstdint>
#include <vector>

#include "muf/frames.hpp"
#include "muf/wh_group.hpp"

namespace muf {

/// Characters c_a = <v|W_a|v>, row-major over {0..d-1}^2.
struct CharTable {
  int d = 0;
  std::vector<Complex> values;

  Complex at(const WHLabel& a) const {
    return values[static_cast<std::size_t>(a.a1 * d + a.a2)];
  }
};

inline constexpr double kCharacterZero = 1e-10;
inline constexpr double kCharacterNonzero = 1e-6;

/// Throws NormalizationError for a non-unit vector.
CharTable char_table(const WHContext& ctx, const ComplexVector& v);

struct ObstructionReport {
  bool obstructed = false;
  std::vector<WHLabel> witnesses;  // A*, row-major order
  double residual_t0 = 0.0;        // orbit-pair residual at t = 0
};

/// Throws NotASolutionError when the orbit pair does not solve the t = 0
/// decomposition within residual_tol.
ObstructionReport prop4_obstruction(const WHContext& ctx,
                                    const ComplexVector& x,
                                    const ComplexVector& y,
                                    double residual_tol = 1e-8);

/// y = sum_i gamma_i |i> with |gamma_i| = d^{-1/2} and seeded random phases,
/// resampled until |<y|W_a|y>| > kCharacterNonzero for every a with a1 != 0.
/// Throws GenerationError after 1000 draws.
ComplexVector evading_fiducial(int d, std::uint64_t seed);

/// Orbits of |0> and F|0> at t = 0.
MufPair fourier_pair(int d);

/// x_(k,l) = a_k, y_(k,l) = b_l at t = 0, where a_k and b_l are the columns
/// of the unitaries a and b.
MufPair basis_product_pair(const ComplexMatrix& a, const ComplexMatrix& b);

/// Orbits of |0> and evading_fiducial(d, seed) at t = 0.
MufPair evading_pair(int d, std::uint64_t seed);

}  // namespace muf
