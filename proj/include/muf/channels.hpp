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

// Depolarizing channels Phi_t(X) = t X + (1-t) tr(X) I/d and their Choi
// matrices (isotropic states) C_t = t |beta><beta| + (1-t) I/d^2.

#pragma once

#include "muf/matrix_core.hpp"

namespace muf {

/// Slack applied to the interval endpoints by the range predicates.
inline constexpr double kRangeSlack = 1e-12;

struct ChannelParams {
  int d = 2;
  double t = 0.0;

  /// -1/(d^2-1); only meaningful for d >= 2.
  double t_min() const { return -1.0 / (double(d) * d - 1.0); }
  /// 1/(d+1)
  double t_separable_max() const { return 1.0 / (d + 1.0); }

  /// t in [-1/(d^2-1), 1]
  bool is_valid_channel() const;
  /// t in [-1/(d^2-1), 1/(d+1)]
  bool is_separable() const;
};

ComplexMatrix phi_t_apply(const ChannelParams& p, const ComplexMatrix& x);

/// |beta><beta| with |beta> = d^{-1/2} sum_i |i>|i>.
BipartiteMatrix max_entangled_projector(int d);

BipartiteMatrix choi_matrix(const ChannelParams& p);

/// (t/d) U_SW + ((1-t)/d^2) I, the partial transpose of C_t in closed form.
BipartiteMatrix pt_isotropic(const ChannelParams& p);

/// max(rank C_t, rank of its partial transpose). Throws RangeError outside
/// the separable range.
int rank_lower_bound(const ChannelParams& p);

/// Known upper bounds on the separability length of C_t, reported for
/// documentation only.
struct LengthBounds {
  long long caratheodory;      // d^4
  long long sic_point_general; // d^2 (d+1)^2 / 4 at t = 1/(d+1)
};
LengthBounds documented_length_bounds(int d);

}  // namespace muf
