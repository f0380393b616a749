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

#include "muf/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "muf/error.hpp"

namespace muf {

bool ChannelParams::is_valid_channel() const {
  return d >= 2 && t >= t_min() - kRangeSlack && t <= 1.0 + kRangeSlack;
}

bool ChannelParams::is_separable() const {
  return d >= 2 && t >= t_min() - kRangeSlack &&
         t <= t_separable_max() + kRangeSlack;
}

ComplexMatrix phi_t_apply(const ChannelParams& p, const ComplexMatrix& x) {
  if (x.rows() != p.d || x.cols() != p.d) {
    throw DimensionError("phi_t_apply: expected a " + std::to_string(p.d) +
                         "x" + std::to_string(p.d) + " matrix");
  }
  return p.t * x + ((1.0 - p.t) * x.trace() / double(p.d)) *
                       ComplexMatrix::Identity(p.d, p.d);
}

BipartiteMatrix max_entangled_projector(int d) {
  ComplexVector beta = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) beta(i * d + i) = 1.0;
  beta /= std::sqrt(double(d));
  return outer(beta);
}

BipartiteMatrix choi_matrix(const ChannelParams& p) {
  const int d2 = p.d * p.d;
  return p.t * max_entangled_projector(p.d) +
         ((1.0 - p.t) / d2) * BipartiteMatrix::Identity(d2, d2);
}

BipartiteMatrix pt_isotropic(const ChannelParams& p) {
  const int d2 = p.d * p.d;
  return (p.t / p.d) * swap_operator(p.d) +
         ((1.0 - p.t) / d2) * BipartiteMatrix::Identity(d2, d2);
}

int rank_lower_bound(const ChannelParams& p) {
  if (!p.is_separable()) {
    throw RangeError("t=" + std::to_string(p.t) +
                     " is outside the separable range [" +
                     std::to_string(p.t_min()) + ", " +
                     std::to_string(p.t_separable_max()) + "]");
  }
  return std::max(numerical_rank(choi_matrix(p)),
                  numerical_rank(pt_isotropic(p)));
}

LengthBounds documented_length_bounds(int d) {
  const long long dd = d;
  return {dd * dd * dd * dd, dd * dd * (dd + 1) * (dd + 1) / 4};
}

}  // namespace muf
