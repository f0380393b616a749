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

// Frames of unit vectors and the pointwise relations checked on them.

#pragma once

#include <vector>

#include "muf/matrix_core.hpp"

namespace muf {

/// Ordered list of vectors in C^d with nonnegative weights summing to one.
/// Operations use the vectors as stored; validate_frame() checks the
/// unit-norm and weight invariants.
struct Frame {
  int d = 0;
  std::vector<ComplexVector> vectors;
  std::vector<double> weights;

  std::size_t size() const { return vectors.size(); }
};

/// Frame with uniform weights 1/n.
Frame make_frame(int d, std::vector<ComplexVector> vectors);

/// Throws NormalizationError naming the first offending vector, or
/// InvalidArgumentError for bad weights / sizes.
void validate_frame(const Frame& f, double norm_tol = 1e-10,
                    double weight_tol = 1e-12);

bool has_uniform_weights(const Frame& f, double tol = 1e-12);

/// Pair of frames sharing d, n and weights, together with the channel
/// parameter t.
struct MufPair {
  Frame x;
  Frame y;
  double t = 0.0;
};

/// Throws on d / n / weight mismatch between the two frames.
void validate_pair(const MufPair& p, double norm_tol = 1e-10);

MufPair swapped(const MufPair& p);

/// ||sum_i w_i pi_i - I/d||_F
double tightness_defect(const Frame& f);

struct InfoCompleteness {
  int rank = 0;
  double sigma_min = 0.0;
  bool complete = false;
};
inline constexpr double kInfoCompletenessThreshold = 1e-6;

/// Numerical rank of the n x d^2 matrix of vectorized projectors. Complete
/// iff the d^2-th singular value exceeds kInfoCompletenessThreshold.
InfoCompleteness info_completeness(const Frame& f);

struct MufRelationReport {
  double max_offdiag_dev = 0.0;  // | |<x_i|y_j>|^2 - (1-t)/d |, i != j
  double max_diag_dev = 0.0;     // | |<x_i|y_i>|^2 - (t(d^2-1)+1)/d |
  double max_bij_dev = 0.0;      // | b_ij - t |, i != j, after gauge fixing
  double max_bij_abs_dev = 0.0;  // | |b_ij| - |t| |, phase free
  /// b_ij = <x_j|x_i><y_i|y_j> (gauge fixed); b_ii is set to t.
  ComplexMatrix b;
  bool corner_gauge = false;
};

MufRelationReport muf_relation_check(const MufPair& p);

/// max_{i != j} | |<x_i|x_j>|^2 - 1/(d+1) | + tightness_defect.
double sic_check(const Frame& f);

/// ||(1/n) sum_i pi_i (x) pi_i - 2/(d(d+1)) Pi_sym||_F. Requires uniform
/// weights (throws UnsupportedWeightsError otherwise).
double design2_defect(const Frame& f);

inline constexpr double kGaugeDiagonalThreshold = 1e-8;

/// Rephases each y_i so <x_i|y_i> is real and nonnegative. When some
/// |<x_i|y_i>| falls below kGaugeDiagonalThreshold the diagonal gauge is
/// undefined and the first-row gauge is used instead: y_j is rephased so
/// b_{1j} has the phase of t.
MufPair gauge_fix_phases(const MufPair& p, bool* used_corner_gauge = nullptr);

}  // namespace muf
