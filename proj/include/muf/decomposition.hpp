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

// The product decomposition
//
//   sum_i w_i |x_i><x_i| (x) |y_i><y_i| = (t/d) U_SW + ((1-t)/d^2) I
//
// and the frame relations that are equivalent to it for t != 0.

#pragma once

#include <string_view>
#include <utility>

#include "muf/frames.hpp"

namespace muf {

enum class Verdict { Verified, Failed, NotApplicableT0, Inconclusive };

std::string_view to_string(Verdict v);

struct VerificationTolerances {
  /// Frobenius residual of the decomposition.
  double residual = 1e-8;
  /// Weight, tightness and relation deviations. Errors are amplified by
  /// roughly d/|t| when passing from the residual to the relations.
  double conclusion = 1e-5;
};

/// |t| below this is treated as t = 0.
inline constexpr double kZeroT = 1e-12;

struct DecompositionReport {
  double t = 0.0;
  double residual_frobenius = 0.0;
  double weights_dev = 0.0;  // max |w_i - 1/d^2|
  MufRelationReport relations;
  std::pair<double, double> tightness{0.0, 0.0};
  std::pair<int, int> ic_rank{0, 0};
  std::pair<double, double> ic_sigma_min{0.0, 0.0};
  /// Converse checks: whether the frame hypotheses held, and the
  /// residual bound they imply.
  bool hypotheses_hold = false;
  double residual_bound = 0.0;
  Verdict verdict = Verdict::Failed;
};

/// ||sum_i w_i pi_i (x) rho_i - pt_isotropic(t, d)||_F
double decomposition_residual(const MufPair& p);

/// Verifies the full conclusion set for a decomposition at t != 0: equal
/// weights, tight and informationally complete frames, the overlap
/// relations and b_ij = t after gauge fixing. At t = 0 the sub-checks are
/// still reported but the verdict is NotApplicableT0.
DecompositionReport theorem1_report(const MufPair& p,
                                    const VerificationTolerances& tol = {});

/// Reverse direction: if both frames are tight, informationally complete and
/// satisfy the overlap relations within tol, the residual must be below
/// d^2 * tol. Hypothesis failure gives Inconclusive, never Failed.
DecompositionReport theorem2_check(const MufPair& p, double tol = 1e-8);

/// t = 0 mode: the verdict depends on the residual only. Relations and
/// informational completeness are reported but not enforced.
DecompositionReport zero_t_report(const MufPair& p,
                                  const VerificationTolerances& tol = {});

/// ||A - (d/t) sum_i w_i (tr(pi_i A) - ((1-t)/d) tr A) rho_i||_F.
/// Throws PreconditionError for t = 0 or an unverified pair.
double reconstruction_check(const MufPair& p, const ComplexMatrix& a,
                            double residual_tol = 1e-8);

}  // namespace muf
