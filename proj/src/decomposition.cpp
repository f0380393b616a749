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

#include "muf/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "muf/channels.hpp"
#include "muf/error.hpp"

namespace muf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Failed:
      return "failed";
    case Verdict::NotApplicableT0:
      return "not-applicable-t0";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

double decomposition_residual(const MufPair& p) {
  const int d = p.x.d;
  BipartiteMatrix acc = -pt_isotropic({d, p.t});
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    const ComplexVector v = kron(p.x.vectors[i], p.y.vectors[i]);
    acc.noalias() += p.x.weights[i] * (v * v.adjoint());
  }
  return acc.norm();
}

namespace {

void fill_common(const MufPair& p, DecompositionReport& r) {
  const double d2 = double(p.x.d) * p.x.d;
  r.t = p.t;
  r.residual_frobenius = decomposition_residual(p);
  r.weights_dev = 0.0;
  for (double w : p.x.weights)
    r.weights_dev = std::max(r.weights_dev, std::abs(w - 1.0 / d2));
  r.relations = muf_relation_check(p);
  r.tightness = {tightness_defect(p.x), tightness_defect(p.y)};
  const auto icx = info_completeness(p.x);
  const auto icy = info_completeness(p.y);
  r.ic_rank = {icx.rank, icy.rank};
  r.ic_sigma_min = {icx.sigma_min, icy.sigma_min};
}

void require_square_pair(const MufPair& p) {
  if (p.x.d != p.y.d || p.x.size() != p.y.size()) {
    throw DimensionError("pair frames disagree on d or n");
  }
}

}  // namespace

DecompositionReport theorem1_report(const MufPair& p,
                                    const VerificationTolerances& tol) {
  require_square_pair(p);
  DecompositionReport r;
  fill_common(p, r);
  if (std::abs(p.t) < kZeroT) {
    r.verdict = Verdict::NotApplicableT0;
    return r;
  }
  const ChannelParams cp{p.x.d, p.t};
  if (!cp.is_separable()) {
    throw RangeError("t=" + std::to_string(p.t) +
                     " is outside the separable range");
  }
  const int d2 = p.x.d * p.x.d;
  const bool ok =
      r.residual_frobenius < tol.residual &&
      static_cast<int>(p.x.size()) == d2 && r.weights_dev < tol.conclusion &&
      r.tightness.first < tol.conclusion &&
      r.tightness.second < tol.conclusion && r.ic_rank.first == d2 &&
      r.ic_rank.second == d2 && r.relations.max_offdiag_dev < tol.conclusion &&
      r.relations.max_diag_dev < tol.conclusion &&
      r.relations.max_bij_dev < tol.conclusion;
  r.verdict = ok ? Verdict::Verified : Verdict::Failed;
  return r;
}

DecompositionReport theorem2_check(const MufPair& p, double tol) {
  require_square_pair(p);
  if (!has_uniform_weights(p.x) || !has_uniform_weights(p.y)) {
    throw UnsupportedWeightsError("theorem2_check requires uniform weights");
  }
  DecompositionReport r;
  fill_common(p, r);
  const int d2 = p.x.d * p.x.d;
  r.hypotheses_hold = static_cast<int>(p.x.size()) == d2 &&
                      r.tightness.first < tol && r.tightness.second < tol &&
                      r.ic_rank.first == d2 && r.ic_rank.second == d2 &&
                      r.relations.max_offdiag_dev < tol &&
                      r.relations.max_diag_dev < tol;
  r.residual_bound = d2 * tol;
  if (!r.hypotheses_hold) {
    r.verdict = Verdict::Inconclusive;
  } else {
    r.verdict = r.residual_frobenius < r.residual_bound ? Verdict::Verified
                                                         : Verdict::Failed;
  }
  return r;
}

DecompositionReport zero_t_report(const MufPair& p,
                                  const VerificationTolerances& tol) {
  require_square_pair(p);
  DecompositionReport r;
  fill_common(p, r);
  r.verdict = r.residual_frobenius < tol.residual ? Verdict::Verified
                                                  : Verdict::Failed;
  return r;
}

double reconstruction_check(const MufPair& p, const ComplexMatrix& a,
                            double residual_tol) {
  if (std::abs(p.t) < kZeroT) {
    throw PreconditionError("reconstruction formula divides by t; t = 0");
  }
  const int d = p.x.d;
  if (a.rows() != d || a.cols() != d) {
    throw DimensionError("reconstruction_check: A must be d x d");
  }
  const double res = decomposition_residual(p);
  if (!(res < residual_tol)) {
    throw PreconditionError("pair is not a verified decomposition (residual " +
                            std::to_string(res) + ")");
  }
  const Complex tr_a = a.trace();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    const ComplexVector& x = p.x.vectors[i];
    const ComplexVector& y = p.y.vectors[i];
    const Complex tr_pi_a = x.dot(a * x);
    acc += p.x.weights[i] * (tr_pi_a - ((1.0 - p.t) / d) * tr_a) * outer(y);
  }
  return (a - (double(d) / p.t) * acc).norm();
}

}  // namespace muf
