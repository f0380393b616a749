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

#include "muf/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "muf/error.hpp"

namespace muf {

namespace {

// Gram matrix G_ij = <a_i|b_j>.
ComplexMatrix cross_gram(const Frame& a, const Frame& b) {
  const auto n = static_cast<Eigen::Index>(a.size());
  const auto m = static_cast<Eigen::Index>(b.size());
  ComplexMatrix g(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = a.vectors[i].dot(b.vectors[j]);  // conjugates the left side
  return g;
}

Complex unit_phase(Complex z) { return z / std::abs(z); }

}  // namespace

Frame make_frame(int d, std::vector<ComplexVector> vectors) {
  Frame f;
  f.d = d;
  const auto n = vectors.size();
  f.vectors = std::move(vectors);
  f.weights.assign(n, n ? 1.0 / double(n) : 0.0);
  return f;
}

void validate_frame(const Frame& f, double norm_tol, double weight_tol) {
  if (f.d < 1) throw InvalidArgumentError("frame dimension must be >= 1");
  if (f.vectors.empty()) throw InvalidArgumentError("frame has no vectors");
  if (f.weights.size() != f.vectors.size()) {
    throw InvalidArgumentError("frame has " + std::to_string(f.vectors.size()) +
                               " vectors but " +
                               std::to_string(f.weights.size()) + " weights");
  }
  double wsum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.vectors[i].size() != f.d) {
      throw DimensionError("vector " + std::to_string(i) + " has length " +
                           std::to_string(f.vectors[i].size()) +
                           ", expected d=" + std::to_string(f.d));
    }
    const double norm = f.vectors[i].norm();
    if (!(std::abs(norm - 1.0) <= norm_tol)) {
      throw NormalizationError("vector " + std::to_string(i) + " has norm " +
                               std::to_string(norm) + ", expected 1");
    }
    if (!(f.weights[i] >= 0.0)) {
      throw InvalidArgumentError("weight " + std::to_string(i) +
                                 " is negative");
    }
    wsum += f.weights[i];
  }
  if (!(std::abs(wsum - 1.0) <= weight_tol)) {
    throw InvalidArgumentError("weights sum to " + std::to_string(wsum) +
                               ", expected 1");
  }
}

bool has_uniform_weights(const Frame& f, double tol) {
  const double w = 1.0 / double(f.size());
  return std::all_of(f.weights.begin(), f.weights.end(),
                     [&](double v) { return std::abs(v - w) <= tol; });
}

void validate_pair(const MufPair& p, double norm_tol) {
  validate_frame(p.x, norm_tol);
  validate_frame(p.y, norm_tol);
  if (p.x.d != p.y.d) throw DimensionError("frames have different d");
  if (p.x.size() != p.y.size()) throw DimensionError("frames have different n");
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (p.x.weights[i] != p.y.weights[i]) {
      throw InvalidArgumentError("frames disagree on weight " +
                                 std::to_string(i));
    }
  }
}

MufPair swapped(const MufPair& p) { return {p.y, p.x, p.t}; }

double tightness_defect(const Frame& f) {
  ComplexMatrix s = ComplexMatrix::Zero(f.d, f.d);
  for (std::size_t i = 0; i < f.size(); ++i)
    s += f.weights[i] * outer(f.vectors[i]);
  s -= ComplexMatrix::Identity(f.d, f.d) / double(f.d);
  return s.norm();
}

InfoCompleteness info_completeness(const Frame& f) {
  const int d = f.d;
  const int d2 = d * d;
  ComplexMatrix rows(static_cast<Eigen::Index>(f.size()), d2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ComplexMatrix p = outer(f.vectors[i]);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) rows(Eigen::Index(i), a * d + b) = p(a, b);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(rows);
  const auto& s = svd.singularValues();
  InfoCompleteness out;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > kInfoCompletenessThreshold) ++out.rank;
  out.sigma_min = s.size() >= d2 ? s(d2 - 1) : 0.0;
  out.complete = out.sigma_min > kInfoCompletenessThreshold;
  return out;
}

MufPair gauge_fix_phases(const MufPair& p, bool* used_corner_gauge) {
  MufPair out = p;
  const std::size_t n = p.x.size();
  bool corner = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(p.x.vectors[i].dot(p.y.vectors[i])) < kGaugeDiagonalThreshold) {
      corner = true;
      break;
    }
  }
  if (!corner) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = out.x.vectors[i].dot(out.y.vectors[i]);
      if (z.imag() != 0.0 || z.real() < 0.0)
        out.y.vectors[i] *= std::conj(unit_phase(z));
    }
  } else if (n > 0) {
    // b_1j = <x_j|x_1><y_1|y_j>; rephasing y_j by e^{i theta} multiplies it
    // by e^{i theta}.
    const Complex target = p.t < 0.0 ? Complex(-1.0) : Complex(1.0);
    for (std::size_t j = 1; j < n; ++j) {
      const Complex b = out.x.vectors[j].dot(out.x.vectors[0]) *
                        out.y.vectors[0].dot(out.y.vectors[j]);
      if (std::abs(b) < kGaugeDiagonalThreshold) continue;
      const Complex phase = target * std::conj(unit_phase(b));
      if (phase != Complex(1.0)) out.y.vectors[j] *= phase;
    }
  }
  if (used_corner_gauge) *used_corner_gauge = corner;
  return out;
}

MufRelationReport muf_relation_check(const MufPair& p) {
  const double d = p.x.d;
  const double t = p.t;
  const double off_target = (1.0 - t) / d;
  const double diag_target = (t * (d * d - 1.0) + 1.0) / d;

  MufRelationReport r;
  const MufPair g = gauge_fix_phases(p, &r.corner_gauge);
  const ComplexMatrix xy = cross_gram(g.x, g.y);
  const ComplexMatrix xx = cross_gram(g.x, g.x);
  const ComplexMatrix yy = cross_gram(g.y, g.y);
  const auto n = xy.rows();
  r.b = ComplexMatrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        r.max_diag_dev =
            std::max(r.max_diag_dev, std::abs(std::norm(xy(i, i)) - diag_target));
        r.b(i, i) = t;
        continue;
      }
      r.max_offdiag_dev =
          std::max(r.max_offdiag_dev, std::abs(std::norm(xy(i, j)) - off_target));
      const Complex b = xx(j, i) * yy(i, j);
      r.b(i, j) = b;
      r.max_bij_dev = std::max(r.max_bij_dev, std::abs(b - t));
      r.max_bij_abs_dev =
          std::max(r.max_bij_abs_dev, std::abs(std::abs(b) - std::abs(t)));
    }
  }
  return r;
}

double sic_check(const Frame& f) {
  const ComplexMatrix g = cross_gram(f, f);
  const double target = 1.0 / (f.d + 1.0);
  double dev = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (i != j) dev = std::max(dev, std::abs(std::norm(g(i, j)) - target));
  return dev + tightness_defect(f);
}

double design2_defect(const Frame& f) {
  if (!has_uniform_weights(f)) {
    throw UnsupportedWeightsError("design2_defect requires uniform weights");
  }
  const int d = f.d;
  ComplexMatrix acc = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& v : f.vectors) acc += outer(kron(v, v));
  acc /= double(f.size());
  acc -= (2.0 / (d * (d + 1.0))) * sym_asym_projectors(d).sym;
  return acc.norm();
}

}  // namespace muf
