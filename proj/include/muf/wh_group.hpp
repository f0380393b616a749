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

// Weyl-Heisenberg displacement operators
//
//   W_a = tau^(a1 a2) S^a1 C^a2,   tau = exp(2 pi i (d+1) / (2d)),
//
// with S the cyclic shift |i> -> |i+1> and C the clock diag(omega^i),
// omega = tau^2. Phases are evaluated from integer exponents reduced mod 2d,
// so arbitrarily large labels do not drift.

#pragma once

#include <cstdint>
#include <vector>

#include "muf/frames.hpp"
#include "muf/matrix_core.hpp"

namespace muf {

struct WHLabel {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  friend bool operator==(const WHLabel&, const WHLabel&) = default;
  WHLabel operator+(const WHLabel& o) const { return {a1 + o.a1, a2 + o.a2}; }
  WHLabel operator-() const { return {-a1, -a2}; }
  WHLabel operator*(std::int64_t k) const { return {a1 * k, a2 * k}; }
};

/// <a,b> = a2 b1 - b2 a1.
inline std::int64_t symplectic(const WHLabel& a, const WHLabel& b) {
  return a.a2 * b.a1 - b.a2 * a.a1;
}

class WHContext {
 public:
  explicit WHContext(int d);

  int dim() const { return d_; }
  Complex tau() const { return tau_power(1); }
  Complex omega() const { return tau_power(2); }
  /// tau^k for any integer k.
  Complex tau_power(std::int64_t k) const;

  const ComplexMatrix& shift() const { return shift_; }
  const ComplexMatrix& clock() const { return clock_; }

  /// Labels reduced into {0..d-1}^2.
  WHLabel canonical(const WHLabel& a) const;

  /// W_a for any integer label.
  ComplexMatrix weyl_operator(const WHLabel& a) const;

  /// Cached W_a for the fundamental domain, row-major index a1*d + a2.
  const std::vector<ComplexMatrix>& fundamental_operators() const {
    return ops_;
  }
  std::vector<WHLabel> fundamental_labels() const;

  /// W_a |v> without forming the matrix.
  ComplexVector apply(const WHLabel& a, const ComplexVector& v) const;
  /// <v|W_a|v>
  Complex expectation(const WHLabel& a, const ComplexVector& v) const;

 private:
  int d_;
  std::vector<Complex> roots_;  // tau^k, k in [0, 2d)
  ComplexMatrix shift_;
  ComplexMatrix clock_;
  std::vector<ComplexMatrix> ops_;
};

struct WHRelationReport {
  double product_dev = 0.0;     // W_a W_b vs tau^<a,b> W_{a+b}
  double adjoint_dev = 0.0;     // W_a^dagger vs W_{-a}
  double periodicity_dev = 0.0; // W_{a+db} vs tau^{d<a,b>} W_a
  double max_dev() const;
};

WHRelationReport wh_relations_check(const WHContext& ctx);

/// F = d^{-1/2} sum_{kl} omega^{kl} |k><l|
ComplexMatrix fourier_matrix(int d);

/// Orbit {W_a |fiducial>} in row-major label order, uniform weights.
Frame wh_orbit(const WHContext& ctx, const ComplexVector& fiducial);

/// sum_a (W_a (x) W_a) X (W_a (x) W_a)^dagger
BipartiteMatrix twirl_conjugation(const WHContext& ctx, const BipartiteMatrix& x);

/// sum_a tr(X (W_a^dagger (x) W_a)) W_a (x) W_a^dagger; equal to the twirl.
BipartiteMatrix twirl_coefficient_form(const WHContext& ctx,
                                       const BipartiteMatrix& x);

}  // namespace muf
