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

// Numerical search for frame pairs realizing the product decomposition.
//
// Parameters are ambient real coordinates: each complex d-vector is stored as
// interleaved (re, im) pairs and normalized at evaluation, so the loss lives
// on a product of projective spaces and all phases remain free. The general
// ansatz carries the 2 d^2 vectors x_0..x_{n-1}, y_0..y_{n-1}; the covariant
// ansatz carries two fiducials whose Weyl-Heisenberg orbits form the frames.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "muf/frames.hpp"
#include "muf/wh_group.hpp"

namespace muf {

using RealVector = Eigen::VectorXd;

enum class Ansatz { General, Covariant };
enum class SearchStatus { Found, NotFound };

std::string_view to_string(Ansatz a);
std::string_view to_string(SearchStatus s);
Ansatz parse_ansatz(std::string_view s);

struct SearchConfig {
  int d = 2;
  double t = 0.0;
  Ansatz ansatz = Ansatz::General;
  int restarts = 1;
  std::uint64_t master_seed = 0;
  int max_iterations = 4000;
  double success_tolerance = 1e-12;      // on the loss
  double stationarity_tolerance = 1e-10; // on the gradient norm
  /// Worker count for restarts; 0 means MUF_THREADS or the hardware count.
  int threads = 0;
  /// Refine found results past success_tolerance down to stationarity.
  bool polish = true;
};

/// Throws RangeError / InvalidArgumentError on a bad configuration.
void validate_config(const SearchConfig& cfg);

/// Worker count after applying cfg.threads, MUF_THREADS and the number of
/// restarts.
int resolve_thread_count(const SearchConfig& cfg);

struct SearchResult {
  MufPair best_pair;
  /// Covariant ansatz only: the two fiducials (normalized).
  std::optional<std::pair<ComplexVector, ComplexVector>> fiducials;
  RealVector params;
  double best_loss = 0.0;
  SearchStatus status = SearchStatus::NotFound;
  int restart_index = 0;
  int iterations = 0;
  std::uint64_t seed_used = 0;
  /// Loss after each accepted step.
  std::vector<double> loss_trace;
  bool line_search_failed = false;
};

struct LossGradient {
  double loss = 0.0;
  RealVector gradient;
};

Eigen::Index parameter_count(int d, Ansatz ansatz);

/// Squared Frobenius residual of the decomposition with uniform weights, and
/// its gradient in the raw coordinates. Throws NormalizationError when a raw
/// vector is zero.
LossGradient loss_and_gradient(const RealVector& params, const SearchConfig& cfg);
double loss_value(const RealVector& params, const SearchConfig& cfg);

RealVector encode_vectors(const std::vector<ComplexVector>& vs);
RealVector encode_pair(const MufPair& p);
/// Normalized vectors and uniform weights; t taken from cfg.
MufPair decode_pair(const RealVector& params, const SearchConfig& cfg);

/// Independent standard-normal real and imaginary parts, then normalized.
RealVector random_start(const SearchConfig& cfg, std::uint64_t seed);

/// Limited-memory quasi-Newton descent with backtracking (Armijo) line
/// search. Stops at success_tolerance, stationarity_tolerance or
/// max_iterations; a failed line search returns the best iterate.
SearchResult local_optimize(const RealVector& start, const SearchConfig& cfg);

/// Continues a found result down to stationarity; status is still judged
/// against cfg.success_tolerance.
SearchResult polish(const SearchResult& r, const SearchConfig& cfg);

/// cfg.restarts independent local runs seeded by master_seed ^ index, run on
/// a bounded worker pool; the minimum (loss, index) wins.
SearchResult multistart_search(const SearchConfig& cfg);

/// e_a = <x|W_a^dagger|x><y|W_a|y> - t for a != (0,0), row-major order.
std::vector<Complex> covariant_residual(const WHContext& ctx,
                                        const ComplexVector& x,
                                        const ComplexVector& y, double t);

/// multistart_search restricted to the covariant ansatz.
SearchResult covariant_search(const SearchConfig& cfg);

struct SweepResult {
  std::vector<SearchResult> path;
  bool completed = false;
  std::string abort_reason;
};

inline constexpr double kMinContinuationStep = 1e-6;

/// Path following in t from a found solution at cfg.t (the seed) to t_end:
/// each point starts from the previous accepted solution, and the step is
/// halved when the corrector fails. Aborts with a partial path when the step
/// drops below kMinContinuationStep.
SweepResult continuation_sweep(const SearchResult& seed, double t_end,
                               int steps, const SearchConfig& cfg);

}  // namespace muf
