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

#include <doctest.h>

#include "muf/decomposition.hpp"
#include "muf/error.hpp"
#include "muf/obstruction.hpp"
#include "muf/search.hpp"
#include "muf/wh_group.hpp"
#include "oracles.hpp"

using namespace muf;

namespace {

MufPair solve(int d, double t, std::uint64_t seed, Ansatz a = Ansatz::General) {
  SearchConfig cfg;
  cfg.d = d;
  cfg.t = t;
  cfg.ansatz = a;
  cfg.restarts = 30;
  cfg.master_seed = seed;
  const SearchResult r = a == Ansatz::Covariant ? covariant_search(cfg) : multistart_search(cfg);
  REQUIRE(r.status == SearchStatus::Found);
  return r.best_pair;
}

double oracle_residual(const MufPair& p) {
  return oracle::residual(p.x.vectors, p.y.vectors, p.x.weights, p.t);
}

}  // namespace

TEST_CASE("residual agrees with the oracle") {
  oracle::Rng rng(51);
  for (int d = 2; d <= 4; ++d) {
    std::vector<ComplexVector> xs, ys;
    for (int i = 0; i < d * d; ++i) {
      xs.push_back(rng.unit(d));
      ys.push_back(rng.unit(d));
    }
    const MufPair p{make_frame(d, xs), make_frame(d, ys), 0.1};
    CHECK(std::abs(decomposition_residual(p) - oracle_residual(p)) < 1e-13);
  }
}

TEST_CASE("t = 0 solutions have zero residual") {
  oracle::Rng rng(52);
  for (int d = 2; d <= 5; ++d) {
    const MufPair p = basis_product_pair(rng.unitary(d), rng.unitary(d));
    CHECK(decomposition_residual(p) < 1e-12);
    CHECK(oracle_residual(p) < 1e-12);
    const MufPair f = fourier_pair(d);
    CHECK(decomposition_residual(f) < 1e-12);
    CHECK(info_completeness(f.x).rank == d);
  }
}

TEST_CASE("broken normalization gives a positive residual") {
  MufPair p = fourier_pair(2);
  p.x.vectors[1] *= 1.1;
  CHECK(decomposition_residual(p) > 1e-3);
}

TEST_CASE("residual invariances") {
  const MufPair p = solve(2, 0.2, 3);
  const double r0 = decomposition_residual(p);
  oracle::Rng rng(53);
  MufPair q = p;
  for (auto& v : q.x.vectors) v *= std::polar(1.0, rng.uniform(0, 6.3));
  for (auto& v : q.y.vectors) v *= std::polar(1.0, rng.uniform(0, 6.3));
  CHECK(std::abs(decomposition_residual(q) - r0) < 1e-10);
  const ComplexMatrix u = rng.unitary(2);
  for (auto& v : q.x.vectors) v = u * v;
  for (auto& v : q.y.vectors) v = u * v;
  CHECK(std::abs(decomposition_residual(q) - r0) < 1e-10);
  CHECK(std::abs(decomposition_residual(swapped(p)) - r0) < 1e-10);
}

TEST_CASE("uniform weights minimize the residual") {
  const MufPair p = solve(2, 0.2, 4);
  const double r0 = decomposition_residual(p);
  for (double eps : {1e-3, -1e-3}) {
    MufPair q = p;
    q.x.weights[0] += eps;
    double s = 0.0;
    for (double w : q.x.weights) s += w;
    for (double& w : q.x.weights) w /= s;
    q.y.weights = q.x.weights;
    CHECK(decomposition_residual(q) > r0);
  }
}

TEST_CASE("necessary conditions report") {
  const MufPair p = solve(2, 0.2, 6);
  const auto rep = theorem1_report(p);
  CHECK(rep.verdict == Verdict::Verified);
  CHECK(rep.weights_dev < 1e-6);
  CHECK(rep.relations.max_diag_dev < 1e-5);
  CHECK(rep.relations.max_offdiag_dev < 1e-5);
  CHECK(rep.relations.max_bij_dev < 1e-5);
  CHECK(rep.ic_rank.first == 4);
  CHECK(rep.ic_rank.second == 4);
  CHECK(theorem1_report(swapped(p)).verdict == Verdict::Verified);

  CHECK(theorem1_report(fourier_pair(3)).verdict == Verdict::NotApplicableT0);

  MufPair broken = p;
  broken.y.vectors[0] = broken.x.vectors[1];
  const auto bad = theorem1_report(broken);
  CHECK(bad.verdict == Verdict::Failed);
  CHECK(bad.residual_frobenius > 1e-3);
  CHECK(bad.relations.max_offdiag_dev > 0.0);

  MufPair out_of_range = p;
  out_of_range.t = 0.5;
  CHECK_THROWS_AS(theorem1_report(out_of_range), RangeError);
}

TEST_CASE("necessary conditions at d = 3") {
  const MufPair p = solve(3, 0.1, 7);
  const auto rep = theorem1_report(p);
  CHECK(rep.verdict == Verdict::Verified);
  CHECK(theorem1_report(swapped(p)).verdict == Verdict::Verified);
}

TEST_CASE("sufficient conditions check") {
  const MufPair sic = solve(2, 1.0 / 3, 8, Ansatz::Covariant);
  const auto r = theorem2_check(sic);
  CHECK(r.hypotheses_hold);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.residual_frobenius < 1e-8);

  const MufPair prod = basis_product_pair(ComplexMatrix::Identity(2, 2), fourier_matrix(2));
  const auto rp = theorem2_check(prod);
  CHECK_FALSE(rp.hypotheses_hold);
  CHECK(rp.verdict == Verdict::Inconclusive);
  CHECK(rp.residual_frobenius < 1e-12);

  MufPair off = sic;
  off.t = 1.0 / 3 - 0.1;
  CHECK(theorem2_check(off).verdict == Verdict::Inconclusive);
}

TEST_CASE("reconstruction formula") {
  const MufPair p = solve(2, 0.2, 9);
  CHECK(reconstruction_check(p, ComplexMatrix::Identity(2, 2)) < 1e-6);
  for (std::size_t j = 0; j < p.y.size(); ++j)
    CHECK(reconstruction_check(p, oracle::outer(p.y.vectors[j])) < 1e-6);
  oracle::Rng rng(54);
  for (int k = 0; k < 5; ++k) CHECK(reconstruction_check(p, rng.hermitian(2)) < 1e-6);
  CHECK_THROWS_AS(reconstruction_check(fourier_pair(2), ComplexMatrix::Identity(2, 2)),
                  PreconditionError);
  MufPair broken = p;
  broken.y.vectors[0] = broken.x.vectors[1];
  CHECK_THROWS_AS(reconstruction_check(broken, ComplexMatrix::Identity(2, 2)),
                  PreconditionError);
}

TEST_CASE("t = 0 report") {
  const auto r = zero_t_report(basis_product_pair(ComplexMatrix::Identity(3, 3),
                                                  ComplexMatrix::Identity(3, 3)));
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.ic_rank.first == 3);
  MufPair p = fourier_pair(2);
  p.y.vectors[0] = p.x.vectors[0];
  CHECK(zero_t_report(p).verdict == Verdict::Failed);
}
