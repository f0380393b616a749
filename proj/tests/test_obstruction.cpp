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

#include <set>

#include "muf/decomposition.hpp"
#include "muf/error.hpp"
#include "muf/obstruction.hpp"
#include "oracles.hpp"

using namespace muf;

TEST_CASE("character tables of the reference fiducials") {
  for (int d = 2; d <= 6; ++d) {
    const WHContext ctx(d);
    const CharTable c0 = char_table(ctx, basis_vector(d, 0));
    const CharTable cf = char_table(ctx, oracle::fourier(d) * oracle::e(d, 0));
    for (int a1 = 0; a1 < d; ++a1)
      for (int a2 = 0; a2 < d; ++a2) {
        const WHLabel a{a1, a2};
        CHECK((std::abs(c0.at(a)) < 1e-12) == (a1 != 0));
        CHECK((std::abs(cf.at(a)) < 1e-12) == (a2 != 0));
        if (a1 == 0) CHECK(std::abs(c0.at(a) - Complex(1.0)) < 1e-12);
      }
    oracle::Rng rng(70 + d);
    const CharTable cr = char_table(ctx, rng.unit(d));
    CHECK(std::abs(cr.at({0, 0}) - Complex(1.0)) < 1e-12);
    for (const auto& v : cr.values) CHECK(std::abs(v) <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(char_table(WHContext(2), 2.0 * basis_vector(2, 0)), NormalizationError);
}

TEST_CASE("the Fourier pair is obstructed") {
  for (int d = 2; d <= 5; ++d) {
    const WHContext ctx(d);
    const ComplexVector x = basis_vector(d, 0), y = fourier_matrix(d) * x;
    const ObstructionReport r = prop4_obstruction(ctx, x, y);
    CHECK(r.obstructed);
    CHECK(r.residual_t0 < 1e-12);
    std::set<std::pair<long, long>> got, expected;
    for (const auto& a : r.witnesses) got.insert({long(a.a1), long(a.a2)});
    for (int a1 = 1; a1 < d; ++a1)
      for (int a2 = 1; a2 < d; ++a2) expected.insert({a1, a2});
    CHECK(got == expected);
    CHECK(prop4_obstruction(ctx, y, x).obstructed);
  }
  const WHContext ctx(2);
  const ComplexVector x = basis_vector(2, 0), y = fourier_matrix(2) * x;
  CHECK(std::abs(ctx.expectation({1, 1}, x)) < 1e-10);
  CHECK(std::abs(ctx.expectation({1, 1}, y)) < 1e-10);
}

TEST_CASE("evading fiducials") {
  for (int d = 2; d <= 5; ++d) {
    const WHContext ctx(d);
    for (std::uint64_t seed : {1ULL, 2ULL, 12345ULL}) {
      const ComplexVector y = evading_fiducial(d, seed);
      CHECK((y - evading_fiducial(d, seed)).norm() == 0.0);
      for (int i = 0; i < d; ++i) CHECK(std::abs(std::abs(y(i)) - 1.0 / std::sqrt(d)) < 1e-12);
      double min_char = 1.0;
      for (const auto& a : ctx.fundamental_labels())
        if (a.a1 != 0) min_char = std::min(min_char, std::abs(ctx.expectation(a, y)));
      CHECK(min_char > 1e-6);
      const ComplexVector x = basis_vector(d, 0);
      const ObstructionReport r = prop4_obstruction(ctx, x, y);
      CHECK_FALSE(r.obstructed);
      CHECK(r.witnesses.empty());
      CHECK(r.residual_t0 < 1e-10);
      CHECK_FALSE(prop4_obstruction(ctx, y, x).obstructed);
      const MufPair p = evading_pair(d, seed);
      CHECK(decomposition_residual(p) < 1e-10);
      CHECK(info_completeness(p.x).rank == d);
      const auto rel = muf_relation_check(p);
      CHECK(rel.max_offdiag_dev < 1e-10);
      CHECK(rel.max_diag_dev < 1e-10);
    }
  }
  CHECK_THROWS_AS(evading_fiducial(1, 0), InvalidArgumentError);
}

TEST_CASE("obstruction requires a t = 0 solution") {
  const WHContext ctx(3);
  oracle::Rng rng(75);
  CHECK_THROWS_AS(prop4_obstruction(ctx, rng.unit(3), rng.unit(3)), NotASolutionError);
}

TEST_CASE("basis product pairs") {
  oracle::Rng rng(76);
  const auto a = rng.unitary(3), b = rng.unitary(3);
  const MufPair p = basis_product_pair(a, b);
  CHECK(p.x.size() == 9);
  CHECK((p.x.vectors[5] - a.col(1)).norm() == 0.0);
  CHECK((p.y.vectors[5] - b.col(2)).norm() == 0.0);
  CHECK_THROWS_AS(basis_product_pair(a, rng.unitary(2)), DimensionError);
}
