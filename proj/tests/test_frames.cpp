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

#include "muf/error.hpp"
#include "muf/frames.hpp"
#include "muf/obstruction.hpp"
#include "muf/search.hpp"
#include "muf/wh_group.hpp"
#include "oracles.hpp"

using namespace muf;

namespace {

// Qubit state with Bloch vector (1,1,1)/sqrt(3); its Pauli orbit is a
// tetrahedron.
ComplexVector tetrahedral_fiducial() {
  const double z = 1.0 / std::sqrt(3.0);
  const double theta = std::acos(z);
  ComplexVector v(2);
  v(0) = std::cos(theta / 2);
  v(1) = std::polar(std::sin(theta / 2), std::numbers::pi / 4);
  return v;
}

Frame sic2() { return wh_orbit(WHContext(2), tetrahedral_fiducial()); }

Frame copies(int d, const ComplexVector& v) {
  return make_frame(d, std::vector<ComplexVector>(d * d, v));
}

Frame rotated(const Frame& f, const ComplexMatrix& u) {
  Frame g = f;
  for (auto& v : g.vectors) v = u * v;
  return g;
}

}  // namespace

TEST_CASE("oracle fiducial is a qubit SIC") {
  const auto o = oracle::orbit(2, tetrahedral_fiducial());
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = 0; j < o.size(); ++j)
      if (i != j) CHECK(std::norm(o[i].dot(o[j])) == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("frame validation") {
  Frame f = sic2();
  CHECK_NOTHROW(validate_frame(f));
  f.vectors[2] *= 1.1;
  CHECK_THROWS_AS(validate_frame(f), NormalizationError);
  f = sic2();
  f.weights[0] = 0.5;
  CHECK_THROWS_AS(validate_frame(f), InvalidArgumentError);
  f = sic2();
  f.vectors[1] = ComplexVector::Zero(3);
  CHECK_THROWS_AS(validate_frame(f), DimensionError);
  CHECK(has_uniform_weights(sic2()));
  MufPair p{sic2(), copies(3, basis_vector(3, 0)), 0.0};
  CHECK_THROWS(validate_pair(p));
}

TEST_CASE("tightness defect") {
  for (int d = 2; d <= 4; ++d) {
    const MufPair prod = basis_product_pair(ComplexMatrix::Identity(d, d), fourier_matrix(d));
    CHECK(tightness_defect(prod.x) < 1e-14);
    CHECK(tightness_defect(prod.y) < 1e-14);
    oracle::Rng rng(40 + d);
    CHECK(tightness_defect(wh_orbit(WHContext(d), rng.unit(d))) < 1e-10);
    const double expected = std::sqrt(std::pow(1.0 - 1.0 / d, 2) + (d - 1.0) / (d * d));
    CHECK(tightness_defect(copies(d, basis_vector(d, 0))) == doctest::Approx(expected));
  }
}

TEST_CASE("informational completeness") {
  const auto ic = info_completeness(sic2());
  CHECK(ic.rank == 4);
  CHECK(ic.complete);
  CHECK(ic.sigma_min > 1e-6);
  const MufPair prod = basis_product_pair(ComplexMatrix::Identity(2, 2), fourier_matrix(2));
  CHECK(info_completeness(prod.x).rank == 2);
  CHECK_FALSE(info_completeness(prod.x).complete);
  CHECK(info_completeness(copies(3, basis_vector(3, 1))).rank == 1);
  oracle::Rng rng(44);
  for (int d = 2; d <= 4; ++d) {
    std::vector<ComplexVector> vs;
    for (int i = 0; i < d * d; ++i) vs.push_back(rng.unit(d));
    const auto r = info_completeness(make_frame(d, vs));
    CHECK(r.rank <= d * d);
    if (r.rank == d * d) CHECK(r.sigma_min > 0.0);
  }
}

TEST_CASE("SIC and 2-design checks") {
  CHECK(sic_check(sic2()) < 1e-12);
  CHECK(design2_defect(sic2()) < 1e-12);
  for (int d = 2; d <= 4; ++d) {
    const MufPair prod = basis_product_pair(ComplexMatrix::Identity(d, d), fourier_matrix(d));
    // overlaps are 0 or 1, so the worst deviation from 1/(d+1) is d/(d+1)
    CHECK(sic_check(prod.x) == doctest::Approx(double(d) / (d + 1)));
  }
  // three qubit eigenbases: a 6-element 2-design
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i1(0.0, 1.0);
  std::vector<ComplexVector> mub;
  for (const auto& pr : std::vector<std::pair<Complex, Complex>>{
           {1.0, 0.0}, {0.0, 1.0}, {s, s}, {s, -s}, {s, s * i1}, {s, -s * i1}}) {
    ComplexVector v(2);
    v << pr.first, pr.second;
    mub.push_back(v);
  }
  CHECK(design2_defect(make_frame(2, mub)) < 1e-10);
  oracle::Rng rng(45);
  std::vector<ComplexVector> rnd;
  for (int i = 0; i < 4; ++i) rnd.push_back(rng.unit(2));
  CHECK(design2_defect(make_frame(2, rnd)) > 1e-3);
  Frame w = sic2();
  w.weights = {0.4, 0.2, 0.2, 0.2};
  CHECK_THROWS_AS(design2_defect(w), UnsupportedWeightsError);
}

TEST_CASE("unitary invariance") {
  oracle::Rng rng(46);
  for (int d = 2; d <= 4; ++d) {
    std::vector<ComplexVector> vs;
    for (int i = 0; i < d * d; ++i) vs.push_back(rng.unit(d));
    const Frame f = make_frame(d, vs);
    const Frame g = rotated(f, rng.unitary(d));
    CHECK(std::abs(tightness_defect(f) - tightness_defect(g)) < 1e-10);
    CHECK(std::abs(sic_check(f) - sic_check(g)) < 1e-10);
  }
}

TEST_CASE("MUF relations") {
  const Frame s = sic2();
  const auto r = muf_relation_check({s, s, 1.0 / 3});
  CHECK(r.max_diag_dev < 1e-8);
  CHECK(r.max_offdiag_dev < 1e-8);
  CHECK(r.max_bij_dev < 1e-8);
  CHECK(r.max_bij_abs_dev < 1e-8);
  CHECK((r.b - r.b.adjoint()).norm() < 1e-12);
  for (int d = 2; d <= 5; ++d) {
    const MufPair p = fourier_pair(d);
    const auto q = muf_relation_check(p);
    CHECK(q.max_offdiag_dev < 1e-12);
    CHECK(q.max_diag_dev < 1e-12);
  }
}

TEST_CASE("MUF relations at the lower endpoint") {
  SearchConfig cfg;
  cfg.d = 2;
  cfg.t = -1.0 / 3;
  cfg.restarts = 20;
  cfg.master_seed = 5;
  const SearchResult res = multistart_search(cfg);
  REQUIRE(res.status == SearchStatus::Found);
  const auto r = muf_relation_check(res.best_pair);
  for (std::size_t i = 0; i < res.best_pair.x.size(); ++i)
    CHECK(std::abs(res.best_pair.x.vectors[i].dot(res.best_pair.y.vectors[i])) < 1e-5);
  CHECK(r.max_diag_dev < 1e-8);
  CHECK(r.max_offdiag_dev < 1e-6);
  CHECK(r.max_bij_abs_dev < 1e-6);
  CHECK(r.max_bij_dev < 1e-5);
}

TEST_CASE("relations are symmetric in the pair") {
  oracle::Rng rng(47);
  for (int d = 2; d <= 3; ++d) {
    std::vector<ComplexVector> xs, ys;
    for (int i = 0; i < d * d; ++i) {
      xs.push_back(rng.unit(d));
      ys.push_back(rng.unit(d));
    }
    const MufPair p{make_frame(d, xs), make_frame(d, ys), 0.1};
    const auto a = muf_relation_check(p), b = muf_relation_check(swapped(p));
    CHECK(std::abs(a.max_offdiag_dev - b.max_offdiag_dev) < 1e-12);
    CHECK(std::abs(a.max_diag_dev - b.max_diag_dev) < 1e-12);
    CHECK(std::abs(a.max_bij_abs_dev - b.max_bij_abs_dev) < 1e-12);
  }
}

TEST_CASE("phase gauge") {
  ComplexVector x = basis_vector(2, 0), y(2);
  y << -0.5, std::sqrt(0.75);
  MufPair p{make_frame(2, {x, x, x, x}), make_frame(2, {y, y, y, y}), 0.0};
  const MufPair g = gauge_fix_phases(p);
  for (std::size_t i = 0; i < 4; ++i) {
    const Complex z = g.x.vectors[i].dot(g.y.vectors[i]);
    CHECK(z.real() == doctest::Approx(0.5));
    CHECK(z.imag() == doctest::Approx(0.0));
  }
  const MufPair gg = gauge_fix_phases(g);
  for (std::size_t i = 0; i < 4; ++i) CHECK((gg.y.vectors[i] - g.y.vectors[i]).norm() == 0.0);

  // projectors are unchanged
  oracle::Rng rng(48);
  std::vector<ComplexVector> xs, ys;
  for (int i = 0; i < 9; ++i) {
    xs.push_back(rng.unit(3));
    ys.push_back(rng.unit(3));
  }
  const MufPair q{make_frame(3, xs), make_frame(3, ys), 0.1};
  const MufPair gq = gauge_fix_phases(q);
  for (std::size_t i = 0; i < 9; ++i)
    CHECK((oracle::outer(gq.y.vectors[i]) - oracle::outer(q.y.vectors[i])).norm() < 1e-14);
}

TEST_CASE("corner gauge when the diagonal overlaps vanish") {
  // product pair: <x_i|y_i> = 0 for some i
  const MufPair p = basis_product_pair(ComplexMatrix::Identity(2, 2),
                                       ComplexMatrix::Identity(2, 2));
  bool corner = false;
  const MufPair g = gauge_fix_phases(p, &corner);
  CHECK(corner);
  for (std::size_t j = 1; j < g.x.size(); ++j) {
    const Complex b = g.x.vectors[j].dot(g.x.vectors[0]) * g.y.vectors[0].dot(g.y.vectors[j]);
    CHECK(b.imag() == doctest::Approx(0.0));
    CHECK(b.real() >= 0.0);
  }
}
