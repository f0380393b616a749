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

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "muf/commands.hpp"
#include "muf/error.hpp"
#include "muf/frame_io.hpp"
#include "muf/obstruction.hpp"
#include "oracles.hpp"

using namespace muf;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("muf_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

nlohmann::json minimal(int n) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["d"] = 2;
  j["n"] = n;
  j["t"] = 0.0;
  nlohmann::json vs = nlohmann::json::array();
  for (int i = 0; i < n; ++i) vs.push_back({{1.0, 0.0}, {0.0, 0.0}});
  j["x"] = vs;
  j["y"] = vs;
  return j;
}

}  // namespace

TEST_CASE("round trip is lossless") {
  TempDir tmp;
  oracle::Rng rng(81);
  std::vector<ComplexVector> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.push_back(rng.unit(2));
    ys.push_back(rng.unit(2));
  }
  const MufPair p{make_frame(2, xs), make_frame(2, ys), 0.123456789012345678};
  save_frames(p, tmp.file("p.json"));
  const MufPair q = load_frames(tmp.file("p.json"));
  CHECK(q.t == p.t);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(q.x.vectors[i] == p.x.vectors[i]);
    CHECK(q.y.vectors[i] == p.y.vectors[i]);
  }
  CHECK(q.x.weights == p.x.weights);
}

TEST_CASE("structured load errors") {
  TempDir tmp;
  {
    nlohmann::json j = minimal(4);
    j["n"] = 3;
    write_text(tmp.file("n3.json"), j.dump());
    try {
      load_frames(tmp.file("n3.json"));
      FAIL("expected a dimension error");
    } catch (const DimensionError& e) {
      CHECK(std::string(e.what()).find("expected n=4") != std::string::npos);
    }
  }
  {
    nlohmann::json j = minimal(4);
    j["x"][2] = {{1.0, 0.0}, {0.1, 0.0}};
    write_text(tmp.file("norm.json"), j.dump());
    try {
      load_frames(tmp.file("norm.json"));
      FAIL("expected a normalization error");
    } catch (const NormalizationError& e) {
      CHECK(std::string(e.what()).find("x[2]") != std::string::npos);
    }
  }
  {
    nlohmann::json j = minimal(4);
    j["x"][0][0] = {1.0 + 1e-9, 0.0};
    write_text(tmp.file("tiny.json"), j.dump());
    CHECK_NOTHROW(load_frames(tmp.file("tiny.json")));
  }
  write_text(tmp.file("bad.json"), "{ not json");
  CHECK_THROWS_AS(load_frames(tmp.file("bad.json")), ParseError);
  CHECK_THROWS_AS(load_frames(tmp.file("missing.json")), IoError);
  {
    nlohmann::json j = minimal(4);
    j.erase("t");
    write_text(tmp.file("not.json"), j.dump());
    CHECK_THROWS_AS(load_frames(tmp.file("not.json")), ParseError);
    CHECK(to_pair(read_frame_file(tmp.file("not.json")), 0.2).t == 0.2);
  }
  {
    nlohmann::json j = minimal(6);
    j["allow_non_square"] = true;
    write_text(tmp.file("six.json"), j.dump());
    CHECK(load_frames(tmp.file("six.json")).x.size() == 6);
  }
  {
    nlohmann::json j = minimal(4);
    j["format_version"] = 2;
    CHECK_THROWS_AS(frame_file_from_json(j), ParseError);
  }
}

TEST_CASE("verify command exit codes") {
  TempDir tmp;
  save_frames(fourier_pair(2), tmp.file("fourier.json"));
  const RunReport ok = cmd_verify({tmp.file("fourier.json"), {}, {}});
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.verdict == "VERIFIED (t=0 mode: IC reported, not enforced)");
  CHECK(ok.result["residual_frobenius"].get<double>() < 1e-12);

  const RunReport shifted = cmd_verify({tmp.file("fourier.json"), 0.1, {}});
  CHECK(shifted.exit_code == kExitNegative);
  CHECK(shifted.verdict == "FAILED");

  MufPair broken = fourier_pair(2);
  broken.y.vectors[1] = broken.x.vectors[1];
  save_frames(broken, tmp.file("broken.json"));
  const RunReport bad = cmd_verify({tmp.file("broken.json"), {}, {}});
  CHECK(bad.exit_code == kExitNegative);
  CHECK(bad.result["residual_frobenius"].get<double>() > 1e-3);

  CHECK_THROWS_AS(cmd_verify({tmp.file("nothing.json"), {}, {}}), IoError);
}

TEST_CASE("search command archives its result") {
  TempDir tmp;
  SearchOptions o;
  o.config.d = 2;
  o.config.t = 0.2;
  o.config.restarts = 10;
  o.config.master_seed = 7;
  o.output = tmp.file("found.json");
  const RunReport r = cmd_search(o);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.verdict == "FOUND");
  CHECK(r.result["theorem1"]["verdict"] == "verified");
  CHECK(cmd_verify({o.output, {}, {}}).exit_code == kExitOk);

  // an unconverged best effort is archived but rejected by the verifier
  o.config.d = 4;
  o.config.t = 0.1;
  o.config.restarts = 1;
  o.config.max_iterations = 20;
  o.output = tmp.file("best.json");
  const RunReport n = cmd_search(o);
  CHECK(n.exit_code == kExitNegative);
  CHECK(n.verdict == "NOT_FOUND");
  const FrameFile f = read_frame_file(o.output);
  REQUIRE(f.residual.has_value());
  CHECK(*f.residual > 1e-8);
  CHECK(cmd_verify({o.output, {}, {}}).exit_code == kExitNegative);
}

TEST_CASE("reports are deterministic") {
  SearchOptions o;
  o.config.d = 2;
  o.config.t = 0.1;
  o.config.restarts = 5;
  o.config.master_seed = 11;
  o.config.threads = 1;
  const auto a = payload_json(cmd_search(o)).dump();
  o.config.threads = 4;
  const auto b = payload_json(cmd_search(o)).dump();
  CHECK(a == b);
  const RunReport r = cmd_search(o);
  CHECK(to_json(r).contains("runtime"));
  CHECK_FALSE(payload_json(r).contains("runtime"));
  const std::string text = render_text(r);
  CHECK(text.find("verdict: FOUND\n") != std::string::npos);
  CHECK(text.find("result.best_loss: ") != std::string::npos);
}

TEST_CASE("sic, twirl and obstruction commands") {
  SearchOptions o;
  o.config.d = 2;
  o.config.ansatz = Ansatz::Covariant;
  o.config.restarts = 5;
  o.config.master_seed = 1;
  const RunReport s = cmd_sic(o);
  CHECK(s.exit_code == kExitOk);
  CHECK(s.result["sic"]["sic_check_x"].get<double>() < 1e-6);
  CHECK(s.result["sic"]["max_projector_difference"].get<double>() < 1e-6);

  const RunReport tw = cmd_twirl_check({3, 20, 0});
  CHECK(tw.exit_code == kExitOk);
  CHECK(tw.result["max_relative_deviation"].get<double>() < 1e-10);

  const RunReport ob = cmd_obstruction({4, PairKind::Fourier, 0});
  CHECK(ob.exit_code == kExitOk);
  CHECK(ob.verdict.rfind("obstructed; witness a=(1,1)", 0) == 0);
  const RunReport ev = cmd_obstruction({4, PairKind::Evading, 3});
  CHECK(ev.exit_code == kExitOk);
  CHECK(ev.verdict == "not obstructed");
  CHECK_THROWS_AS(cmd_obstruction({3, PairKind::Product, 0}), InvalidArgumentError);
  CHECK(parse_pair_kind("evading") == PairKind::Evading);
  CHECK_THROWS_AS(parse_pair_kind("nope"), InvalidArgumentError);
}

TEST_CASE("sweep command writes a branch file") {
  TempDir tmp;
  SweepOptions o;
  o.config.d = 2;
  o.config.t = 0.2;
  o.config.restarts = 5;
  o.config.master_seed = 2;
  o.t_end = 0.05;
  o.steps = 6;
  o.output = tmp.file("branch.json");
  const RunReport r = cmd_sweep(o);
  CHECK(r.exit_code == kExitOk);
  std::ifstream in(o.output);
  const nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["kind"] == "branch");
  REQUIRE(j["points"].size() == 7);
  const FrameFile last = frame_file_from_json(j["points"][6]["frames"]);
  CHECK(*last.t == doctest::Approx(0.05));
  CHECK(decomposition_residual(to_pair(last)) < 1e-8);
}
