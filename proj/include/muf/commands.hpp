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

// Command implementations behind the CLI. Each returns a RunReport whose
// exit_code is 0 (verified / found / informational), or 2 (failed /
// not found). Errors are thrown and map to exit code 1.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "muf/run_report.hpp"
#include "muf/search.hpp"

namespace muf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

struct VerifyOptions {
  std::string input;
  std::optional<double> t;
  VerificationTolerances tolerances;
};
RunReport cmd_verify(const VerifyOptions& o);

struct SearchOptions {
  SearchConfig config;
  std::string output;  // frame file for the best pair; empty to skip
};
RunReport cmd_search(const SearchOptions& o);

/// cmd_search at t = 1/(d+1), plus SIC and 2-design checks of the result.
RunReport cmd_sic(const SearchOptions& o);

struct SweepOptions {
  SearchConfig config;  // config.t is the start of the path
  double t_end = 0.0;
  int steps = 16;
  std::string output;  // branch file; empty to skip
};
RunReport cmd_sweep(const SweepOptions& o);

struct TwirlOptions {
  int d = 2;
  int trials = 20;
  std::uint64_t seed = 0;
};
inline constexpr double kTwirlTolerance = 1e-10;
RunReport cmd_twirl_check(const TwirlOptions& o);

enum class PairKind { Fourier, Product, Evading };
PairKind parse_pair_kind(std::string_view s);
std::string_view to_string(PairKind k);

struct ObstructionOptions {
  int d = 2;
  PairKind pair = PairKind::Fourier;
  std::uint64_t seed = 0;
};
RunReport cmd_obstruction(const ObstructionOptions& o);

struct ExampleOptions {
  int d = 2;
  PairKind pair = PairKind::Fourier;
  std::uint64_t seed = 0;
  std::string output;
};
/// Writes one of the t = 0 reference pairs to a frame file.
RunReport cmd_example(const ExampleOptions& o);

MufPair make_reference_pair(PairKind kind, int d, std::uint64_t seed);

}  // namespace muf
