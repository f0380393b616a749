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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "muf/decomposition.hpp"
#include "muf/search.hpp"

namespace muf {

/// Self-contained record of one command run. Everything except `runtime`
/// (wall time, worker count) is a deterministic function of the command
/// and its seed.
struct RunReport {
  std::string command;
  std::string invocation;  // command line echo, optional
  std::string verdict;
  std::optional<std::uint64_t> master_seed;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  nlohmann::ordered_json runtime = nlohmann::ordered_json::object();
  int exit_code = 0;
};

nlohmann::ordered_json to_json(const RunReport& r);
/// The report without `runtime`.
nlohmann::ordered_json payload_json(const RunReport& r);

/// Line-oriented "key: value"; nested keys are joined with '.'.
std::string render_text(const RunReport& r);

nlohmann::ordered_json to_json(const DecompositionReport& r);
nlohmann::ordered_json to_json(const SearchConfig& c);
nlohmann::ordered_json to_json(const SearchResult& r);
nlohmann::ordered_json complex_vector_json(const ComplexVector& v);

}  // namespace muf
