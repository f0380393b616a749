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

// JSON frame files.
//
//   {
//     "format_version": 1,
//     "d": 2, "n": 4,
//     "t": 0.0,                      optional
//     "weights": [0.25, ...],        optional, uniform when absent
//     "ordering": "wh-row-major",    optional
//     "allow_non_square": false,     optional, permits n != d^2
//     "residual": 1e-17,             optional, informational
//     "x": [[[re, im], ...], ...],   n vectors of d complex entries
//     "y": [[[re, im], ...], ...]
//   }
//
// Doubles are written in shortest round-trip form, so save/load is lossless.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "muf/frames.hpp"

namespace muf {

inline constexpr int kFrameFormatVersion = 1;
inline constexpr double kLoadNormTolerance = 1e-8;

struct FrameFile {
  int format_version = kFrameFormatVersion;
  int d = 0;
  std::optional<double> t;
  std::optional<std::vector<double>> weights;
  std::string ordering;
  bool allow_non_square = false;
  std::optional<double> residual;
  std::vector<ComplexVector> x;
  std::vector<ComplexVector> y;
};

/// Throws ParseError / DimensionError / NormalizationError naming the
/// offending field or index.
FrameFile frame_file_from_json(const nlohmann::json& j);
nlohmann::ordered_json frame_file_to_json(const FrameFile& f);

FrameFile read_frame_file(const std::string& path);
void write_frame_file(const FrameFile& f, const std::string& path);

FrameFile to_frame_file(const MufPair& p, std::string ordering = {});

/// The pair stored in f, with t replaced by t_override when given. Throws
/// ParseError when neither provides t.
MufPair to_pair(const FrameFile& f, std::optional<double> t_override = {});

MufPair load_frames(const std::string& path);
void save_frames(const MufPair& p, const std::string& path,
                 std::string ordering = {});

}  // namespace muf
