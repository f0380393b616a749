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

#include <stdexcept>
#include <string>

namespace muf {

/// Error categories. The numeric values are mirrored by muf_status in muf.h.
enum class ErrorCode {
  InvalidArgument = 1,
  Dimension = 2,
  Range = 3,
  Normalization = 4,
  Parse = 5,
  Io = 6,
  Precondition = 7,
  Generation = 8,
  UnsupportedWeights = 9,
  NotASolution = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define MUF_DEFINE_ERROR(Name, Code)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

MUF_DEFINE_ERROR(InvalidArgumentError, InvalidArgument)
MUF_DEFINE_ERROR(DimensionError, Dimension)
MUF_DEFINE_ERROR(RangeError, Range)
MUF_DEFINE_ERROR(NormalizationError, Normalization)
MUF_DEFINE_ERROR(ParseError, Parse)
MUF_DEFINE_ERROR(IoError, Io)
MUF_DEFINE_ERROR(PreconditionError, Precondition)
MUF_DEFINE_ERROR(GenerationError, Generation)
MUF_DEFINE_ERROR(UnsupportedWeightsError, UnsupportedWeights)
MUF_DEFINE_ERROR(NotASolutionError, NotASolution)

#undef MUF_DEFINE_ERROR

}  // namespace muf
