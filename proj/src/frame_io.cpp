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

#include "muf/frame_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "muf/error.hpp"

namespace muf {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing required field '") + key + "'");
  }
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::vector<ComplexVector> parse_vectors(const json& j, const char* name,
                                         int d, std::size_t n) {
  if (!j.is_array()) throw ParseError(std::string(name) + ": expected an array");
  if (j.size() != n) {
    throw DimensionError(std::string(name) + " has " + std::to_string(j.size()) +
                         " vectors, expected n=" + std::to_string(n));
  }
  std::vector<ComplexVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
    const json& v = j[i];
    if (!v.is_array()) throw ParseError(where + ": expected an array");
    if (v.size() != static_cast<std::size_t>(d)) {
      throw DimensionError(where + " has " + std::to_string(v.size()) +
                           " entries, expected d=" + std::to_string(d));
    }
    ComplexVector z(d);
    for (int k = 0; k < d; ++k) {
      const json& c = v[k];
      const std::string cw = where + "[" + std::to_string(k) + "]";
      if (!c.is_array() || c.size() != 2) {
        throw ParseError(cw + ": complex entries are [re, im] pairs");
      }
      z(k) = Complex(as_number(c[0], cw), as_number(c[1], cw));
    }
    const double norm = z.norm();
    if (!(std::abs(norm - 1.0) <= kLoadNormTolerance)) {
      std::ostringstream msg;
      msg << where << ": norm " << norm << " deviates from 1 by more than "
          << kLoadNormTolerance;
      throw NormalizationError(msg.str());
    }
    out.push_back(std::move(z));
  }
  return out;
}

ordered_json vectors_to_json(const std::vector<ComplexVector>& vs) {
  ordered_json out = ordered_json::array();
  for (const auto& v : vs) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k)
      row.push_back({v(k).real(), v(k).imag()});
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

FrameFile frame_file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("frame file must be a JSON object");
  FrameFile f;
  const json& version = require(j, "format_version");
  if (!version.is_number_integer()) {
    throw ParseError("format_version must be an integer");
  }
  f.format_version = version.get<int>();
  if (f.format_version != kFrameFormatVersion) {
    throw ParseError("unsupported format_version " +
                     std::to_string(f.format_version));
  }
  const json& d = require(j, "d");
  const json& n = require(j, "n");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw ParseError("d must be a positive integer");
  }
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw ParseError("n must be a positive integer");
  }
  f.d = d.get<int>();
  const auto count = n.get<std::size_t>();
  if (auto it = j.find("allow_non_square"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("allow_non_square must be a boolean");
    f.allow_non_square = it->get<bool>();
  }
  const std::size_t expected = std::size_t(f.d) * f.d;
  if (!f.allow_non_square && count != expected) {
    throw DimensionError("n=" + std::to_string(count) + " does not match d=" +
                         std::to_string(f.d) + " (expected n=" +
                         std::to_string(expected) + ")");
  }
  if (auto it = j.find("t"); it != j.end() && !it->is_null()) {
    f.t = as_number(*it, "t");
  }
  if (auto it = j.find("ordering"); it != j.end()) {
    if (!it->is_string()) throw ParseError("ordering must be a string");
    f.ordering = it->get<std::string>();
  }
  if (auto it = j.find("residual"); it != j.end() && !it->is_null()) {
    f.residual = as_number(*it, "residual");
  }
  if (auto it = j.find("weights"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != count) {
      throw DimensionError("weights must be an array of n=" +
                           std::to_string(count) + " numbers");
    }
    std::vector<double> w;
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double v = as_number((*it)[i], "weights[" + std::to_string(i) + "]");
      if (v < 0.0) {
        throw ParseError("weights[" + std::to_string(i) + "] is negative");
      }
      sum += v;
      w.push_back(v);
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw ParseError("weights sum to " + std::to_string(sum) + ", expected 1");
    }
    f.weights = std::move(w);
  }
  f.x = parse_vectors(require(j, "x"), "x", f.d, count);
  f.y = parse_vectors(require(j, "y"), "y", f.d, count);
  return f;
}

ordered_json frame_file_to_json(const FrameFile& f) {
  ordered_json j;
  j["format_version"] = f.format_version;
  j["d"] = f.d;
  j["n"] = f.x.size();
  if (f.t) j["t"] = *f.t;
  if (f.weights) j["weights"] = *f.weights;
  if (!f.ordering.empty()) j["ordering"] = f.ordering;
  if (f.allow_non_square) j["allow_non_square"] = true;
  if (f.residual) j["residual"] = *f.residual;
  j["x"] = vectors_to_json(f.x);
  j["y"] = vectors_to_json(f.y);
  return j;
}

FrameFile read_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return frame_file_from_json(j);
}

void write_frame_file(const FrameFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << frame_file_to_json(f).dump(1) << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

FrameFile to_frame_file(const MufPair& p, std::string ordering) {
  FrameFile f;
  f.d = p.x.d;
  f.t = p.t;
  if (!has_uniform_weights(p.x)) f.weights = p.x.weights;
  f.ordering = std::move(ordering);
  f.allow_non_square = p.x.size() != std::size_t(p.x.d) * p.x.d;
  f.x = p.x.vectors;
  f.y = p.y.vectors;
  return f;
}

MufPair to_pair(const FrameFile& f, std::optional<double> t_override) {
  MufPair p;
  if (t_override) {
    p.t = *t_override;
  } else if (f.t) {
    p.t = *f.t;
  } else {
    throw ParseError("frame file has no 't' and no override was given");
  }
  p.x = make_frame(f.d, f.x);
  p.y = make_frame(f.d, f.y);
  if (f.weights) {
    p.x.weights = *f.weights;
    p.y.weights = *f.weights;
  }
  return p;
}

MufPair load_frames(const std::string& path) {
  return to_pair(read_frame_file(path));
}

void save_frames(const MufPair& p, const std::string& path,
                 std::string ordering) {
  write_frame_file(to_frame_file(p, std::move(ordering)), path);
}

}  // namespace muf
