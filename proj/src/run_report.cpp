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

#include "muf/run_report.hpp"

#include <cmath>
#include <sstream>

namespace muf {

using nlohmann::ordered_json;

ordered_json payload_json(const RunReport& r) {
  ordered_json j;
  j["tool"] = "muf";
  j["version"] = MUF_VERSION_STRING;
  j["command"] = r.command;
  if (!r.invocation.empty()) j["invocation"] = r.invocation;
  j["verdict"] = r.verdict;
  j["exit_code"] = r.exit_code;
  if (r.master_seed) j["master_seed"] = *r.master_seed;
  j["config"] = r.config;
  j["result"] = r.result;
  return j;
}

ordered_json to_json(const RunReport& r) {
  ordered_json j = payload_json(r);
  j["runtime"] = r.runtime;
  return j;
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix,
             std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              out);
    }
    return;
  }
  out << prefix << ": ";
  if (j.is_string()) {
    out << j.get<std::string>();
  } else {
    out << j.dump();
  }
  out << '\n';
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  flatten(to_json(r), "", out);
  return out.str();
}

ordered_json complex_vector_json(const ComplexVector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

ordered_json to_json(const DecompositionReport& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["t"] = r.t;
  j["residual_frobenius"] = r.residual_frobenius;
  j["weights_dev"] = r.weights_dev;
  j["tightness_x"] = r.tightness.first;
  j["tightness_y"] = r.tightness.second;
  j["ic_rank_x"] = r.ic_rank.first;
  j["ic_rank_y"] = r.ic_rank.second;
  j["ic_sigma_min_x"] = r.ic_sigma_min.first;
  j["ic_sigma_min_y"] = r.ic_sigma_min.second;
  j["offdiag_overlap_dev"] = r.relations.max_offdiag_dev;
  j["diag_overlap_dev"] = r.relations.max_diag_dev;
  j["bij_dev"] = r.relations.max_bij_dev;
  j["bij_abs_dev"] = r.relations.max_bij_abs_dev;
  j["corner_gauge"] = r.relations.corner_gauge;
  return j;
}

ordered_json to_json(const SearchConfig& c) {
  ordered_json j;
  j["d"] = c.d;
  j["t"] = c.t;
  j["ansatz"] = std::string(to_string(c.ansatz));
  j["restarts"] = c.restarts;
  j["master_seed"] = c.master_seed;
  j["max_iterations"] = c.max_iterations;
  j["success_tolerance"] = c.success_tolerance;
  j["stationarity_tolerance"] = c.stationarity_tolerance;
  j["polish"] = c.polish;
  return j;
}

ordered_json to_json(const SearchResult& r) {
  ordered_json j;
  j["status"] = std::string(to_string(r.status));
  j["best_loss"] = r.best_loss;
  j["best_residual"] = std::sqrt(r.best_loss);
  j["restart_index"] = r.restart_index;
  j["seed_used"] = r.seed_used;
  j["iterations"] = r.iterations;
  j["loss_trace_length"] = r.loss_trace.size();
  j["t"] = r.best_pair.t;
  if (r.fiducials) {
    j["fiducial_x"] = complex_vector_json(r.fiducials->first);
    j["fiducial_y"] = complex_vector_json(r.fiducials->second);
  }
  return j;
}

}  // namespace muf
