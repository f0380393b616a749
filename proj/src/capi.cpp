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

#include "muf/muf.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "muf/commands.hpp"
#include "muf/decomposition.hpp"
#include "muf/error.hpp"
#include "muf/frame_io.hpp"

struct muf_pair {
  muf::MufPair pair;
};

struct muf_report {
  muf::RunReport report;
};

namespace {

thread_local std::string g_last_error;

muf_status fail(muf_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
muf_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return MUF_OK;
  } catch (const muf::Error& e) {
    return fail(static_cast<muf_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MUF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MUF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MUF_ERR_INTERNAL, "unknown error");
  }
}

muf::SearchConfig to_config(const muf_search_config* c) {
  if (c == nullptr) throw muf::InvalidArgumentError("null search config");
  muf::SearchConfig cfg;
  cfg.d = c->d;
  cfg.t = c->t;
  cfg.ansatz = c->ansatz == MUF_ANSATZ_COVARIANT ? muf::Ansatz::Covariant
                                                 : muf::Ansatz::General;
  cfg.restarts = c->restarts;
  cfg.master_seed = c->master_seed;
  cfg.max_iterations = c->max_iterations;
  cfg.success_tolerance = c->success_tolerance;
  cfg.stationarity_tolerance = c->stationarity_tolerance;
  cfg.threads = c->threads;
  cfg.polish = c->polish != 0;
  return cfg;
}

muf::PairKind to_kind(muf_pair_kind k) {
  switch (k) {
    case MUF_PAIR_FOURIER:
      return muf::PairKind::Fourier;
    case MUF_PAIR_PRODUCT:
      return muf::PairKind::Product;
    case MUF_PAIR_EVADING:
      return muf::PairKind::Evading;
  }
  throw muf::InvalidArgumentError("unknown pair kind");
}

template <typename T>
void require(T* p, const char* what) {
  if (p == nullptr) throw muf::InvalidArgumentError(std::string("null ") + what);
}

std::string str(const char* s) { return s == nullptr ? std::string() : s; }

muf_status emit(muf::RunReport&& r, muf_report_t** out) {
  *out = new muf_report{std::move(r)};
  return MUF_OK;
}

}  // namespace

extern "C" {

const char* muf_version(void) { return MUF_VERSION_STRING; }

const char* muf_last_error(void) { return g_last_error.c_str(); }

const char* muf_status_name(muf_status s) {
  switch (s) {
    case MUF_OK:
      return "ok";
    case MUF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case MUF_ERR_DIMENSION:
      return "dimension error";
    case MUF_ERR_RANGE:
      return "range error";
    case MUF_ERR_NORMALIZATION:
      return "normalization error";
    case MUF_ERR_PARSE:
      return "parse error";
    case MUF_ERR_IO:
      return "i/o error";
    case MUF_ERR_PRECONDITION:
      return "precondition error";
    case MUF_ERR_GENERATION:
      return "generation error";
    case MUF_ERR_UNSUPPORTED_WEIGHTS:
      return "unsupported weights";
    case MUF_ERR_NOT_A_SOLUTION:
      return "not a solution";
    case MUF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void muf_search_config_init(muf_search_config* cfg) {
  if (cfg == nullptr) return;
  const muf::SearchConfig def;
  cfg->d = def.d;
  cfg->t = def.t;
  cfg->ansatz = MUF_ANSATZ_GENERAL;
  cfg->restarts = def.restarts;
  cfg->master_seed = def.master_seed;
  cfg->max_iterations = def.max_iterations;
  cfg->success_tolerance = def.success_tolerance;
  cfg->stationarity_tolerance = def.stationarity_tolerance;
  cfg->threads = def.threads;
  cfg->polish = def.polish ? 1 : 0;
}

muf_status muf_parse_ansatz(const char* name, muf_ansatz* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    *out = muf::parse_ansatz(name) == muf::Ansatz::Covariant ? MUF_ANSATZ_COVARIANT
                                                             : MUF_ANSATZ_GENERAL;
  });
}

muf_status muf_parse_pair_kind(const char* name, muf_pair_kind* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    switch (muf::parse_pair_kind(name)) {
      case muf::PairKind::Fourier:
        *out = MUF_PAIR_FOURIER;
        break;
      case muf::PairKind::Product:
        *out = MUF_PAIR_PRODUCT;
        break;
      case muf::PairKind::Evading:
        *out = MUF_PAIR_EVADING;
        break;
    }
  });
}

muf_status muf_pair_load(const char* path, muf_pair_t** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new muf_pair{muf::load_frames(path)};
  });
}

muf_status muf_pair_save(const muf_pair_t* p, const char* path) {
  return guarded([&] {
    require(p, "pair");
    require(path, "path");
    muf::save_frames(p->pair, path);
  });
}

muf_status muf_pair_reference(muf_pair_kind kind, int d, uint64_t seed,
                              muf_pair_t** out) {
  return guarded([&] {
    require(out, "output");
    *out = new muf_pair{muf::make_reference_pair(to_kind(kind), d, seed)};
  });
}

void muf_pair_free(muf_pair_t* p) { delete p; }

int muf_pair_dimension(const muf_pair_t* p) { return p ? p->pair.x.d : 0; }

size_t muf_pair_size(const muf_pair_t* p) { return p ? p->pair.x.size() : 0; }

double muf_pair_t_value(const muf_pair_t* p) { return p ? p->pair.t : 0.0; }

muf_status muf_pair_get_vector(const muf_pair_t* p, int which, size_t index,
                               double* buf, size_t buf_len) {
  return guarded([&] {
    require(p, "pair");
    require(buf, "buffer");
    if (which != 0 && which != 1)
      throw muf::InvalidArgumentError("which must be 0 (x) or 1 (y)");
    const muf::Frame& f = which == 0 ? p->pair.x : p->pair.y;
    if (index >= f.size())
      throw muf::RangeError("vector index " + std::to_string(index) +
                            " out of range");
    const auto& v = f.vectors[index];
    if (buf_len < 2 * static_cast<size_t>(v.size()))
      throw muf::InvalidArgumentError("buffer too small");
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      buf[2 * i] = v(i).real();
      buf[2 * i + 1] = v(i).imag();
    }
  });
}

muf_status muf_pair_residual(const muf_pair_t* p, double* out) {
  return guarded([&] {
    require(p, "pair");
    require(out, "output");
    *out = muf::decomposition_residual(p->pair);
  });
}

muf_status muf_verify(const char* path, const double* t_override, double residual_tol,
                      double conclusion_tol, muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(path, "path");
    require(out, "output");
    muf::VerifyOptions o;
    o.input = path;
    if (t_override) o.t = *t_override;
    if (residual_tol > 0) o.tolerances.residual = residual_tol;
    if (conclusion_tol > 0) o.tolerances.conclusion = conclusion_tol;
    r = muf::cmd_verify(o);
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

muf_status muf_search(const muf_search_config* cfg, const char* output,
                      muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(out, "output");
    r = muf::cmd_search({to_config(cfg), str(output)});
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

muf_status muf_sic(const muf_search_config* cfg, const char* output,
                   muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(out, "output");
    r = muf::cmd_sic({to_config(cfg), str(output)});
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

muf_status muf_sweep(const muf_search_config* cfg, double t_end, int steps,
                     const char* output, muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(out, "output");
    muf::SweepOptions o;
    o.config = to_config(cfg);
    o.t_end = t_end;
    o.steps = steps;
    o.output = str(output);
    r = muf::cmd_sweep(o);
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

muf_status muf_twirl_check(int d, int trials, uint64_t seed, muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(out, "output");
    r = muf::cmd_twirl_check({d, trials, seed});
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

muf_status muf_obstruction(int d, muf_pair_kind kind, uint64_t seed,
                           muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(out, "output");
    r = muf::cmd_obstruction({d, to_kind(kind), seed});
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

muf_status muf_example(int d, muf_pair_kind kind, uint64_t seed, const char* output,
                       muf_report_t** out) {
  muf::RunReport r;
  const muf_status s = guarded([&] {
    require(out, "output");
    r = muf::cmd_example({d, to_kind(kind), seed, str(output)});
  });
  return s == MUF_OK ? emit(std::move(r), out) : s;
}

int muf_report_exit_code(const muf_report_t* r) {
  return r ? r->report.exit_code : muf::kExitError;
}

const char* muf_report_verdict(const muf_report_t* r) {
  return r ? r->report.verdict.c_str() : "";
}

muf_status muf_report_set_command(muf_report_t* r, const char* echo) {
  return guarded([&] {
    require(r, "report");
    r->report.invocation = str(echo);
  });
}

muf_status muf_report_get_number(const muf_report_t* r, const char* path,
                                 double* out) {
  return guarded([&] {
    require(r, "report");
    require(path, "path");
    require(out, "output");
    const nlohmann::ordered_json* node = &r->report.result;
    std::string key;
    const std::string p = path;
    std::size_t start = 0;
    while (start <= p.size()) {
      const std::size_t dot = p.find('.', start);
      key = p.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (!node->is_object() || !node->contains(key))
        throw muf::InvalidArgumentError("no result field '" + p + "'");
      node = &(*node)[key];
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    if (node->is_boolean()) {
      *out = node->get<bool>() ? 1.0 : 0.0;
    } else if (node->is_number()) {
      *out = node->get<double>();
    } else {
      throw muf::InvalidArgumentError("result field '" + p + "' is not numeric");
    }
  });
}

muf_status muf_report_render(const muf_report_t* r, muf_format fmt,
                             int include_runtime, char* buf, size_t buf_len,
                             size_t* needed) {
  return guarded([&] {
    require(r, "report");
    std::string s;
    if (fmt == MUF_FORMAT_JSON) {
      s = (include_runtime ? muf::to_json(r->report) : muf::payload_json(r->report))
              .dump(2);
      s += '\n';
    } else {
      muf::RunReport copy = r->report;
      if (!include_runtime) copy.runtime = nlohmann::ordered_json::object();
      s = muf::render_text(copy);
    }
    if (needed) *needed = s.size() + 1;
    if (buf == nullptr || buf_len < s.size() + 1) {
      if (buf != nullptr) throw muf::InvalidArgumentError("buffer too small");
      return;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

void muf_report_free(muf_report_t* r) { delete r; }

}  // extern "C"
