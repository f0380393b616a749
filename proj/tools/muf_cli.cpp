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

// muf: verify, search and analyse mutually unbiased frame pairs.
//
// Exit codes: 0 verified / found / informational, 2 failed / not found,
// 1 usage or runtime error.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "muf/muf.h"

namespace {

constexpr int kExitError = 1;

struct SearchFlags {
  int d = 2;
  double t = 0.0;
  std::string ansatz = "general";
  int restarts = 1;
  std::uint64_t seed = 0;
  int max_iters = 0;
  double tol = 0.0;
  int threads = 0;
  std::string output;
};

void add_search_flags(CLI::App* sub, SearchFlags& f, bool with_t) {
  sub->add_option("--d", f.d, "Local dimension")->capture_default_str();
  if (with_t) sub->add_option("--t", f.t, "Channel parameter t")->capture_default_str();
  sub->add_option("--ansatz", f.ansatz, "general or covariant")->capture_default_str();
  sub->add_option("--restarts", f.restarts, "Number of random starts")
      ->capture_default_str();
  sub->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  sub->add_option("--max-iters", f.max_iters, "Iteration budget per start");
  sub->add_option("--tol", f.tol, "Success tolerance on the loss");
  sub->add_option("--threads", f.threads, "Worker threads (default MUF_THREADS)");
  sub->add_option("--output", f.output, "Write the result to this file");
}

bool to_config(const SearchFlags& f, muf_search_config& cfg) {
  muf_search_config_init(&cfg);
  cfg.d = f.d;
  cfg.t = f.t;
  if (muf_parse_ansatz(f.ansatz.c_str(), &cfg.ansatz) != MUF_OK) {
    std::cerr << "error: " << muf_last_error() << '\n';
    return false;
  }
  cfg.restarts = f.restarts;
  cfg.master_seed = f.seed;
  if (f.max_iters > 0) cfg.max_iterations = f.max_iters;
  if (f.tol > 0) cfg.success_tolerance = f.tol;
  cfg.threads = f.threads;
  return true;
}

int finish(muf_status s, muf_report_t* r, bool json, const std::string& echo) {
  if (s != MUF_OK) {
    std::cerr << "error (" << muf_status_name(s) << "): " << muf_last_error() << '\n';
    return kExitError;
  }
  muf_report_set_command(r, echo.c_str());
  const muf_format fmt = json ? MUF_FORMAT_JSON : MUF_FORMAT_TEXT;
  std::size_t needed = 0;
  std::string buf;
  if (muf_report_render(r, fmt, 1, nullptr, 0, &needed) == MUF_OK) {
    buf.assign(needed, '\0');
    s = muf_report_render(r, fmt, 1, buf.data(), buf.size(), &needed);
  }
  if (s != MUF_OK || needed == 0) {
    std::cerr << "error: " << muf_last_error() << '\n';
    muf_report_free(r);
    return kExitError;
  }
  buf.resize(needed - 1);
  std::cout << buf;
  const int code = muf_report_exit_code(r);
  muf_report_free(r);
  return code;
}

bool parse_kind(const std::string& name, muf_pair_kind& out) {
  if (muf_parse_pair_kind(name.c_str(), &out) != MUF_OK) {
    std::cerr << "error: " << muf_last_error() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutually unbiased frame toolkit"};
  app.set_version_flag("--version", std::string("muf ") + muf_version());
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the run report as one JSON document");

  std::string echo;
  for (int i = 0; i < argc; ++i) {
    if (i) echo += ' ';
    echo += i == 0 ? std::string("muf") : std::string(argv[i]);
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Check a frame file against the decomposition");
  std::string input;
  std::optional<double> t_override;
  double verify_tol = 0.0;
  verify->add_option("--input", input, "Frame file")->required();
  verify->add_option("--t", t_override, "Override the file's t");
  verify->add_option("--tol", verify_tol, "Residual tolerance (Frobenius)");
  verify->add_flag("--json", json, "Emit JSON");

  SearchFlags search_flags, sic_flags, sweep_flags;
  auto* search = app.add_subcommand("search", "Search for a pair at fixed t");
  add_search_flags(search, search_flags, true);
  search->add_flag("--json", json, "Emit JSON");

  auto* sic = app.add_subcommand("sic", "Search at t = 1/(d+1) and check the SIC properties");
  sic_flags.ansatz = "covariant";
  add_search_flags(sic, sic_flags, false);
  sic->add_flag("--json", json, "Emit JSON");

  auto* sweep = app.add_subcommand("sweep", "Follow a solution branch in t");
  double t_end = 0.0;
  int steps = 16;
  add_search_flags(sweep, sweep_flags, true);
  sweep->add_option("--t-end", t_end, "Final t")->required();
  sweep->add_option("--steps", steps, "Nominal number of steps")->capture_default_str();
  sweep->add_flag("--json", json, "Emit JSON");

  auto* twirl = app.add_subcommand("twirl-check", "Check the twirl identity on random inputs");
  int twirl_d = 2, trials = 20;
  std::uint64_t twirl_seed = 0;
  twirl->add_option("--d", twirl_d, "Local dimension")->capture_default_str();
  twirl->add_option("--trials", trials, "Random trials")->capture_default_str();
  twirl->add_option("--seed", twirl_seed, "Seed")->capture_default_str();
  twirl->add_flag("--json", json, "Emit JSON");

  auto* obstruction = app.add_subcommand("obstruction", "Differentiability obstruction at t = 0");
  int obs_d = 2;
  std::string obs_pair = "fourier";
  std::uint64_t obs_seed = 0;
  obstruction->add_option("--d", obs_d, "Local dimension")->capture_default_str();
  obstruction->add_option("--pair", obs_pair, "fourier or evading")->capture_default_str();
  obstruction->add_option("--seed", obs_seed, "Seed for the evading fiducial");
  obstruction->add_flag("--json", json, "Emit JSON");

  auto* example = app.add_subcommand("example", "Write a t = 0 reference pair");
  int ex_d = 2;
  std::string ex_pair = "fourier", ex_output;
  std::uint64_t ex_seed = 0;
  example->add_option("--d", ex_d, "Local dimension")->capture_default_str();
  example->add_option("--pair", ex_pair, "fourier, product or evading")
      ->capture_default_str();
  example->add_option("--seed", ex_seed, "Seed for the evading fiducial");
  example->add_option("--output", ex_output, "Output file")->required();
  example->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  muf_report_t* report = nullptr;
  if (*verify) {
    const double t = t_override.value_or(0.0);
    const muf_status s = muf_verify(input.c_str(), t_override ? &t : nullptr,
                                    verify_tol, 0.0, &report);
    return finish(s, report, json, echo);
  }
  if (*search || *sic) {
    const SearchFlags& f = *search ? search_flags : sic_flags;
    muf_search_config cfg;
    if (!to_config(f, cfg)) return kExitError;
    const char* out = f.output.empty() ? nullptr : f.output.c_str();
    const muf_status s =
        *search ? muf_search(&cfg, out, &report) : muf_sic(&cfg, out, &report);
    return finish(s, report, json, echo);
  }
  if (*sweep) {
    muf_search_config cfg;
    if (!to_config(sweep_flags, cfg)) return kExitError;
    const char* out = sweep_flags.output.empty() ? nullptr : sweep_flags.output.c_str();
    const muf_status s = muf_sweep(&cfg, t_end, steps, out, &report);
    return finish(s, report, json, echo);
  }
  if (*twirl) {
    const muf_status s = muf_twirl_check(twirl_d, trials, twirl_seed, &report);
    return finish(s, report, json, echo);
  }
  if (*obstruction) {
    muf_pair_kind kind;
    if (!parse_kind(obs_pair, kind)) return kExitError;
    const muf_status s = muf_obstruction(obs_d, kind, obs_seed, &report);
    return finish(s, report, json, echo);
  }
  if (*example) {
    muf_pair_kind kind;
    if (!parse_kind(ex_pair, kind)) return kExitError;
    const muf_status s = muf_example(ex_d, kind, ex_seed, ex_output.c_str(), &report);
    return finish(s, report, json, echo);
  }
  return kExitError;
}
