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

#include "muf/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <random>
#include <thread>

#include "muf/channels.hpp"
#include "muf/error.hpp"

namespace muf {

std::string_view to_string(Ansatz a) {
  return a == Ansatz::General ? "general" : "covariant";
}

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::Found ? "found" : "not_found";
}

Ansatz parse_ansatz(std::string_view s) {
  if (s == "general") return Ansatz::General;
  if (s == "covariant") return Ansatz::Covariant;
  throw InvalidArgumentError("unknown ansatz '" + std::string(s) +
                             "' (expected general or covariant)");
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.d < 2) throw InvalidArgumentError("search requires d >= 2");
  const ChannelParams cp{cfg.d, cfg.t};
  if (!cp.is_separable()) {
    throw RangeError("t=" + std::to_string(cfg.t) +
                     " is outside the separable range [" +
                     std::to_string(cp.t_min()) + ", " +
                     std::to_string(cp.t_separable_max()) + "]");
  }
  if (cfg.restarts < 1) throw InvalidArgumentError("restarts must be >= 1");
  if (cfg.max_iterations < 0) {
    throw InvalidArgumentError("max_iterations must be >= 0");
  }
  if (!(cfg.success_tolerance >= 0.0) || !(cfg.stationarity_tolerance >= 0.0)) {
    throw InvalidArgumentError("tolerances must be nonnegative");
  }
}

int resolve_thread_count(const SearchConfig& cfg) {
  int n = cfg.threads;
  if (n <= 0) {
    if (const char* env = std::getenv("MUF_THREADS")) {
      n = std::atoi(env);
    }
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return std::clamp(n, 1, std::max(1, cfg.restarts));
}

Eigen::Index parameter_count(int d, Ansatz ansatz) {
  const Eigen::Index vectors = ansatz == Ansatz::General ? 2 * d * d : 2;
  return vectors * 2 * d;
}

namespace {

struct Decoded {
  std::vector<ComplexVector> unit;  // normalized vectors
  std::vector<double> norms;        // raw norms
};

Decoded decode(const RealVector& params, int d, Eigen::Index count) {
  if (params.size() != count * 2 * d) {
    throw DimensionError("parameter vector has length " +
                         std::to_string(params.size()) + ", expected " +
                         std::to_string(count * 2 * d));
  }
  Decoded out;
  out.unit.reserve(count);
  out.norms.reserve(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    ComplexVector z(d);
    for (int i = 0; i < d; ++i) {
      z(i) = Complex(params(2 * (k * d + i)), params(2 * (k * d + i) + 1));
    }
    const double r = z.norm();
    if (!(r > 1e-150)) {
      throw NormalizationError("raw parameter vector " + std::to_string(k) +
                               " has zero norm");
    }
    out.unit.push_back(z / r);
    out.norms.push_back(r);
  }
  return out;
}

void write_gradient(RealVector& g, Eigen::Index k, int d,
                    const ComplexVector& v) {
  for (int i = 0; i < d; ++i) {
    g(2 * (k * d + i)) = v(i).real();
    g(2 * (k * d + i) + 1) = v(i).imag();
  }
}

LossGradient general_loss(const RealVector& params, const SearchConfig& cfg,
                          bool want_gradient) {
  const int d = cfg.d;
  const int n = d * d;
  const Decoded dec = decode(params, d, 2 * n);
  const double w = 1.0 / n;

  // R = sum_i w v_i v_i^dagger - T with v_i = x_i (x) y_i.
  BipartiteMatrix r = -pt_isotropic({d, cfg.t});
  std::vector<ComplexVector> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = kron(dec.unit[i], dec.unit[n + i]);
    r.noalias() += w * (v[i] * v[i].adjoint());
  }

  LossGradient out;
  out.loss = r.squaredNorm();
  if (!want_gradient) return out;

  out.gradient = RealVector::Zero(params.size());
  for (int i = 0; i < n; ++i) {
    const ComplexVector& ux = dec.unit[i];
    const ComplexVector& uy = dec.unit[n + i];
    const ComplexVector rv = r * v[i];
    const double h = v[i].dot(rv).real();
    // (I (x) <y|) R v and (<x| (x) I) R v
    ComplexVector ax = ComplexVector::Zero(d);
    ComplexVector by = ComplexVector::Zero(d);
    for (int a = 0; a < d; ++a)
      for (int k = 0; k < d; ++k) {
        ax(a) += std::conj(uy(k)) * rv(a * d + k);
        by(k) += std::conj(ux(a)) * rv(a * d + k);
      }
    write_gradient(out.gradient, i, d, (4.0 * w / dec.norms[i]) * (ax - h * ux));
    write_gradient(out.gradient, n + i, d,
                   (4.0 * w / dec.norms[n + i]) * (by - h * uy));
  }
  return out;
}

LossGradient covariant_loss(const RealVector& params, const SearchConfig& cfg,
                            bool want_gradient) {
  const int d = cfg.d;
  const Decoded dec = decode(params, d, 2);
  const WHContext ctx(d);
  const ComplexVector& ux = dec.unit[0];
  const ComplexVector& uy = dec.unit[1];
  const double scale = 1.0 / (double(d) * d);

  LossGradient out;
  ComplexVector gx = ComplexVector::Zero(d);
  ComplexVector gy = ComplexVector::Zero(d);
  for (const auto& a : ctx.fundamental_labels()) {
    if (a.a1 == 0 && a.a2 == 0) continue;
    const ComplexVector wx = ctx.apply(a, ux);
    const ComplexVector wy = ctx.apply(a, uy);
    const Complex cx = ux.dot(wx);
    const Complex cy = uy.dot(wy);
    const Complex e = std::conj(cx) * cy - cfg.t;
    out.loss += std::norm(e);
    if (!want_gradient) continue;
    // W_a^dagger u = W_{-a} u
    const ComplexVector wdx = ctx.apply(-a, ux);
    const ComplexVector wdy = ctx.apply(-a, uy);
    const Complex g = e * std::conj(cy);
    const Complex h = std::conj(e) * std::conj(cx);
    gx += g * wx + std::conj(g) * wdx - 2.0 * (g * cx).real() * ux;
    gy += h * wy + std::conj(h) * wdy - 2.0 * (h * cy).real() * uy;
  }
  out.loss *= scale;
  if (want_gradient) {
    out.gradient = RealVector(params.size());
    write_gradient(out.gradient, 0, d, (2.0 * scale / dec.norms[0]) * gx);
    write_gradient(out.gradient, 1, d, (2.0 * scale / dec.norms[1]) * gy);
  }
  return out;
}

}  // namespace

LossGradient loss_and_gradient(const RealVector& params, const SearchConfig& cfg) {
  return cfg.ansatz == Ansatz::General ? general_loss(params, cfg, true)
                                       : covariant_loss(params, cfg, true);
}

double loss_value(const RealVector& params, const SearchConfig& cfg) {
  return cfg.ansatz == Ansatz::General ? general_loss(params, cfg, false).loss
                                       : covariant_loss(params, cfg, false).loss;
}

RealVector encode_vectors(const std::vector<ComplexVector>& vs) {
  Eigen::Index total = 0;
  for (const auto& v : vs) total += v.size();
  RealVector out(2 * total);
  Eigen::Index k = 0;
  for (const auto& v : vs)
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      out(k++) = v(i).real();
      out(k++) = v(i).imag();
    }
  return out;
}

RealVector encode_pair(const MufPair& p) {
  std::vector<ComplexVector> all = p.x.vectors;
  all.insert(all.end(), p.y.vectors.begin(), p.y.vectors.end());
  return encode_vectors(all);
}

MufPair decode_pair(const RealVector& params, const SearchConfig& cfg) {
  const int d = cfg.d;
  MufPair p;
  p.t = cfg.t;
  if (cfg.ansatz == Ansatz::General) {
    const int n = d * d;
    Decoded dec = decode(params, d, 2 * n);
    p.x = make_frame(d, {dec.unit.begin(), dec.unit.begin() + n});
    p.y = make_frame(d, {dec.unit.begin() + n, dec.unit.end()});
  } else {
    const Decoded dec = decode(params, d, 2);
    const WHContext ctx(d);
    p.x = wh_orbit(ctx, dec.unit[0]);
    p.y = wh_orbit(ctx, dec.unit[1]);
  }
  return p;
}

RealVector random_start(const SearchConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index size = parameter_count(cfg.d, cfg.ansatz);
  RealVector p(size);
  for (Eigen::Index i = 0; i < size; ++i) p(i) = normal(rng);
  // normalize each complex vector
  const Eigen::Index stride = 2 * cfg.d;
  for (Eigen::Index k = 0; k < size; k += stride) {
    p.segment(k, stride).normalize();
  }
  return p;
}

namespace {

constexpr int kHistory = 12;
constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;

struct Curvature {
  RealVector s;
  RealVector y;
  double rho;
};

RealVector two_loop(const std::deque<Curvature>& hist, const RealVector& g) {
  RealVector q = g;
  std::vector<double> alpha(hist.size());
  for (std::size_t k = hist.size(); k-- > 0;) {
    alpha[k] = hist[k].rho * hist[k].s.dot(q);
    q -= alpha[k] * hist[k].y;
  }
  if (!hist.empty()) {
    const auto& last = hist.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t k = 0; k < hist.size(); ++k) {
    const double beta = hist[k].rho * hist[k].y.dot(q);
    q += (alpha[k] - beta) * hist[k].s;
  }
  return -q;
}

void finish(SearchResult& r, const RealVector& x, double f,
            const SearchConfig& cfg) {
  r.params = x;
  r.best_loss = f;
  r.status = f < cfg.success_tolerance ? SearchStatus::Found
                                       : SearchStatus::NotFound;
  r.best_pair = decode_pair(x, cfg);
  if (cfg.ansatz == Ansatz::Covariant) {
    r.fiducials = std::make_pair(r.best_pair.x.vectors[0],
                                 r.best_pair.y.vectors[0]);
  }
}

SearchResult run_lbfgs(const RealVector& start, const SearchConfig& cfg,
                       double stop_loss) {
  SearchResult r;
  RealVector x = start;
  LossGradient fg = loss_and_gradient(x, cfg);
  double f = fg.loss;
  RealVector g = fg.gradient;
  std::deque<Curvature> hist;

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    if (f < stop_loss || g.norm() < cfg.stationarity_tolerance) break;

    bool accepted = false;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      RealVector p = two_loop(hist, g);
      double slope = g.dot(p);
      if (!(slope < 0.0)) {
        hist.clear();
        p = -g;
        slope = -g.squaredNorm();
      }
      double step = hist.empty() ? std::min(1.0, 1.0 / g.norm()) : 1.0;
      for (int bt = 0; bt < kMaxBacktracks; ++bt, step *= 0.5) {
        const RealVector xn = x + step * p;
        const double fn = loss_value(xn, cfg);
        if (fn <= f + kArmijo * step * slope) {
          LossGradient fgn = loss_and_gradient(xn, cfg);
          const RealVector s = xn - x;
          const RealVector yv = fgn.gradient - g;
          const double sy = s.dot(yv);
          if (sy > 1e-14 * s.norm() * yv.norm() && sy > 0.0) {
            hist.push_back({s, yv, 1.0 / sy});
            if (hist.size() > kHistory) hist.pop_front();
          }
          x = xn;
          f = fgn.loss;
          g = std::move(fgn.gradient);
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        if (hist.empty()) break;  // steepest descent also failed
        hist.clear();
      }
    }
    if (!accepted) {
      r.line_search_failed = true;
      break;
    }
    r.iterations = it;
    r.loss_trace.push_back(f);
  }
  finish(r, x, f, cfg);
  return r;
}

}  // namespace

SearchResult local_optimize(const RealVector& start, const SearchConfig& cfg) {
  return run_lbfgs(start, cfg, cfg.success_tolerance);
}

SearchResult polish(const SearchResult& r, const SearchConfig& cfg) {
  SearchConfig fine = cfg;
  fine.stationarity_tolerance = std::min(cfg.stationarity_tolerance, 1e-14);
  SearchResult out = run_lbfgs(r.params, fine, 1e-30);
  // status against the caller's tolerance
  out.status = out.best_loss < cfg.success_tolerance ? SearchStatus::Found
                                                     : SearchStatus::NotFound;
  out.line_search_failed = false;  // expected once at the rounding floor
  out.restart_index = r.restart_index;
  out.seed_used = r.seed_used;
  out.iterations += r.iterations;
  std::vector<double> trace = r.loss_trace;
  trace.insert(trace.end(), out.loss_trace.begin(), out.loss_trace.end());
  out.loss_trace = std::move(trace);
  return out;
}

SearchResult multistart_search(const SearchConfig& cfg) {
  validate_config(cfg);
  const int restarts = cfg.restarts;
  std::vector<SearchResult> results(restarts);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int k = next.fetch_add(1); k < restarts; k = next.fetch_add(1)) {
      const std::uint64_t seed = cfg.master_seed ^ static_cast<std::uint64_t>(k);
      SearchResult r = local_optimize(random_start(cfg, seed), cfg);
      r.restart_index = k;
      r.seed_used = seed;
      results[k] = std::move(r);
    }
  };
  const int threads = resolve_thread_count(cfg);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  int best = 0;
  for (int k = 1; k < restarts; ++k)
    if (results[k].best_loss < results[best].best_loss) best = k;
  SearchResult out = std::move(results[best]);
  if (cfg.polish && out.status == SearchStatus::Found) out = polish(out, cfg);
  return out;
}

std::vector<Complex> covariant_residual(const WHContext& ctx,
                                        const ComplexVector& x,
                                        const ComplexVector& y, double t) {
  std::vector<Complex> e;
  e.reserve(std::size_t(ctx.dim()) * ctx.dim() - 1);
  for (const auto& a : ctx.fundamental_labels()) {
    if (a.a1 == 0 && a.a2 == 0) continue;
    e.push_back(std::conj(ctx.expectation(a, x)) * ctx.expectation(a, y) - t);
  }
  return e;
}

SearchResult covariant_search(const SearchConfig& cfg) {
  if (cfg.ansatz != Ansatz::Covariant) {
    throw InvalidArgumentError("covariant_search requires the covariant ansatz");
  }
  return multistart_search(cfg);
}

SweepResult continuation_sweep(const SearchResult& seed, double t_end,
                               int steps, const SearchConfig& cfg) {
  if (seed.status != SearchStatus::Found || seed.params.size() == 0) {
    throw PreconditionError("continuation needs a found solution at t_start");
  }
  if (steps < 1) throw InvalidArgumentError("steps must be >= 1");
  SearchConfig step_cfg = cfg;
  step_cfg.t = t_end;
  validate_config(step_cfg);
  if (seed.params.size() != parameter_count(cfg.d, cfg.ansatz)) {
    throw PreconditionError("seed solution does not match the configuration");
  }

  SweepResult out;
  const double t_start = seed.best_pair.t;
  const double nominal = (t_end - t_start) / steps;
  double t_cur = t_start;
  double h = nominal;
  RealVector current = seed.params;
  std::uint64_t attempt = 0;

  while (std::abs(t_end - t_cur) > 1e-15) {
    double t_next = t_cur + h;
    if ((h > 0 && t_next > t_end) || (h < 0 && t_next < t_end)) t_next = t_end;
    step_cfg.t = t_next;
    SearchResult r = local_optimize(current, step_cfg);
    if (r.status != SearchStatus::Found) {
      // The previous point can be critical for the new t (e.g. x = y at the
      // SIC endpoint); retry from a seeded kick of size sqrt|h|.
      RealVector kick = random_start(cfg, cfg.master_seed ^ (~attempt++));
      r = local_optimize(current + std::sqrt(std::abs(t_next - t_cur)) * kick,
                         step_cfg);
    }
    if (r.status == SearchStatus::Found) {
      if (cfg.polish) r = polish(r, step_cfg);
      current = r.params;
      t_cur = t_next;
      out.path.push_back(std::move(r));
      // grow back toward the nominal step after a success
      h = std::abs(2.0 * h) < std::abs(nominal) ? 2.0 * h : nominal;
      continue;
    }
    h *= 0.5;
    if (std::abs(h) < kMinContinuationStep) {
      out.abort_reason = "step underflow at t=" + std::to_string(t_cur);
      return out;
    }
  }
  out.completed = true;
  return out;
}

}  // namespace muf
