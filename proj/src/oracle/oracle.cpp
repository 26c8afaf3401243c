// Copyright 2026 The fodp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fodp/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fodp/core/errors.hpp"
#include "fodp/data/dataset_spec.hpp"
#include "fodp/model/mlp.hpp"

namespace fodp::oracle {

namespace {

double norm(const GradientVector& v) { return vec_norm2(v); }

GradientVector oracle_clip(const GradientVector& g, double clip_c) {
  const double n = norm(g);
  const double scale = n > clip_c ? clip_c / n : 1.0;
  return vec_scale(scale, g);
}

double relative_error(const GradientVector& lhs, const GradientVector& rhs) {
  const double diff = norm(vec_sub(lhs, rhs));
  if (diff == 0.0) return 0.0;
  const double denom = std::max({norm(lhs), norm(rhs), 1e-300});
  return diff / denom;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::fabs(a[i] - b[i]));
  }
  return m;
}

std::vector<double> normalized(std::vector<double> raw) {
  double total = 0.0;
  for (double v : raw) total += v;
  if (!(total > 0.0)) {
    throw NumericError("oracle: kernel coefficients underflowed");
  }
  for (double& v : raw) v /= total;
  return raw;
}

}  // namespace

OracleMemory recompute_memory(const std::vector<GradientVector>& releases,
                              const MechanismConfig& cfg, std::size_t dim) {
  OracleMemory out;
  out.state = GradientVector(dim);
  const std::size_t t = releases.size();
  const std::size_t window = std::min(cfg.memory_window, t + 1);
  const std::size_t lags = window - 1;
  if (lags == 0 || cfg.memory_variant == MemoryVariant::kCurrentOnly) {
    return out;
  }

  GradientVector ema = releases.front();
  for (std::size_t r = 1; r < t; ++r) {
    ema = vec_add(vec_scale(cfg.gamma, releases[r]),
                  vec_scale(1.0 - cfg.gamma, ema));
  }

  std::vector<double> raw(lags);
  switch (cfg.memory_variant) {
    case MemoryVariant::kFractionalCa: {
      const double ema_norm = norm(ema);
      out.chi = ema_norm / (ema_norm + cfg.zeta);
      out.nu.resize(lags);
      for (std::size_t j = 1; j <= lags; ++j) {
        const double nu = norm(vec_sub(releases[t - j], ema)) /
                          (std::max(ema_norm, cfg.kappa) + cfg.eps_stab);
        out.nu[j - 1] = nu;
        const auto jd = static_cast<double>(j);
        raw[j - 1] = std::pow(jd + 1.0, cfg.alpha - 1.0) *
                     std::exp(-(cfg.temper_lambda + out.chi * cfg.tau * nu) * jd);
      }
      break;
    }
    case MemoryVariant::kUniform:
      std::fill(raw.begin(), raw.end(), 1.0);
      break;
    case MemoryVariant::kExponential:
      for (std::size_t j = 1; j <= lags; ++j) {
        raw[j - 1] = std::pow(cfg.exp_decay, static_cast<double>(j - 1));
      }
      break;
    case MemoryVariant::kCurrentOnly:
      break;
  }
  out.weights = normalized(std::move(raw));
  for (std::size_t j = 1; j <= lags; ++j) {
    out.state = vec_add(out.state, vec_scale(out.weights[j - 1], releases[t - j]));
  }
  return out;
}

GradientVector recompute_query(const std::vector<GradientVector>& grads,
                               const std::vector<std::uint8_t>& mask,
                               const GradientVector& memory,
                               const MechanismConfig& cfg, double clip_c,
                               bool memory_active) {
  GradientVector s(memory.dim());
  for (std::size_t i = 0; i < grads.size(); ++i) {
    if (mask[i]) s = vec_add(s, oracle_clip(grads[i], clip_c));
  }
  if (cfg.memory_variant == MemoryVariant::kCurrentOnly) return s;
  if (!memory_active) return vec_scale(cfg.beta, s);
  return vec_add(vec_scale(cfg.beta, s), vec_scale(1.0 - cfg.beta, memory));
}

std::vector<GradientVector> default_probe_pool(
    const std::vector<GradientVector>& grads,
    const std::vector<std::uint8_t>& mask, double clip_c, std::size_t dim) {
  std::vector<GradientVector> pool;
  for (std::size_t k = 0; k < std::min<std::size_t>(dim, 16); ++k) {
    for (double sign : {1.0, -1.0}) {
      GradientVector e(dim);
      e[k] = sign * clip_c;
      pool.push_back(std::move(e));
    }
  }
  GradientVector s(dim);
  for (std::size_t i = 0; i < grads.size(); ++i) {
    if (mask[i]) s = vec_add(s, oracle_clip(grads[i], clip_c));
  }
  const double sn = norm(s);
  if (sn > 0.0) {
    for (double mult : {1.0, -1.0, 2.0, -2.0}) {
      pool.push_back(vec_scale(mult * clip_c / sn, s));
    }
  }
  GradientVector big(dim);
  const double per = 3.0 * clip_c / std::sqrt(static_cast<double>(dim));
  for (std::size_t k = 0; k < dim; ++k) big[k] = (k % 2 ? -per : per);
  pool.push_back(std::move(big));
  pool.emplace_back(dim);
  return pool;
}

SensitivityReport brute_force_sensitivity(
    const std::vector<GradientVector>& grads, const PoissonMask& mask,
    const std::vector<GradientVector>& transcript_prefix,
    const MechanismConfig& cfg, double clip_c,
    std::optional<std::vector<GradientVector>> probe_pool) {
  if (grads.size() > kMaxSensitivityExamples) {
    throw ConfigError("brute_force_sensitivity: at most 12 examples allowed");
  }
  if (mask.size() != grads.size()) {
    throw DimensionError("brute_force_sensitivity: mask size != dataset size");
  }
  if (grads.empty() && !probe_pool) {
    throw ConfigError(
        "brute_force_sensitivity: empty dataset needs an explicit probe pool");
  }
  const std::size_t dim =
      grads.empty() ? probe_pool->front().dim() : grads.front().dim();
  for (const auto& g : grads) {
    if (g.dim() != dim) throw DimensionError("brute_force_sensitivity: dim");
  }

  const OracleMemory mem = recompute_memory(transcript_prefix, cfg, dim);
  const bool active = !mem.weights.empty();
  const auto& bits = mask.indicators();
  const GradientVector r_d =
      recompute_query(grads, bits, mem.state, cfg, clip_c, active);

  SensitivityReport report;
  report.bound = cfg.memory_variant == MemoryVariant::kCurrentOnly
                     ? clip_c
                     : cfg.beta * clip_c;

  auto record = [&](AdjacencyWitness w, const GradientVector& r_prime) {
    w.observed = norm(vec_sub(r_d, r_prime));
    report.max_observed = std::max(report.max_observed, w.observed);
    report.witnesses.push_back(w);
  };

  for (std::size_t i = 0; i < grads.size(); ++i) {
    std::vector<GradientVector> g2;
    std::vector<std::uint8_t> m2;
    for (std::size_t k = 0; k < grads.size(); ++k) {
      if (k == i) continue;
      g2.push_back(grads[k]);
      m2.push_back(bits[k]);
    }
    record({AdjacencyWitness::Kind::kRemove, i, false, 0.0},
           recompute_query(g2, m2, mem.state, cfg, clip_c, active));
  }

  const std::vector<GradientVector> pool =
      probe_pool ? *probe_pool : default_probe_pool(grads, bits, clip_c, dim);
  for (std::size_t p = 0; p < pool.size(); ++p) {
    if (pool[p].dim() != dim) {
      throw DimensionError("brute_force_sensitivity: probe dimension");
    }
    for (bool included : {true, false}) {
      std::vector<GradientVector> g2 = grads;
      std::vector<std::uint8_t> m2 = bits;
      g2.push_back(pool[p]);
      m2.push_back(included ? 1 : 0);
      record({AdjacencyWitness::Kind::kAdd, p, included, 0.0},
             recompute_query(g2, m2, mem.state, cfg, clip_c, active));
    }
  }
  return report;
}

DecompositionReport check_decomposition(const Transcript& transcript) {
  if (transcript.algorithm == Algorithm::kPostFm) {
    throw ConfigError("check_decomposition: Post-FM has no recursive query");
  }
  const MechanismConfig& cfg = transcript.config;
  const bool current_only =
      cfg.memory_variant == MemoryVariant::kCurrentOnly;
  const double beta = current_only ? 1.0 : cfg.beta;

  DecompositionReport report;
  std::vector<GradientVector> prefix;
  for (std::size_t t = 0; t < transcript.steps.size(); ++t) {
    const StepRecord& rec = transcript.steps[t];
    if (!rec.internals) {
      throw ConfigError("check_decomposition: transcript lacks retained noise");
    }
    const std::size_t dim = rec.release.dim();
    const OracleMemory mem = recompute_memory(prefix, cfg, dim);

    GradientVector m_rec(dim);
    GradientVector m_noise(dim);
    for (std::size_t j = 1; j <= mem.weights.size(); ++j) {
      const StepInternals& past = *transcript.steps[t - j].internals;
      const double w = (1.0 - beta) * mem.weights[j - 1];
      m_rec = vec_add(m_rec, vec_scale(w, past.query));
      m_noise = vec_add(m_noise, vec_scale(w, past.noise));
    }
    const GradientVector rhs = vec_add(
        vec_add(vec_scale(beta, rec.internals->clipped_sum), m_rec), m_noise);
    report.max_relative_error = std::max(
        report.max_relative_error, relative_error(rec.internals->query, rhs));
    report.max_memory_norm = std::max(report.max_memory_norm, norm(m_rec));
    report.max_noise_norm = std::max(report.max_noise_norm, norm(m_noise));
    ++report.steps_checked;
    prefix.push_back(rec.release);
  }
  return report;
}

namespace {

struct SmallProblem {
  DataSplit data;
  MlpShape shape;
  GradientVector theta0;
};

SmallProblem small_problem(std::uint64_t seed) {
  SmallProblem p;
  const Rng master(seed);
  Rng data_rng = master.substream(Stream::kData);
  SyntheticSpec spec;
  spec.num_classes = 3;
  spec.dim = 4;
  spec.per_class_count = 20;
  spec.cluster_std = 0.5;
  spec.train_count = 45;
  spec.test_count = 15;
  p.data = generate_synthetic(spec, data_rng);
  p.shape = MlpShape{spec.dim, 6, 5, spec.num_classes};
  Rng init = master.substream(Stream::kInit);
  p.theta0 = init_params(p.shape, init);
  return p;
}

std::string fmt_error(double e) {
  std::ostringstream os;
  os << "max error " << e;
  return os.str();
}

}  // namespace

std::vector<ReductionResult> check_reductions(std::uint64_t seed,
                                              const MechanismConfig& cfg,
                                              const PrivacyConfig& privacy,
                                              std::size_t steps) {
  const SmallProblem prob = small_problem(seed);
  const MlpGradientSource source(prob.shape, prob.data.train);
  const double eta = 0.5;
  StepOptions keep;
  keep.retain_internals = true;
  std::vector<ReductionResult> out;

  // beta = 1 is DP-SGD, byte for byte.
  {
    MechanismConfig c = cfg;
    c.beta = 1.0;
    c.memory_variant = MemoryVariant::kFractionalCa;
    const Transcript fo = run_transcript(Algorithm::kFoDpSgd, c, privacy, eta,
                                         prob.theta0, source, steps, seed);
    const Transcript dp = run_transcript(Algorithm::kDpSgd, c, privacy, eta,
                                         prob.theta0, source, steps, seed);
    const bool same = transcripts_identical(fo, dp);
    out.push_back({"beta1_equals_dp_sgd", same, same ? 0.0 : 1.0,
                   same ? "transcripts byte-identical"
                        : "transcripts differ"});
  }

  // tau = 0: weights are the normalised (j+1)^(alpha-1) e^(-lambda j).
  {
    MechanismConfig c = cfg;
    c.tau = 0.0;
    c.memory_variant = MemoryVariant::kFractionalCa;
    const Transcript t = run_transcript(Algorithm::kFoDpSgd, c, privacy, eta,
                                        prob.theta0, source, steps, seed);
    double err = 0.0;
    for (const StepRecord& rec : t.steps) {
      std::vector<double> expect(rec.weights.size());
      for (std::size_t j = 1; j <= expect.size(); ++j) {
        const auto jd = static_cast<double>(j);
        expect[j - 1] = std::pow(jd + 1.0, c.alpha - 1.0) *
                        std::exp(-c.temper_lambda * jd);
      }
      if (!expect.empty()) {
        err = std::max(err, max_abs_diff(rec.weights.weights,
                                         normalized(std::move(expect))));
      }
    }
    out.push_back({"tau0_kernel", err <= 1e-12, err, fmt_error(err)});
  }

  // alpha = 1: weights are the normalised exp(-(lambda + chi tau nu_j) j).
  {
    MechanismConfig c = cfg;
    c.alpha = 1.0;
    c.memory_variant = MemoryVariant::kFractionalCa;
    const Transcript t = run_transcript(Algorithm::kFoDpSgd, c, privacy, eta,
                                        prob.theta0, source, steps, seed);
    double err = 0.0;
    std::vector<GradientVector> prefix;
    for (const StepRecord& rec : t.steps) {
      const OracleMemory mem =
          recompute_memory(prefix, c, rec.release.dim());
      if (!mem.weights.empty()) {
        std::vector<double> expect(mem.weights.size());
        for (std::size_t j = 1; j <= expect.size(); ++j) {
          const auto jd = static_cast<double>(j);
          expect[j - 1] =
              std::exp(-(c.temper_lambda + mem.chi * c.tau * mem.nu[j - 1]) * jd);
        }
        err = std::max(err, max_abs_diff(rec.weights.weights,
                                         normalized(std::move(expect))));
      }
      prefix.push_back(rec.release);
    }
    out.push_back({"alpha1_kernel", err <= 1e-12, err, fmt_error(err)});
  }

  // K = 1: no memory, r_t = beta * s_t at every step.
  {
    MechanismConfig c = cfg;
    c.memory_window = 1;
    c.memory_variant = MemoryVariant::kFractionalCa;
    const Transcript t = run_transcript(Algorithm::kFoDpSgd, c, privacy, eta,
                                        prob.theta0, source, steps, seed, keep);
    bool ok = true;
    for (const StepRecord& rec : t.steps) {
      const StepInternals& in = *rec.internals;
      ok = ok && rec.weights.empty() && norm(in.memory) == 0.0 &&
           bitwise_equal(in.query, vec_scale(c.beta, in.clipped_sum));
    }
    out.push_back({"k1_scaled_query", ok, ok ? 0.0 : 1.0,
                   ok ? "r_t == beta*s_t every step" : "memory leaked at K=1"});
  }

  // alpha = 1, lambda = tau = 0: the fractional kernel is uniform.
  {
    MechanismConfig c = cfg;
    c.alpha = 1.0;
    c.temper_lambda = 0.0;
    c.tau = 0.0;
    c.memory_variant = MemoryVariant::kFractionalCa;
    const Transcript fo = run_transcript(Algorithm::kFoDpSgd, c, privacy, eta,
                                         prob.theta0, source, steps, seed);
    const Transcript uni = run_transcript(Algorithm::kUniformMem, c, privacy,
                                          eta, prob.theta0, source, steps, seed);
    double err = 0.0;
    for (const StepRecord& rec : fo.steps) {
      if (rec.weights.empty()) continue;
      const std::vector<double> expect(
          rec.weights.size(), 1.0 / static_cast<double>(rec.weights.size()));
      err = std::max(err, max_abs_diff(rec.weights.weights, expect));
    }
    const double traj = relative_error(fo.final_theta, uni.final_theta);
    const bool ok = err <= 1e-14 && traj <= 1e-12;
    out.push_back({"uniform_limit", ok, std::max(err, traj),
                   fmt_error(err) + ", trajectory relative difference " +
                       std::to_string(traj)});
  }

  // q = 1: every example participates every step.
  {
    PrivacyConfig p = privacy;
    p.q = 1.0;
    const Transcript t = run_transcript(Algorithm::kFoDpSgd, cfg, p, eta,
                                        prob.theta0, source, steps, seed);
    bool ok = true;
    for (const StepRecord& rec : t.steps) ok = ok && rec.batch_size == source.size();
    out.push_back({"full_participation", ok, ok ? 0.0 : 1.0,
                   ok ? "|S_t| == N every step" : "missing examples at q=1"});
  }
  return out;
}

}  // namespace fodp::oracle
