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

#include "fodp/mechanism/mechanism.hpp"

#include <cmath>
#include <string>

#include "fodp/core/errors.hpp"
#include "fodp/sampling/kernels.hpp"
#include "fodp/sampling/poisson_mask.hpp"

namespace fodp {

GradientVector recursive_query(const GradientVector& clipped_sum,
                               const GradientVector& memory, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw ConfigError("recursive_query: beta must lie in (0, 1]");
  }
  require_same_dim(clipped_sum, memory, "recursive_query");
  GradientVector r(clipped_sum.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    r[i] = beta * clipped_sum[i] + (1.0 - beta) * memory[i];
  }
  return r;
}

GradientVector release_noise(std::size_t dim, double sigma, double clip_c,
                             Rng& noise) {
  if (!(sigma >= 0.0)) throw ConfigError("release: sigma must be >= 0");
  return gaussian_vector(noise, dim, sigma * clip_c);
}

GradientVector release(const GradientVector& query, double sigma,
                       double clip_c, Rng& noise) {
  return vec_add(query, release_noise(query.dim(), sigma, clip_c, noise));
}

GradientVector sgd_update(const GradientVector& theta,
                          const GradientVector& release, double eta,
                          double lot_size) {
  if (!(lot_size > 0.0)) throw ConfigError("sgd_update: L must be > 0");
  if (!(eta >= 0.0)) throw ConfigError("sgd_update: eta must be >= 0");
  require_same_dim(theta, release, "sgd_update");
  GradientVector out(theta.dim());
  for (std::size_t i = 0; i < out.dim(); ++i) {
    out[i] = theta[i] - eta * (release[i] / lot_size);
  }
  return out;
}

namespace {

struct SampledSum {
  GradientVector sum;
  std::vector<std::size_t> indices;
};

SampledSum sample_and_sum(const GradientVector& theta,
                          const DatasetHandle& data,
                          const PrivacyConfig& privacy, StepStreams& streams,
                          const StepOptions& opts) {
  if (data.source == nullptr) throw ConfigError("step: dataset not bound");
  if (!(data.expected_lot_size > 0.0)) {
    throw ConfigError("step: expected lot size must be > 0");
  }
  const PoissonMask mask = draw_mask(streams.mask, data.size(), privacy.q);
  SampledSum out;
  out.indices = mask.sampled_indices();
  out.sum = opts.parallel
                ? clipped_sum_parallel(*data.source, theta, out.indices,
                                       privacy.clip_c)
                : clipped_sum_serial(*data.source, theta, out.indices,
                                     privacy.clip_c);
  return out;
}

void require_finite(const GradientVector& v, const char* what) {
  if (!v.all_finite()) {
    throw NumericError(std::string("step: non-finite ") + what);
  }
}

}  // namespace

StepRecord fo_dp_sgd_step(MechanismState& state, const DatasetHandle& data,
                          const MechanismConfig& cfg,
                          const PrivacyConfig& privacy, double eta,
                          StepStreams& streams, const StepOptions& opts) {
  cfg.validate();
  privacy.validate();
  if (state.buffer.memory_window() != cfg.memory_window) {
    throw ConfigError("fo_dp_sgd_step: buffer window differs from config K");
  }
  const std::size_t dim = state.theta.dim();

  SampledSum s = sample_and_sum(state.theta, data, privacy, streams, opts);

  StepRecord rec;
  rec.step = state.buffer.step();
  rec.batch_size = s.indices.size();

  GradientVector memory(dim);
  GradientVector query;
  if (cfg.memory_variant == MemoryVariant::kCurrentOnly) {
    query = s.sum;
  } else if (state.buffer.active_window() == 1) {
    query = vec_scale(cfg.beta, s.sum);
  } else {
    rec.weights = variant_weights(state.buffer, cfg);
    memory = memory_state(state.buffer, rec.weights, dim);
    query = recursive_query(s.sum, memory, cfg.beta);
  }

  GradientVector noise =
      release_noise(dim, privacy.sigma, privacy.clip_c, streams.noise);
  rec.release = vec_add(query, noise);
  require_finite(rec.release, "release");

  rec.noisy_grad = GradientVector(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    rec.noisy_grad[i] = rec.release[i] / data.expected_lot_size;
  }
  rec.direction = rec.noisy_grad;
  state.theta =
      sgd_update(state.theta, rec.release, eta, data.expected_lot_size);
  state.buffer.push(rec.release, cfg.gamma);

  if (opts.retain_internals) {
    rec.internals = StepInternals{std::move(s.sum), std::move(memory),
                                  std::move(query), std::move(noise),
                                  std::move(s.indices)};
  }
  return rec;
}

StepRecord post_fm_step(PostFmState& state, const DatasetHandle& data,
                        const MechanismConfig& cfg,
                        const PrivacyConfig& privacy, double eta_post,
                        StepStreams& streams, const StepOptions& opts) {
  cfg.validate();
  privacy.validate();
  if (!(eta_post >= 0.0)) throw ConfigError("post_fm_step: eta_post < 0");
  if (state.buffer.memory_window() != cfg.memory_window) {
    throw ConfigError("post_fm_step: buffer window differs from config K");
  }
  const std::size_t dim = state.theta.dim();

  SampledSum s = sample_and_sum(state.theta, data, privacy, streams, opts);

  StepRecord rec;
  rec.step = state.buffer.step();
  rec.batch_size = s.indices.size();

  GradientVector noise =
      release_noise(dim, privacy.sigma, privacy.clip_c, streams.noise);
  rec.release = vec_add(s.sum, noise);
  require_finite(rec.release, "release");
  rec.noisy_grad = GradientVector(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    rec.noisy_grad[i] = rec.release[i] / data.expected_lot_size;
  }

  GradientVector memory(dim);
  if (state.buffer.active_window() == 1) {
    rec.direction = vec_scale(cfg.beta, rec.noisy_grad);
  } else {
    rec.weights = kernel_weights(state.buffer, cfg);
    memory = memory_state(state.buffer, rec.weights, dim);
    rec.direction = recursive_query(rec.noisy_grad, memory, cfg.beta);
  }

  GradientVector next(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    next[i] = state.theta[i] - eta_post * rec.direction[i];
  }
  state.theta = std::move(next);
  state.buffer.push(rec.noisy_grad, cfg.gamma);

  if (opts.retain_internals) {
    rec.internals = StepInternals{s.sum, std::move(memory), s.sum,
                                  std::move(noise), std::move(s.indices)};
  }
  return rec;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kFoDpSgd:
      return "fo_dp_sgd";
    case Algorithm::kDpSgd:
      return "dp_sgd";
    case Algorithm::kPostFm:
      return "post_fm";
    case Algorithm::kUniformMem:
      return "uniform_mem";
    case Algorithm::kExponentialMem:
      return "exponential_mem";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "fo_dp_sgd") return Algorithm::kFoDpSgd;
  if (name == "dp_sgd") return Algorithm::kDpSgd;
  if (name == "post_fm") return Algorithm::kPostFm;
  if (name == "uniform_mem") return Algorithm::kUniformMem;
  if (name == "exponential_mem") return Algorithm::kExponentialMem;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

MechanismConfig effective_config(Algorithm a, const MechanismConfig& cfg) {
  MechanismConfig out = cfg;
  switch (a) {
    case Algorithm::kFoDpSgd:
    case Algorithm::kPostFm:
      break;
    case Algorithm::kDpSgd:
      out.memory_variant = MemoryVariant::kCurrentOnly;
      break;
    case Algorithm::kUniformMem:
      out.memory_variant = MemoryVariant::kUniform;
      break;
    case Algorithm::kExponentialMem:
      out.memory_variant = MemoryVariant::kExponential;
      break;
  }
  return out;
}

double noise_ratio(Algorithm a, const MechanismConfig& cfg,
                   const PrivacyConfig& privacy) {
  const MechanismConfig eff = effective_config(a, cfg);
  if (a == Algorithm::kPostFm ||
      eff.memory_variant == MemoryVariant::kCurrentOnly) {
    return privacy.sigma;
  }
  return privacy.sigma / eff.beta;
}

Trainer::Trainer(Algorithm algorithm, const MechanismConfig& cfg,
                 const PrivacyConfig& privacy, double eta, double eta_post,
                 GradientVector theta0, std::uint64_t seed)
    : algorithm_(algorithm),
      cfg_(effective_config(algorithm, cfg)),
      privacy_(privacy),
      eta_(eta),
      eta_post_(eta_post),
      streams_(StepStreams::from_seed(seed)) {
  cfg_.validate();
  privacy_.validate();
  if (!(eta >= 0.0) || !(eta_post >= 0.0)) {
    throw ConfigError("Trainer: learning rates must be >= 0");
  }
  if (algorithm_ == Algorithm::kPostFm) {
    post_.emplace(std::move(theta0), cfg_.memory_window);
  } else {
    fo_.emplace(std::move(theta0), cfg_.memory_window);
  }
}

StepRecord Trainer::step(const DatasetHandle& data, const StepOptions& opts) {
  ++steps_;
  if (post_) {
    return post_fm_step(*post_, data, cfg_, privacy_, eta_post_, streams_,
                        opts);
  }
  return fo_dp_sgd_step(*fo_, data, cfg_, privacy_, eta_, streams_, opts);
}

const GradientVector& Trainer::theta() const {
  return post_ ? post_->theta : fo_->theta;
}

Transcript run_transcript(Algorithm algorithm, const MechanismConfig& cfg,
                          const PrivacyConfig& privacy, double eta,
                          const GradientVector& theta0,
                          const GradientSource& source, std::size_t steps,
                          std::uint64_t seed, const StepOptions& opts) {
  Trainer trainer(algorithm, cfg, privacy, eta, eta, theta0, seed);
  const DatasetHandle data = DatasetHandle::make(source, privacy.q);
  Transcript t;
  t.config = trainer.config();
  t.privacy = privacy;
  t.algorithm = algorithm;
  t.seed = seed;
  t.steps.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) t.steps.push_back(trainer.step(data, opts));
  t.final_theta = trainer.theta();
  return t;
}

bool transcripts_identical(const Transcript& a, const Transcript& b) {
  if (a.steps.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const StepRecord& x = a.steps[i];
    const StepRecord& y = b.steps[i];
    if (x.step != y.step || x.batch_size != y.batch_size) return false;
    if (!bitwise_equal(x.release, y.release)) return false;
    if (!bitwise_equal(x.noisy_grad, y.noisy_grad)) return false;
    if (!bitwise_equal(x.direction, y.direction)) return false;
  }
  return bitwise_equal(a.final_theta, b.final_theta);
}

}  // namespace fodp
