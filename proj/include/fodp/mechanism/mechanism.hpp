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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fodp/core/config.hpp"
#include "fodp/core/rng.hpp"
#include "fodp/core/vector.hpp"
#include "fodp/memory/kernel.hpp"
#include "fodp/memory/release_buffer.hpp"
#include "fodp/sampling/gradient_source.hpp"

namespace fodp {

/// beta*s + (1-beta)*u.
GradientVector recursive_query(const GradientVector& clipped_sum,
                               const GradientVector& memory, double beta);

/// Z ~ N(0, sigma^2 C^2 I) from the noise stream.
GradientVector release_noise(std::size_t dim, double sigma, double clip_c,
                             Rng& noise);

/// query + Z.
GradientVector release(const GradientVector& query, double sigma,
                       double clip_c, Rng& noise);

/// theta - eta * (release / L).
GradientVector sgd_update(const GradientVector& theta,
                          const GradientVector& release, double eta,
                          double lot_size);

/// Values that must not leave the privacy boundary. Populated only when
/// StepOptions::retain_internals is set (tests and `fodp verify`).
struct StepInternals {
  GradientVector clipped_sum;  // s_t
  GradientVector memory;       // u_{t-1}
  GradientVector query;        // r_t (Post-FM: the un-noised s_t)
  GradientVector noise;        // Z_t
  std::vector<std::size_t> sampled;  // S_t
};

struct StepRecord {
  std::size_t step = 0;
  std::size_t batch_size = 0;   // |S_t|
  GradientVector release;       // s~_t
  GradientVector noisy_grad;    // g~_t = s~_t / L
  GradientVector direction;     // what theta moved along (Post-FM: v_t)
  KernelWeights weights;
  std::optional<StepInternals> internals;
};

struct StepOptions {
  bool retain_internals = false;
  bool parallel = true;  // OpenMP per-example kernel; results are identical
};

/// Independent mask and noise streams for one run.
struct StepStreams {
  Rng mask;
  Rng noise;

  static StepStreams from_seed(std::uint64_t seed) {
    const Rng master(seed);
    return StepStreams{master.substream(Stream::kMask),
                       master.substream(Stream::kNoise)};
  }
};

/// theta_t plus the sum-level release window.
struct MechanismState {
  GradientVector theta;
  ReleaseBuffer buffer;

  MechanismState(GradientVector theta0, std::size_t memory_window)
      : theta(std::move(theta0)), buffer(memory_window) {}
};

/// One iteration of the recursive release mechanism, in the fixed order:
/// mask, per-example gradients, clip, sum, K_t gate, weights and memory
/// state, query, release, update, buffer/EMA update. The memory rule follows
/// cfg.memory_variant; kCurrentOnly uses r_t = s_t regardless of beta.
StepRecord fo_dp_sgd_step(MechanismState& state, const DatasetHandle& data,
                          const MechanismConfig& cfg,
                          const PrivacyConfig& privacy, double eta,
                          StepStreams& streams, const StepOptions& opts = {});

/// Post-processing baseline state: theta plus a gradient-level window over
/// the standard releases g~^std.
struct PostFmState {
  GradientVector theta;
  ReleaseBuffer buffer;

  PostFmState(GradientVector theta0, std::size_t memory_window)
      : theta(std::move(theta0)), buffer(memory_window) {}
};

/// Standard DP-SGD release g~ = (s_t + Z_t)/L, then the same confidence-aware
/// memory rule applied to the g~ history: v = beta*g~ + (1-beta)*u^post.
StepRecord post_fm_step(PostFmState& state, const DatasetHandle& data,
                        const MechanismConfig& cfg,
                        const PrivacyConfig& privacy, double eta_post,
                        StepStreams& streams, const StepOptions& opts = {});

/// Training algorithms exposed by the harness.
enum class Algorithm {
  kFoDpSgd,
  kDpSgd,
  kPostFm,
  kUniformMem,
  kExponentialMem,
};

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

/// The mechanism configuration an algorithm actually runs with.
MechanismConfig effective_config(Algorithm a, const MechanismConfig& cfg);

/// Noise-to-sensitivity ratio used by the accountant: sigma/beta when memory
/// enters the query before noise, sigma otherwise.
double noise_ratio(Algorithm a, const MechanismConfig& cfg,
                   const PrivacyConfig& privacy);

/// Steps any algorithm through a common interface.
class Trainer {
 public:
  Trainer(Algorithm algorithm, const MechanismConfig& cfg,
          const PrivacyConfig& privacy, double eta, double eta_post,
          GradientVector theta0, std::uint64_t seed);

  StepRecord step(const DatasetHandle& data, const StepOptions& opts = {});

  const GradientVector& theta() const;
  Algorithm algorithm() const { return algorithm_; }
  const MechanismConfig& config() const { return cfg_; }
  std::size_t steps_taken() const { return steps_; }

 private:
  Algorithm algorithm_;
  MechanismConfig cfg_;
  PrivacyConfig privacy_;
  double eta_;
  double eta_post_;
  StepStreams streams_;
  std::optional<MechanismState> fo_;
  std::optional<PostFmState> post_;
  std::size_t steps_ = 0;
};

/// Released transcript of a run plus the configuration that produced it.
struct Transcript {
  std::vector<StepRecord> steps;
  MechanismConfig config;
  PrivacyConfig privacy;
  Algorithm algorithm = Algorithm::kFoDpSgd;
  std::uint64_t seed = 0;
  GradientVector final_theta;
};

Transcript run_transcript(Algorithm algorithm, const MechanismConfig& cfg,
                          const PrivacyConfig& privacy, double eta,
                          const GradientVector& theta0,
                          const GradientSource& source, std::size_t steps,
                          std::uint64_t seed, const StepOptions& opts = {});

/// Byte equality of the released values (s~_t, g~_t, |S_t|) and final theta.
bool transcripts_identical(const Transcript& a, const Transcript& b);

}  // namespace fodp
