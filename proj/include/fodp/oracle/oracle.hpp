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
#include <string>
#include <vector>

#include "fodp/core/config.hpp"
#include "fodp/core/vector.hpp"
#include "fodp/mechanism/mechanism.hpp"
#include "fodp/sampling/poisson_mask.hpp"

// Independent verifiers. Nothing here calls the mechanism's clipping, kernel
// or query code: those formulas are re-derived below so that agreement with
// the mechanism is evidence rather than a tautology.
namespace fodp::oracle {

inline constexpr std::size_t kMaxSensitivityExamples = 12;

/// History-conditioned memory state recomputed from scratch.
struct OracleMemory {
  std::vector<double> weights;  // lag 1 first
  GradientVector state;
  double chi = 0.0;
  std::vector<double> nu;
};

/// Rebuilds the EMA, window and weights for step t = releases.size() from
/// releases s~_0 .. s~_{t-1} (oldest first) using direct exponentiation.
OracleMemory recompute_memory(const std::vector<GradientVector>& releases,
                              const MechanismConfig& cfg, std::size_t dim);

/// r_t for a dataset of per-example gradients under a fixed mask and fixed
/// memory state.
GradientVector recompute_query(const std::vector<GradientVector>& grads,
                               const std::vector<std::uint8_t>& mask,
                               const GradientVector& memory,
                               const MechanismConfig& cfg, double clip_c,
                               bool memory_active);

struct AdjacencyWitness {
  enum class Kind { kRemove, kAdd } kind = Kind::kRemove;
  std::size_t index = 0;       // removed member or probe index
  bool added_included = false; // mask bit of the added example
  double observed = 0.0;       // ||r_t(D) - r_t(D')||
};

struct SensitivityReport {
  double max_observed = 0.0;
  double bound = 0.0;  // beta*C (C for current_only)
  std::vector<AdjacencyWitness> witnesses;

  bool violation() const { return max_observed > bound + 1e-10; }
};

/// Default add-one probes: +-C e_k for the first min(dim, 16) axes, +-C and
/// +-2C along the current clipped-sum direction, one probe of norm 3C and
/// the zero vector.
std::vector<GradientVector> default_probe_pool(
    const std::vector<GradientVector>& grads,
    const std::vector<std::uint8_t>& mask, double clip_c, std::size_t dim);

/// Enumerates every remove-one neighbour and every add-one neighbour from
/// the probe pool (with the new example both sampled and not), recomputing
/// r_t with the mask and transcript held fixed. `grads` are the per-example
/// gradients of D at theta_t; `transcript_prefix` is s~_0 .. s~_{t-1}.
SensitivityReport brute_force_sensitivity(
    const std::vector<GradientVector>& grads, const PoissonMask& mask,
    const std::vector<GradientVector>& transcript_prefix,
    const MechanismConfig& cfg, double clip_c,
    std::optional<std::vector<GradientVector>> probe_pool = std::nullopt);

struct DecompositionReport {
  double max_relative_error = 0.0;
  double max_memory_norm = 0.0;  // max ||M^rec||
  double max_noise_norm = 0.0;   // max ||M^noise||
  std::size_t steps_checked = 0;
};

/// Checks r_t = beta*s_t + M^rec_t + M^noise_t at every step of a
/// sum-level transcript recorded with retain_internals. Throws ConfigError
/// if the transcript lacks internals or comes from Post-FM.
DecompositionReport check_decomposition(const Transcript& transcript);

struct ReductionResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  std::string detail;
};

/// Runs the limiting-regime checks on a small built-in problem:
///  beta1_equals_dp_sgd, tau0_kernel, alpha1_kernel, k1_scaled_query,
///  uniform_limit.
std::vector<ReductionResult> check_reductions(std::uint64_t seed,
                                              const MechanismConfig& cfg,
                                              const PrivacyConfig& privacy,
                                              std::size_t steps = 20);

}  // namespace fodp::oracle

namespace fodp::oracle {

/// A randomly drawn adjacency-check instance.
struct SensitivityInstance {
  std::vector<GradientVector> grads;
  PoissonMask mask;
  std::vector<GradientVector> transcript_prefix;
  MechanismConfig config;
};

/// n per-example gradients in `dim` dimensions with norms spread around
/// clip_c (some clipped, some not), a Bernoulli(1/2) mask, a random-length
/// transcript prefix and randomised kernel hyperparameters at the given
/// beta. memory_window is fixed at 8.
SensitivityInstance random_sensitivity_instance(Rng& rng, double beta,
                                                double clip_c,
                                                std::size_t n = 8,
                                                std::size_t dim = 5);

struct VerifyOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the sensitivity sweep (trials instances for each beta in
/// {1.0, 0.9, 0.5}), a 30-step K=8 decomposition check and the reduction
/// checks. Used by `fodp verify`.
std::vector<VerifyOutcome> verify_suite(std::uint64_t seed,
                                        std::size_t trials = 100);

}  // namespace fodp::oracle
