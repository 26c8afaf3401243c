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
#include <vector>

#include "fodp/core/config.hpp"
#include "fodp/core/vector.hpp"
#include "fodp/memory/release_buffer.hpp"

namespace fodp {

/// Normalised lag weights for one step. weights[j-1] multiplies the release
/// from j steps ago. log_raw, chi and nu are filled for the fractional
/// kernel only.
struct KernelWeights {
  std::vector<double> weights;
  std::vector<double> log_raw;
  std::vector<double> nu;
  double chi = 0.0;

  std::size_t size() const { return weights.size(); }
  bool empty() const { return weights.empty(); }
};

/// ||release - ema|| / (max(||ema||, kappa) + eps_stab).
double inconsistency(const GradientVector& release_lag,
                     const GradientVector& ema, double kappa, double eps_stab);

/// ||ema|| / (||ema|| + zeta), in [0, 1).
double confidence(const GradientVector& ema, double zeta);

/// log of the raw kernel coefficient
/// (j+1)^(alpha-1) * exp(-(lambda + chi*tau*nu) * j).
double log_raw_coefficient(std::size_t lag, double alpha, double temper_lambda,
                           double chi, double tau, double nu);

/// Normalises log-domain coefficients with max subtraction. Always returns a
/// probability vector, even when every exp() would underflow on its own.
std::vector<double> normalize_log_weights(const std::vector<double>& log_raw);

/// Confidence-aware fractional kernel over the buffer's active lags.
/// Requires K_t >= 2 (otherwise ConfigError); needs a defined EMA.
KernelWeights kernel_weights(const ReleaseBuffer& buffer,
                             const MechanismConfig& cfg);

std::vector<double> uniform_weights(std::size_t lags);
std::vector<double> exponential_weights(std::size_t lags, double decay);

/// Weights for cfg.memory_variant. Empty when K_t == 1 or for current_only.
KernelWeights variant_weights(const ReleaseBuffer& buffer,
                              const MechanismConfig& cfg);

/// sum_j weights[j-1] * lag(j). Empty weights give the zero vector of
/// dimension `dim`.
GradientVector memory_state(const ReleaseBuffer& buffer,
                            const KernelWeights& weights, std::size_t dim);

}  // namespace fodp
