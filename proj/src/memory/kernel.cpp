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

#include "fodp/memory/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fodp/core/errors.hpp"

namespace fodp {

double inconsistency(const GradientVector& release_lag,
                     const GradientVector& ema, double kappa,
                     double eps_stab) {
  if (!(kappa > 0.0) || !(eps_stab > 0.0)) {
    throw ConfigError("inconsistency: kappa and eps_stab must be > 0");
  }
  const double deviation = vec_norm2(vec_sub(release_lag, ema));
  return deviation / (std::max(vec_norm2(ema), kappa) + eps_stab);
}

double confidence(const GradientVector& ema, double zeta) {
  if (!(zeta > 0.0)) throw ConfigError("confidence: zeta must be > 0");
  const double n = vec_norm2(ema);
  return n / (n + zeta);
}

double log_raw_coefficient(std::size_t lag, double alpha, double temper_lambda,
                           double chi, double tau, double nu) {
  const auto j = static_cast<double>(lag);
  return (alpha - 1.0) * std::log(j + 1.0) -
         (temper_lambda + chi * tau * nu) * j;
}

std::vector<double> normalize_log_weights(const std::vector<double>& log_raw) {
  std::vector<double> w(log_raw.size());
  if (w.empty()) return w;
  const double peak = *std::max_element(log_raw.begin(), log_raw.end());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_raw[i] - peak);
    total += w[i];
  }
  // total >= 1 because the peak term is exp(0).
  for (double& v : w) v /= total;
  return w;
}

KernelWeights kernel_weights(const ReleaseBuffer& buffer,
                             const MechanismConfig& cfg) {
  const std::size_t lags = buffer.active_window() - 1;
  if (lags == 0) {
    throw ConfigError("kernel_weights: K_t < 2, memory state is zero");
  }
  if (!buffer.ema()) throw ConfigError("kernel_weights: EMA undefined");
  const GradientVector& ema = *buffer.ema();

  KernelWeights out;
  out.chi = confidence(ema, cfg.zeta);
  out.nu.resize(lags);
  out.log_raw.resize(lags);
  for (std::size_t j = 1; j <= lags; ++j) {
    out.nu[j - 1] = inconsistency(buffer.lag(j), ema, cfg.kappa, cfg.eps_stab);
    out.log_raw[j - 1] = log_raw_coefficient(j, cfg.alpha, cfg.temper_lambda,
                                             out.chi, cfg.tau, out.nu[j - 1]);
  }
  out.weights = normalize_log_weights(out.log_raw);
  return out;
}

std::vector<double> uniform_weights(std::size_t lags) {
  return std::vector<double>(lags, lags ? 1.0 / static_cast<double>(lags) : 0);
}

std::vector<double> exponential_weights(std::size_t lags, double decay) {
  std::vector<double> w(lags);
  double total = 0.0;
  double p = 1.0;
  for (std::size_t j = 0; j < lags; ++j) {
    w[j] = p;
    total += p;
    p *= decay;
  }
  for (double& v : w) v /= total;
  return w;
}

KernelWeights variant_weights(const ReleaseBuffer& buffer,
                              const MechanismConfig& cfg) {
  const std::size_t lags = buffer.active_window() - 1;
  KernelWeights out;
  if (lags == 0) return out;
  switch (cfg.memory_variant) {
    case MemoryVariant::kFractionalCa:
      return kernel_weights(buffer, cfg);
    case MemoryVariant::kUniform:
      out.weights = uniform_weights(lags);
      break;
    case MemoryVariant::kExponential:
      out.weights = exponential_weights(lags, cfg.exp_decay);
      break;
    case MemoryVariant::kCurrentOnly:
      break;
  }
  return out;
}

GradientVector memory_state(const ReleaseBuffer& buffer,
                            const KernelWeights& weights, std::size_t dim) {
  GradientVector u(dim);
  if (weights.empty()) return u;
  if (weights.size() != buffer.size()) {
    throw DimensionError("memory_state: weight count does not match buffer");
  }
  for (std::size_t j = 1; j <= weights.size(); ++j) {
    const GradientVector& s = buffer.lag(j);
    if (s.dim() != dim) throw DimensionError("memory_state: release dim");
    vec_axpy_inplace(weights.weights[j - 1], s, u);
  }
  return u;
}

}  // namespace fodp
