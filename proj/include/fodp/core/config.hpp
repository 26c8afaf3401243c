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
#include <string>
#include <string_view>

namespace fodp {

/// How the memory state u_{t-1} is built from the release history.
enum class MemoryVariant {
  kFractionalCa,  // confidence-aware tempered fractional kernel
  kUniform,       // equal weights over the window
  kExponential,   // geometric decay exp_decay^(j-1)
  kCurrentOnly,   // no memory; the query is the plain clipped sum
};

std::string_view to_string(MemoryVariant v);
MemoryVariant parse_memory_variant(std::string_view name);

/// Hyperparameters of the recursive query and its memory kernel.
///
/// Defaults for beta, alpha and memory_window are the main FO-DP-SGD
/// setting. The others (temper_lambda, tau, gamma, kappa, zeta, eps_stab,
/// exp_decay) are tuning knobs with conservative starting values.
struct MechanismConfig {
  double beta = 0.90;
  double alpha = 0.80;
  std::size_t memory_window = 8;  // K
  double temper_lambda = 0.05;    // baseline tempering
  double tau = 1.0;               // inconsistency-aware tempering
  double gamma = 0.2;             // EMA coefficient
  double kappa = 1e-3;            // minimum normalisation scale
  double zeta = 1.0;              // confidence parameter
  double eps_stab = 1e-8;
  MemoryVariant memory_variant = MemoryVariant::kFractionalCa;
  double exp_decay = 0.5;  // only read by kExponential

  /// Throws ConfigError on any out-of-range field.
  void validate() const;
};

struct PrivacyConfig {
  double clip_c = 1.0;
  double sigma = 1.1;
  double q = 0.04;
  double delta = 1e-5;
  std::size_t steps_T = 1;

  void validate() const;
};

}  // namespace fodp
