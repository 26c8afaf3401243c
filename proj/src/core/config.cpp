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

#include "fodp/core/config.hpp"

#include <cmath>
#include <string>

#include "fodp/core/errors.hpp"

namespace fodp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool in_half_open_unit(double v) {  // (0, 1]
  return std::isfinite(v) && v > 0.0 && v <= 1.0;
}

}  // namespace

std::string_view to_string(MemoryVariant v) {
  switch (v) {
    case MemoryVariant::kFractionalCa:
      return "fractional_ca";
    case MemoryVariant::kUniform:
      return "uniform";
    case MemoryVariant::kExponential:
      return "exponential";
    case MemoryVariant::kCurrentOnly:
      return "current_only";
  }
  return "unknown";
}

MemoryVariant parse_memory_variant(std::string_view name) {
  if (name == "fractional_ca") return MemoryVariant::kFractionalCa;
  if (name == "uniform") return MemoryVariant::kUniform;
  if (name == "exponential") return MemoryVariant::kExponential;
  if (name == "current_only") return MemoryVariant::kCurrentOnly;
  throw ConfigError("unknown memory_variant '" + std::string(name) + "'");
}

void MechanismConfig::validate() const {
  require(in_half_open_unit(beta), "beta must lie in (0, 1]");
  require(in_half_open_unit(alpha), "alpha must lie in (0, 1]");
  require(memory_window >= 1, "memory_window must be a positive integer");
  require(std::isfinite(temper_lambda) && temper_lambda >= 0.0,
          "temper_lambda must be >= 0");
  require(std::isfinite(tau) && tau >= 0.0, "tau must be >= 0");
  require(in_half_open_unit(gamma), "gamma must lie in (0, 1]");
  require(std::isfinite(kappa) && kappa > 0.0, "kappa must be > 0");
  require(std::isfinite(zeta) && zeta > 0.0, "zeta must be > 0");
  require(std::isfinite(eps_stab) && eps_stab > 0.0, "eps_stab must be > 0");
  if (memory_variant == MemoryVariant::kExponential) {
    require(std::isfinite(exp_decay) && exp_decay > 0.0 && exp_decay < 1.0,
            "exp_decay must lie in (0, 1)");
  }
}

void PrivacyConfig::validate() const {
  require(std::isfinite(clip_c) && clip_c > 0.0, "clip_c must be > 0");
  require(std::isfinite(sigma) && sigma > 0.0, "sigma must be > 0");
  require(in_half_open_unit(q), "q must lie in (0, 1]");
  require(std::isfinite(delta) && delta > 0.0 && delta < 1.0,
          "delta must lie in (0, 1)");
  require(steps_T >= 1, "steps_T must be a positive integer");
}

}  // namespace fodp
