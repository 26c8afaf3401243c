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

#include "fodp/core/rng.hpp"

#include <cmath>
#include <numbers>

#include "fodp/core/errors.hpp"

namespace fodp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

Rng Rng::substream(Stream stream) const {
  return substream(static_cast<std::uint64_t>(stream));
}

Rng Rng::substream(std::uint64_t tag) const {
  return Rng(splitmix64(seed_ ^ splitmix64(tag)));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  if (n == 0) throw ConfigError("uniform_index: n must be > 0");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

double Rng::gaussian() {
  if (cached_gaussian_) {
    const double z = *cached_gaussian_;
    cached_gaussian_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

GradientVector gaussian_vector(Rng& rng, std::size_t d, double std) {
  if (!(std >= 0.0) || !std::isfinite(std)) {
    throw ConfigError("gaussian_vector: std must be finite and >= 0");
  }
  GradientVector out(d);
  if (std == 0.0) return out;
  for (std::size_t i = 0; i < d; ++i) out[i] = std * rng.gaussian();
  return out;
}

}  // namespace fodp
