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

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "fodp/core/vector.hpp"

namespace fodp {

/// Named substreams derived from one master seed. Each consumer owns its
/// substream, so drawing masks never shifts the noise sequence.
enum class Stream : std::uint64_t {
  kMask = 1,
  kNoise = 2,
  kInit = 3,
  kData = 4,
};

/// One SplitMix64 step (increment plus mix). Used only to turn
/// (seed, stream id) into engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random source.
///
/// Algorithm (fixed; changing it breaks replay of every stored transcript):
///  - engine: std::mt19937_64, whose output sequence is fixed by the C++
///    standard, seeded with a single 64-bit word;
///  - substream seed: splitmix64(master ^ splitmix64(stream_id));
///  - uniform(): top 53 bits of one engine word times 2^-53, in [0, 1);
///  - uniform_index(n): rejection sampling against the largest multiple of
///    n below 2^64;
///  - gaussian(): Box-Muller on u1 = 1 - uniform() in (0, 1] and u2 =
///    uniform(); the sine variate is cached and returned by the next call.
///
/// Not thread-safe. Give each worker its own substream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Independent generator for a named stream of this generator's seed.
  Rng substream(Stream stream) const;
  /// Independent generator keyed by an arbitrary 64-bit tag.
  Rng substream(std::uint64_t tag) const;

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double gaussian();
  /// Uniform integer in [0, n) by rejection on the top bits; n > 0.
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> cached_gaussian_;
};

/// d i.i.d. N(0, std^2) draws. std == 0 returns the zero vector without
/// touching the generator.
GradientVector gaussian_vector(Rng& rng, std::size_t d, double std);

}  // namespace fodp
