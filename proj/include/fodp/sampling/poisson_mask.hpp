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
#include <vector>

#include "fodp/core/rng.hpp"

namespace fodp {

/// One Poisson subsampling draw: indicator m_{t,i} per example.
class PoissonMask {
 public:
  PoissonMask() = default;
  explicit PoissonMask(std::vector<std::uint8_t> indicators);

  std::size_t size() const { return indicators_.size(); }
  bool included(std::size_t i) const { return indicators_[i] != 0; }
  const std::vector<std::uint8_t>& indicators() const { return indicators_; }

  /// S_t in ascending index order.
  std::vector<std::size_t> sampled_indices() const;
  std::size_t sampled_count() const;

 private:
  std::vector<std::uint8_t> indicators_;
};

/// N independent Bernoulli(q) indicators: m_i = [uniform() < q].
/// Consumes exactly N uniforms from rng regardless of q.
PoissonMask draw_mask(Rng& rng, std::size_t n, double q);

}  // namespace fodp
