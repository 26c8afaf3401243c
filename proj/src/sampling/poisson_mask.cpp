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

#include "fodp/sampling/poisson_mask.hpp"

#include <algorithm>
#include <cmath>

#include "fodp/core/errors.hpp"

namespace fodp {

PoissonMask::PoissonMask(std::vector<std::uint8_t> indicators)
    : indicators_(std::move(indicators)) {
  for (auto& v : indicators_) v = v ? 1 : 0;
}

std::vector<std::size_t> PoissonMask::sampled_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < indicators_.size(); ++i) {
    if (indicators_[i]) out.push_back(i);
  }
  return out;
}

std::size_t PoissonMask::sampled_count() const {
  return static_cast<std::size_t>(
      std::count(indicators_.begin(), indicators_.end(), 1));
}

PoissonMask draw_mask(Rng& rng, std::size_t n, double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ConfigError("draw_mask: q must lie in [0, 1]");
  }
  std::vector<std::uint8_t> ind(n);
  for (std::size_t i = 0; i < n; ++i) ind[i] = rng.uniform() < q ? 1 : 0;
  return PoissonMask(std::move(ind));
}

}  // namespace fodp
