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

#include "fodp/memory/release_buffer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fodp/core/errors.hpp"

namespace fodp {

ReleaseBuffer::ReleaseBuffer(std::size_t memory_window)
    : memory_window_(memory_window) {
  if (memory_window == 0) {
    throw ConfigError("ReleaseBuffer: memory_window must be >= 1");
  }
}

std::size_t ReleaseBuffer::active_window() const {
  return std::min(memory_window_, step_ + 1);
}

const GradientVector& ReleaseBuffer::lag(std::size_t j) const {
  if (j == 0 || j > releases_.size()) {
    throw std::out_of_range("ReleaseBuffer::lag: lag " + std::to_string(j) +
                            " outside [1, " + std::to_string(size()) + "]");
  }
  return releases_[j - 1];
}

void ReleaseBuffer::push(const GradientVector& release, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("ema_update: gamma must lie in (0, 1]");
  }
  if (ema_) {
    require_same_dim(release, *ema_, "ema_update");
    GradientVector& e = *ema_;
    for (std::size_t i = 0; i < e.dim(); ++i) {
      e[i] = gamma * release[i] + (1.0 - gamma) * e[i];
    }
  } else {
    ema_ = release;
  }
  if (capacity() > 0) {
    releases_.push_front(release);
    while (releases_.size() > capacity()) releases_.pop_back();
  }
  ++step_;
}

ReleaseBuffer ema_update(ReleaseBuffer buffer, const GradientVector& release,
                         double gamma) {
  buffer.push(release, gamma);
  return buffer;
}

}  // namespace fodp
