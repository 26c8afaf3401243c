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
#include <deque>
#include <optional>

#include "fodp/core/vector.hpp"

namespace fodp {

/// Transcript window h_t: the last K-1 releases (newest first) plus the EMA
/// trend. At the start of step t it holds min(K-1, t) releases, and the EMA
/// has seen releases up to index t-1 only.
class ReleaseBuffer {
 public:
  /// memory_window is K; the buffer keeps K-1 releases.
  explicit ReleaseBuffer(std::size_t memory_window);

  std::size_t memory_window() const { return memory_window_; }
  std::size_t capacity() const { return memory_window_ - 1; }
  std::size_t size() const { return releases_.size(); }
  /// Number of releases recorded so far (the next step index t).
  std::size_t step() const { return step_; }
  /// K_t = min(K, t+1).
  std::size_t active_window() const;

  /// The release from j steps ago, j in [1, size()].
  const GradientVector& lag(std::size_t j) const;
  const std::deque<GradientVector>& releases() const { return releases_; }
  const std::optional<GradientVector>& ema() const { return ema_; }

  /// Records a new release: updates the EMA (initialised to the first
  /// release, then gamma*new + (1-gamma)*ema), inserts at the front and
  /// evicts beyond capacity.
  void push(const GradientVector& release, double gamma);

 private:
  std::size_t memory_window_;
  std::size_t step_ = 0;
  std::deque<GradientVector> releases_;
  std::optional<GradientVector> ema_;
};

/// Functional form of ReleaseBuffer::push.
ReleaseBuffer ema_update(ReleaseBuffer buffer, const GradientVector& release,
                         double gamma);

}  // namespace fodp
