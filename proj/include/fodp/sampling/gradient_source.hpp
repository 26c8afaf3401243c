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

#include "fodp/core/vector.hpp"

namespace fodp {

/// Per-example gradient access for a dataset at a given parameter vector.
/// gradient() must be pure and safe to call concurrently.
class GradientSource {
 public:
  virtual ~GradientSource() = default;
  virtual std::size_t size() const = 0;
  virtual std::size_t dim() const = 0;
  virtual GradientVector gradient(const GradientVector& theta,
                                  std::size_t index) const = 0;
};

/// Dataset view used by the mechanism: N examples plus the expected lot
/// size L = N*q.
struct DatasetHandle {
  const GradientSource* source = nullptr;
  double expected_lot_size = 0.0;

  static DatasetHandle make(const GradientSource& source, double q) {
    return DatasetHandle{&source, static_cast<double>(source.size()) * q};
  }
  std::size_t size() const { return source->size(); }
};

}  // namespace fodp
