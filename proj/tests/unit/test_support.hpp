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
#include <vector>

#include "fodp/core/vector.hpp"
#include "fodp/sampling/gradient_source.hpp"

namespace fodp::testing {

// Fixed per-example gradients that ignore theta; handy for hand checks.
class TableSource : public GradientSource {
 public:
  explicit TableSource(std::vector<GradientVector> rows)
      : rows_(std::move(rows)) {}
  std::size_t size() const override { return rows_.size(); }
  std::size_t dim() const override { return rows_.front().dim(); }
  GradientVector gradient(const GradientVector&, std::size_t i) const override {
    return rows_[i];
  }

 private:
  std::vector<GradientVector> rows_;
};

// Least-squares pull towards per-example targets: g_i = theta - x_i.
class QuadraticSource : public GradientSource {
 public:
  explicit QuadraticSource(std::vector<GradientVector> targets)
      : targets_(std::move(targets)) {}
  std::size_t size() const override { return targets_.size(); }
  std::size_t dim() const override { return targets_.front().dim(); }
  GradientVector gradient(const GradientVector& theta,
                          std::size_t i) const override {
    return vec_sub(theta, targets_[i]);
  }

 private:
  std::vector<GradientVector> targets_;
};

}  // namespace fodp::testing
