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
#include <initializer_list>
#include <span>
#include <vector>

namespace fodp {

/// Flat parameter-space vector. Holds per-example gradients, clipped sums,
/// queries, releases and model parameters alike.
class GradientVector {
 public:
  GradientVector() = default;
  explicit GradientVector(std::size_t dim) : values_(dim, 0.0) {}
  explicit GradientVector(std::vector<double> values)
      : values_(std::move(values)) {}
  GradientVector(std::initializer_list<double> values) : values_(values) {}

  static GradientVector zeros(std::size_t dim) { return GradientVector(dim); }

  std::size_t dim() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  std::span<double> span() { return values_; }
  std::span<const double> span() const { return values_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool all_finite() const;

  friend bool operator==(const GradientVector&,
                         const GradientVector&) = default;

 private:
  std::vector<double> values_;
};

/// Throws DimensionError unless a and b have the same dimension.
void require_same_dim(const GradientVector& a, const GradientVector& b,
                      const char* context);

/// a*x + y, elementwise.
GradientVector vec_axpy(double a, const GradientVector& x,
                        const GradientVector& y);

/// a*x, elementwise.
GradientVector vec_scale(double a, const GradientVector& x);

/// Euclidean norm.
double vec_norm2(const GradientVector& x);

GradientVector vec_add(const GradientVector& x, const GradientVector& y);
GradientVector vec_sub(const GradientVector& x, const GradientVector& y);

/// In-place y += a*x.
void vec_axpy_inplace(double a, const GradientVector& x, GradientVector& y);

/// True when the two vectors have identical bit patterns (distinguishes -0.0
/// from +0.0 and compares NaNs by payload).
bool bitwise_equal(const GradientVector& a, const GradientVector& b);

}  // namespace fodp
