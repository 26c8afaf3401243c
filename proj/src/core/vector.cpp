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

#include "fodp/core/vector.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "fodp/core/errors.hpp"

namespace fodp {

bool GradientVector::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void require_same_dim(const GradientVector& a, const GradientVector& b,
                      const char* context) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(context) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

GradientVector vec_axpy(double a, const GradientVector& x,
                        const GradientVector& y) {
  require_same_dim(x, y, "vec_axpy");
  GradientVector out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = a * x[i] + y[i];
  return out;
}

void vec_axpy_inplace(double a, const GradientVector& x, GradientVector& y) {
  require_same_dim(x, y, "vec_axpy_inplace");
  for (std::size_t i = 0; i < x.dim(); ++i) y[i] += a * x[i];
}

GradientVector vec_scale(double a, const GradientVector& x) {
  GradientVector out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = a * x[i];
  return out;
}

double vec_norm2(const GradientVector& x) {
  double ssq = 0.0;
  for (double v : x) ssq += v * v;
  return std::sqrt(ssq);
}

GradientVector vec_add(const GradientVector& x, const GradientVector& y) {
  require_same_dim(x, y, "vec_add");
  GradientVector out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + y[i];
  return out;
}

GradientVector vec_sub(const GradientVector& x, const GradientVector& y) {
  require_same_dim(x, y, "vec_sub");
  GradientVector out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] - y[i];
  return out;
}

bool bitwise_equal(const GradientVector& a, const GradientVector& b) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  return std::memcmp(a.values().data(), b.values().data(),
                     a.dim() * sizeof(double)) == 0;
}

}  // namespace fodp
