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

#include "fodp/sampling/kernels.hpp"

#include <vector>

#include "fodp/core/errors.hpp"
#include "fodp/sampling/clipping.hpp"

namespace fodp {

namespace {

GradientVector reduce_in_order(std::span<const GradientVector> clipped,
                               std::size_t dim) {
  GradientVector sum(dim);
  for (const auto& c : clipped) {
    for (std::size_t k = 0; k < dim; ++k) sum[k] += c[k];
  }
  return sum;
}

void check_theta(const GradientSource& source, const GradientVector& theta) {
  if (theta.dim() != source.dim()) {
    throw DimensionError("clipped_sum: theta does not match model dimension");
  }
}

}  // namespace

GradientVector clipped_sum_serial(const GradientSource& source,
                                  const GradientVector& theta,
                                  std::span<const std::size_t> indices,
                                  double clip_c) {
  check_theta(source, theta);
  std::vector<GradientVector> clipped;
  clipped.reserve(indices.size());
  for (std::size_t i : indices) {
    clipped.push_back(clip(source.gradient(theta, i), clip_c));
  }
  return reduce_in_order(clipped, source.dim());
}

GradientVector clipped_sum_parallel(const GradientSource& source,
                                    const GradientVector& theta,
                                    std::span<const std::size_t> indices,
                                    double clip_c) {
  check_theta(source, theta);
  const auto n = static_cast<std::ptrdiff_t>(indices.size());
  std::vector<GradientVector> clipped(indices.size());
  // Exceptions must not escape an OpenMP region; capture the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      clipped[k] = clip(source.gradient(theta, indices[k]), clip_c);
    } catch (...) {
#pragma omp critical(fodp_clipped_sum_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce_in_order(clipped, source.dim());
}

}  // namespace fodp
