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

#include "fodp/sampling/clipping.hpp"

#include <algorithm>
#include <cmath>

#include "fodp/core/errors.hpp"

namespace fodp {

GradientVector clip(const GradientVector& g, double clip_c) {
  if (!(clip_c > 0.0) || !std::isfinite(clip_c)) {
    throw ConfigError("clip: clipping norm must be finite and > 0");
  }
  if (!g.all_finite()) throw NumericError("clip: non-finite gradient");
  const double factor = std::max(1.0, vec_norm2(g) / clip_c);
  GradientVector out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) out[i] = g[i] / factor;
  return out;
}

GradientVector clipped_sum(std::span<const GradientVector> grads,
                           double clip_c, std::size_t dim) {
  GradientVector sum(dim);
  for (const auto& g : grads) {
    if (g.dim() != dim) throw DimensionError("clipped_sum: dimension mismatch");
    const GradientVector c = clip(g, clip_c);
    for (std::size_t k = 0; k < dim; ++k) sum[k] += c[k];
  }
  return sum;
}

}  // namespace fodp
