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
#include <span>

#include "fodp/core/vector.hpp"
#include "fodp/sampling/gradient_source.hpp"

namespace fodp {

/// Clipped subsampled sum s_t evaluated at theta over the given indices.
///
/// Both variants return bit-identical results: per-example gradients are
/// computed and clipped independently, then reduced in the order of
/// `indices`. The parallel variant only fans out the per-example part.
GradientVector clipped_sum_serial(const GradientSource& source,
                                  const GradientVector& theta,
                                  std::span<const std::size_t> indices,
                                  double clip_c);

GradientVector clipped_sum_parallel(const GradientSource& source,
                                    const GradientVector& theta,
                                    std::span<const std::size_t> indices,
                                    double clip_c);

}  // namespace fodp
