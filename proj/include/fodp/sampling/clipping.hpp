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

namespace fodp {

/// g / max(1, ||g||_2 / C). Throws NumericError on non-finite input and
/// ConfigError unless C > 0.
GradientVector clip(const GradientVector& g, double clip_c);

/// Sum of clip(g_i, C) over the given gradients, accumulated in the order
/// given (callers pass S_t in ascending index order). An empty span needs
/// the dimension explicitly and yields the zero vector.
GradientVector clipped_sum(std::span<const GradientVector> grads,
                           double clip_c, std::size_t dim);

}  // namespace fodp
