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

#include "fodp/core/vector.hpp"
#include "fodp/model/example.hpp"
#include "fodp/model/mlp.hpp"

namespace fodp {

struct EvalResult {
  double accuracy = 0.0;
  double mean_loss = 0.0;
};

/// Accuracy and mean cross-entropy over a non-empty dataset.
/// Per-example results are reduced in index order, so both variants agree
/// bit for bit.
EvalResult evaluate_serial(const MlpShape& shape, const GradientVector& theta,
                           const Dataset& data);
EvalResult evaluate_parallel(const MlpShape& shape,
                             const GradientVector& theta, const Dataset& data);

inline EvalResult evaluate(const MlpShape& shape, const GradientVector& theta,
                           const Dataset& data) {
  return evaluate_parallel(shape, theta, data);
}

}  // namespace fodp
