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
#include <vector>

#include "fodp/core/rng.hpp"
#include "fodp/core/vector.hpp"
#include "fodp/model/example.hpp"
#include "fodp/sampling/gradient_source.hpp"

namespace fodp {

/// flatten -> dense(hidden1, tanh) -> dense(hidden2, tanh) -> dense(classes).
struct MlpShape {
  std::size_t in_dim = 0;
  std::size_t hidden1 = 64;
  std::size_t hidden2 = 32;
  std::size_t num_classes = 10;

  /// Total parameter count d.
  std::size_t param_count() const;
  void validate() const;
};

/// Unflattened parameters. Weight matrices are row-major (fan_in x fan_out).
/// The flat layout is W1, b1, W2, b2, W3, b3 concatenated.
struct MlpLayers {
  std::vector<double> w1, b1, w2, b2, w3, b3;
};

MlpLayers unflatten(const MlpShape& shape, const GradientVector& flat);
GradientVector flatten(const MlpShape& shape, const MlpLayers& layers);

/// Uniform(-a, a) with a = sqrt(1/fan_in) for every weight and bias of a
/// layer, drawn in flat-layout order.
GradientVector init_params(const MlpShape& shape, Rng& init);

struct ForwardPass {
  std::vector<double> hidden1;  // tanh outputs
  std::vector<double> hidden2;
  std::vector<double> logits;
};

ForwardPass forward(const MlpShape& shape, const GradientVector& theta,
                    std::span<const double> features);

/// Softmax cross-entropy of the logits against label.
double cross_entropy(std::span<const double> logits, std::size_t label);

double example_loss(const MlpShape& shape, const GradientVector& theta,
                    const Example& example);

/// Gradient of the per-example cross-entropy w.r.t. the flat parameters.
GradientVector per_example_grad(const MlpShape& shape,
                                const GradientVector& theta,
                                const Example& example);

/// Index of the largest logit; ties go to the lowest index.
std::size_t predict(std::span<const double> logits);

/// Binds a shape and a dataset into a GradientSource for the mechanism.
class MlpGradientSource : public GradientSource {
 public:
  MlpGradientSource(MlpShape shape, const Dataset& data);

  std::size_t size() const override { return data_->size(); }
  std::size_t dim() const override { return shape_.param_count(); }
  GradientVector gradient(const GradientVector& theta,
                          std::size_t index) const override;

  const MlpShape& shape() const { return shape_; }

 private:
  MlpShape shape_;
  const Dataset* data_;
};

}  // namespace fodp
