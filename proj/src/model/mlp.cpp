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

#include "fodp/model/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fodp/core/errors.hpp"

namespace fodp {

namespace {

struct Offsets {
  std::size_t w1, b1, w2, b2, w3, b3, end;
};

Offsets offsets(const MlpShape& s) {
  Offsets o{};
  o.w1 = 0;
  o.b1 = o.w1 + s.in_dim * s.hidden1;
  o.w2 = o.b1 + s.hidden1;
  o.b2 = o.w2 + s.hidden1 * s.hidden2;
  o.w3 = o.b2 + s.hidden2;
  o.b3 = o.w3 + s.hidden2 * s.num_classes;
  o.end = o.b3 + s.num_classes;
  return o;
}

void check_theta(const MlpShape& shape, const GradientVector& theta) {
  if (theta.dim() != shape.param_count()) {
    throw DimensionError("mlp: parameter vector has " +
                         std::to_string(theta.dim()) + " entries, expected " +
                         std::to_string(shape.param_count()));
  }
}

// out[n] = b[n] + sum_m in[m] * w[m*fan_out + n]
void dense(const double* w, const double* b, std::span<const double> in,
           std::size_t fan_out, std::vector<double>& out) {
  out.assign(b, b + fan_out);
  for (std::size_t m = 0; m < in.size(); ++m) {
    const double x = in[m];
    if (x == 0.0) continue;
    const double* row = w + m * fan_out;
    for (std::size_t n = 0; n < fan_out; ++n) out[n] += x * row[n];
  }
}

}  // namespace

std::size_t MlpShape::param_count() const { return offsets(*this).end; }

void MlpShape::validate() const {
  if (in_dim == 0 || hidden1 == 0 || hidden2 == 0 || num_classes < 2) {
    throw ConfigError("MlpShape: layer sizes must be positive, classes >= 2");
  }
}

MlpLayers unflatten(const MlpShape& shape, const GradientVector& flat) {
  check_theta(shape, flat);
  const Offsets o = offsets(shape);
  const auto& v = flat.values();
  auto slice = [&](std::size_t a, std::size_t b) {
    return std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(a),
                               v.begin() + static_cast<std::ptrdiff_t>(b));
  };
  return MlpLayers{slice(o.w1, o.b1), slice(o.b1, o.w2), slice(o.w2, o.b2),
                   slice(o.b2, o.w3), slice(o.w3, o.b3), slice(o.b3, o.end)};
}

GradientVector flatten(const MlpShape& shape, const MlpLayers& layers) {
  const Offsets o = offsets(shape);
  if (layers.w1.size() != o.b1 - o.w1 || layers.b1.size() != o.w2 - o.b1 ||
      layers.w2.size() != o.b2 - o.w2 || layers.b2.size() != o.w3 - o.b2 ||
      layers.w3.size() != o.b3 - o.w3 || layers.b3.size() != o.end - o.b3) {
    throw DimensionError("flatten: layer sizes do not match shape");
  }
  std::vector<double> out;
  out.reserve(o.end);
  for (const auto* part : {&layers.w1, &layers.b1, &layers.w2, &layers.b2,
                           &layers.w3, &layers.b3}) {
    out.insert(out.end(), part->begin(), part->end());
  }
  return GradientVector(std::move(out));
}

GradientVector init_params(const MlpShape& shape, Rng& init) {
  shape.validate();
  const Offsets o = offsets(shape);
  GradientVector theta(o.end);
  auto fill = [&](std::size_t begin, std::size_t end, std::size_t fan_in) {
    const double a = std::sqrt(1.0 / static_cast<double>(fan_in));
    for (std::size_t i = begin; i < end; ++i) {
      theta[i] = -a + 2.0 * a * init.uniform();
    }
  };
  fill(o.w1, o.w2, shape.in_dim);
  fill(o.w2, o.w3, shape.hidden1);
  fill(o.w3, o.end, shape.hidden2);
  return theta;
}

ForwardPass forward(const MlpShape& shape, const GradientVector& theta,
                    std::span<const double> features) {
  check_theta(shape, theta);
  if (features.size() != shape.in_dim) {
    throw DimensionError("forward: feature dimension " +
                         std::to_string(features.size()) + " != in_dim " +
                         std::to_string(shape.in_dim));
  }
  const Offsets o = offsets(shape);
  const double* p = theta.values().data();
  ForwardPass f;
  dense(p + o.w1, p + o.b1, features, shape.hidden1, f.hidden1);
  for (double& v : f.hidden1) v = std::tanh(v);
  dense(p + o.w2, p + o.b2, f.hidden1, shape.hidden2, f.hidden2);
  for (double& v : f.hidden2) v = std::tanh(v);
  dense(p + o.w3, p + o.b3, f.hidden2, shape.num_classes, f.logits);
  return f;
}

double cross_entropy(std::span<const double> logits, std::size_t label) {
  const double peak = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double z : logits) total += std::exp(z - peak);
  return peak + std::log(total) - logits[label];
}

double example_loss(const MlpShape& shape, const GradientVector& theta,
                    const Example& example) {
  if (example.label >= shape.num_classes) {
    throw ConfigError("example_loss: label out of range");
  }
  return cross_entropy(forward(shape, theta, example.features).logits,
                       example.label);
}

GradientVector per_example_grad(const MlpShape& shape,
                                const GradientVector& theta,
                                const Example& example) {
  if (example.label >= shape.num_classes) {
    throw ConfigError("per_example_grad: label out of range");
  }
  const ForwardPass f = forward(shape, theta, example.features);
  const Offsets o = offsets(shape);
  const double* p = theta.values().data();
  GradientVector grad(o.end);
  double* g = grad.values().data();

  // d loss / d logits = softmax - onehot
  const std::size_t c = shape.num_classes;
  std::vector<double> d3(c);
  const double peak = *std::max_element(f.logits.begin(), f.logits.end());
  double total = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    d3[k] = std::exp(f.logits[k] - peak);
    total += d3[k];
  }
  for (std::size_t k = 0; k < c; ++k) d3[k] /= total;
  d3[example.label] -= 1.0;

  const std::size_t h2 = shape.hidden2;
  std::vector<double> d2(h2, 0.0);
  for (std::size_t m = 0; m < h2; ++m) {
    const double* w = p + o.w3 + m * c;
    double* gw = g + o.w3 + m * c;
    double acc = 0.0;
    for (std::size_t k = 0; k < c; ++k) {
      gw[k] = f.hidden2[m] * d3[k];
      acc += w[k] * d3[k];
    }
    d2[m] = acc * (1.0 - f.hidden2[m] * f.hidden2[m]);
  }
  for (std::size_t k = 0; k < c; ++k) g[o.b3 + k] = d3[k];

  const std::size_t h1 = shape.hidden1;
  std::vector<double> d1(h1, 0.0);
  for (std::size_t m = 0; m < h1; ++m) {
    const double* w = p + o.w2 + m * h2;
    double* gw = g + o.w2 + m * h2;
    double acc = 0.0;
    for (std::size_t k = 0; k < h2; ++k) {
      gw[k] = f.hidden1[m] * d2[k];
      acc += w[k] * d2[k];
    }
    d1[m] = acc * (1.0 - f.hidden1[m] * f.hidden1[m]);
  }
  for (std::size_t k = 0; k < h2; ++k) g[o.b2 + k] = d2[k];

  for (std::size_t i = 0; i < shape.in_dim; ++i) {
    const double x = example.features[i];
    double* gw = g + o.w1 + i * h1;
    for (std::size_t k = 0; k < h1; ++k) gw[k] = x * d1[k];
  }
  for (std::size_t k = 0; k < h1; ++k) g[o.b1 + k] = d1[k];
  return grad;
}

std::size_t predict(std::span<const double> logits) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < logits.size(); ++k) {
    if (logits[k] > logits[best]) best = k;
  }
  return best;
}

MlpGradientSource::MlpGradientSource(MlpShape shape, const Dataset& data)
    : shape_(shape), data_(&data) {
  shape_.validate();
  if (data.dim != shape_.in_dim) {
    throw DimensionError("MlpGradientSource: dataset dim != model in_dim");
  }
}

GradientVector MlpGradientSource::gradient(const GradientVector& theta,
                                           std::size_t index) const {
  return per_example_grad(shape_, theta, data_->examples.at(index));
}

}  // namespace fodp
