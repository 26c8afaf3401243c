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

#include <cmath>
#include <string>
#include <utility>

#include "fodp/core/errors.hpp"
#include "fodp/data/cifar10.hpp"
#include "fodp/data/dataset_spec.hpp"

namespace fodp {

void SyntheticSpec::validate() const {
  if (num_classes < 2) throw ConfigError("synthetic: num_classes must be >= 2");
  if (dim == 0) throw ConfigError("synthetic: dim must be > 0");
  if (per_class_count == 0) {
    throw ConfigError("synthetic: per_class_count must be > 0");
  }
  if (train_count == 0 || test_count == 0) {
    throw ConfigError("synthetic: train_count and test_count must be > 0");
  }
  if (train_count + test_count > num_classes * per_class_count) {
    throw ConfigError(
        "synthetic: train_count + test_count exceeds generated points");
  }
  if (!(cluster_std >= 0.0) || !std::isfinite(cluster_std)) {
    throw ConfigError("synthetic: cluster_std must be >= 0");
  }
  if (!(center_scale > 0.0) || !std::isfinite(center_scale)) {
    throw ConfigError("synthetic: center_scale must be > 0");
  }
  if (dim < num_classes && dim < 64 && (1ULL << dim) < num_classes) {
    throw ConfigError("synthetic: dim too small to separate the classes");
  }
}

void Cifar10Spec::validate() const {
  if (path.empty()) throw ConfigError("cifar10: path is empty");
  if (train_count == 0 || test_count == 0) {
    throw ConfigError("cifar10: train_count and test_count must be > 0");
  }
}

namespace {

std::vector<double> class_center(const SyntheticSpec& spec, std::size_t k) {
  std::vector<double> c(spec.dim, 0.0);
  if (spec.dim >= spec.num_classes) {
    c[k] = spec.center_scale;
  } else {
    for (std::size_t i = 0; i < spec.dim; ++i) {
      c[i] = ((k >> i) & 1U) ? spec.center_scale : -spec.center_scale;
    }
  }
  return c;
}

}  // namespace

DataSplit generate_synthetic(const SyntheticSpec& spec, Rng& data) {
  spec.validate();
  std::vector<Example> points;
  points.reserve(spec.num_classes * spec.per_class_count);
  for (std::size_t k = 0; k < spec.num_classes; ++k) {
    const std::vector<double> center = class_center(spec, k);
    for (std::size_t n = 0; n < spec.per_class_count; ++n) {
      Example ex{center, k};
      if (spec.cluster_std > 0.0) {
        for (double& v : ex.features) v += spec.cluster_std * data.gaussian();
      }
      points.push_back(std::move(ex));
    }
  }
  for (std::size_t i = points.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(data.uniform_index(i));
    std::swap(points[i - 1], points[j]);
  }

  DataSplit split;
  split.train.num_classes = split.test.num_classes = spec.num_classes;
  split.train.dim = split.test.dim = spec.dim;
  auto first = std::make_move_iterator(points.begin());
  auto mid = first + static_cast<std::ptrdiff_t>(spec.train_count);
  auto last = mid + static_cast<std::ptrdiff_t>(spec.test_count);
  split.train.examples.assign(first, mid);
  split.test.examples.assign(mid, last);
  return split;
}

DataSplit build_dataset(const DatasetSpec& spec, Rng& data) {
  if (const auto* s = std::get_if<SyntheticSpec>(&spec)) {
    return generate_synthetic(*s, data);
  }
  const auto& c = std::get<Cifar10Spec>(spec);
  c.validate();
  return load_cifar10_binary(c.path, c.train_count, c.test_count);
}

}  // namespace fodp
