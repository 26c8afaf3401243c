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

#include "fodp/model/kernels.hpp"

#include <exception>
#include <vector>

#include "fodp/core/errors.hpp"

namespace fodp {

namespace {

struct Outcome {
  double loss = 0.0;
  bool correct = false;
};

Outcome score(const MlpShape& shape, const GradientVector& theta,
              const Example& ex) {
  const ForwardPass f = forward(shape, theta, ex.features);
  return Outcome{cross_entropy(f.logits, ex.label),
                 predict(f.logits) == ex.label};
}

EvalResult reduce(const std::vector<Outcome>& outcomes) {
  double loss = 0.0;
  std::size_t hits = 0;
  for (const Outcome& o : outcomes) {
    loss += o.loss;
    hits += o.correct ? 1 : 0;
  }
  const auto n = static_cast<double>(outcomes.size());
  return EvalResult{static_cast<double>(hits) / n, loss / n};
}

void check(const MlpShape& shape, const Dataset& data) {
  if (data.empty()) throw ConfigError("evaluate: empty dataset");
  for (const Example& ex : data.examples) {
    if (ex.label >= shape.num_classes) {
      throw ConfigError("evaluate: label out of range");
    }
  }
}

}  // namespace

EvalResult evaluate_serial(const MlpShape& shape, const GradientVector& theta,
                           const Dataset& data) {
  check(shape, data);
  std::vector<Outcome> outcomes;
  outcomes.reserve(data.size());
  for (const Example& ex : data.examples) {
    outcomes.push_back(score(shape, theta, ex));
  }
  return reduce(outcomes);
}

EvalResult evaluate_parallel(const MlpShape& shape,
                             const GradientVector& theta,
                             const Dataset& data) {
  check(shape, data);
  const auto n = static_cast<std::ptrdiff_t>(data.size());
  std::vector<Outcome> outcomes(data.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      outcomes[i] = score(shape, theta, data.examples[i]);
    } catch (...) {
#pragma omp critical(fodp_evaluate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce(outcomes);
}

}  // namespace fodp
