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
#include <vector>

namespace fodp {

/// One labelled input (normalised, flattened features).
struct Example {
  std::vector<double> features;
  std::size_t label = 0;
};

struct Dataset {
  std::vector<Example> examples;
  std::size_t num_classes = 0;
  std::size_t dim = 0;

  std::size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }
};

}  // namespace fodp
