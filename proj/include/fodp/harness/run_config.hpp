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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fodp/core/config.hpp"
#include "fodp/data/dataset_spec.hpp"
#include "fodp/mechanism/mechanism.hpp"

namespace fodp {

struct TrainSettings {
  double eta = 0.8;
  std::optional<double> eta_post;  // Post-FM learning rate; defaults to eta
  std::size_t epochs = 10;
  std::size_t eval_every = 1;
};

/// Everything one `fodp train` invocation needs.
struct RunConfig {
  Algorithm algorithm = Algorithm::kFoDpSgd;
  std::string label;  // series name in logs; empty means the algorithm name
  MechanismConfig mechanism;
  PrivacyConfig privacy;
  TrainSettings train;
  DatasetSpec dataset = SyntheticSpec{};
  std::size_t hidden1 = 64;
  std::size_t hidden2 = 32;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::string out_dir = "runs";

  /// Throws ConfigError on the first invalid field.
  void validate() const;

  std::string series_name() const;
  double eta_post() const { return train.eta_post.value_or(train.eta); }
};

/// Steps in one epoch: ceil(1/q), the expected number of steps for one pass.
std::size_t steps_per_epoch(double q);

/// Parses the flat `key = value` format. Blank lines and `#` comments are
/// ignored; unknown or repeated keys are errors. Keys:
///   algorithm label seeds out_dir
///   beta alpha memory_window temper_lambda tau gamma kappa zeta eps_stab
///   memory_variant exp_decay
///   clip_c sigma q delta
///   eta eta_post epochs eval_every
///   hidden1 hidden2
///   dataset (synthetic | cifar10_binary) num_classes dim per_class_count
///   cluster_std center_scale train_count test_count path
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& file);

/// Inverse of parse_run_config; every key is written.
std::string format_run_config(const RunConfig& cfg);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

}  // namespace fodp
