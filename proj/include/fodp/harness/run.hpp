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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fodp/harness/csv.hpp"
#include "fodp/harness/run_config.hpp"

namespace fodp {

inline constexpr const char* kLogHeader =
    "algorithm,seed,epoch,test_accuracy,mean_loss,epsilon,elapsed_seconds";
inline constexpr const char* kFinalHeader =
    "algorithm,seed,final_accuracy,best_accuracy,final_loss,final_epsilon,"
    "runtime_seconds";

struct EpochRow {
  std::size_t epoch = 0;
  double test_accuracy = 0.0;
  double mean_loss = 0.0;
  double epsilon = 0.0;
  double elapsed_seconds = 0.0;
};

struct FinalRow {
  double final_accuracy = 0.0;
  double best_accuracy = 0.0;
  double final_loss = 0.0;
  double final_epsilon = 0.0;
  double runtime_seconds = 0.0;
};

/// One (algorithm, seed) run.
struct RunLog {
  std::string algorithm;  // series name
  std::uint64_t seed = 0;
  std::vector<EpochRow> epochs;
  FinalRow final;

  CsvTable epoch_table() const;
  CsvTable final_table() const;
};

/// Trains one seed: builds the data from the seed's data stream,
/// initialises parameters from its init stream, runs epochs x
/// steps_per_epoch(q) mechanism steps, evaluates on the test split at epoch
/// 0, every eval_every epochs and at the last epoch, and accounts privacy
/// after every step. Zero steps report epsilon 0.
RunLog run_seed(const RunConfig& cfg, std::uint64_t seed);

/// File names inside out_dir.
std::filesystem::path log_path(const std::filesystem::path& dir,
                               const std::string& series, std::uint64_t seed);
std::filesystem::path final_path(const std::filesystem::path& dir,
                                 const std::string& series,
                                 std::uint64_t seed);

void write_run_log(const std::filesystem::path& dir, const RunLog& log);

/// Runs every seed of cfg (jobs > 1 runs seeds concurrently) and writes one
/// log pair per seed into cfg.out_dir. Returned logs follow cfg.seeds order.
std::vector<RunLog> run(const RunConfig& cfg, unsigned jobs = 1);

enum class SweepAxis { kBeta, kAlpha, kK, kVariant, kAlgorithm };

SweepAxis parse_sweep_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

/// Copy of base with one field replaced and a descriptive label.
RunConfig apply_sweep_value(const RunConfig& base, SweepAxis axis,
                            std::string_view value);

struct SweepResult {
  std::vector<RunLog> logs;
  CsvTable table;  // axis,value,algorithm,seed,epoch,test_accuracy,epsilon
};

/// One run set per value, everything else fixed. Writes run logs into
/// base.out_dir and the long-format table to sweep_<axis>.csv there.
SweepResult sweep(const RunConfig& base, SweepAxis axis,
                  const std::vector<std::string>& values, unsigned jobs = 1);

}  // namespace fodp
