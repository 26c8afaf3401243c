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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "fodp/data/dataset_spec.hpp"

namespace fodp {

inline constexpr std::size_t kCifarPixels = 3072;  // 3 x 32 x 32, planar RGB
inline constexpr std::size_t kCifarRecordBytes = 1 + kCifarPixels;

struct Cifar10Record {
  std::uint8_t label = 0;
  std::array<std::uint8_t, kCifarPixels> pixels{};
};

/// Reads up to max_records records from one binary batch file. Throws
/// FormatError on a missing file, a truncated record or a label byte > 9.
std::vector<Cifar10Record> read_cifar10_file(const std::filesystem::path& file,
                                             std::size_t max_records);

/// Per-channel mean and standard deviation of [0,1]-scaled pixels.
struct ChannelStats {
  std::array<double, 3> mean{};
  std::array<double, 3> std{};
};

ChannelStats channel_stats(const std::vector<Cifar10Record>& records);

/// Scales pixels to [0,1], standardises each channel with `stats` and
/// flattens to 3072 features in the file's planar order.
Dataset to_dataset(const std::vector<Cifar10Record>& records,
                   const ChannelStats& stats);

/// Training records come from data_batch_1.bin .. data_batch_5.bin in order
/// (stopping at the first absent batch after the first), test records from
/// test_batch.bin. Both splits are standardised with training statistics.
DataSplit load_cifar10_binary(const std::filesystem::path& dir,
                              std::size_t train_count,
                              std::size_t test_count);

}  // namespace fodp
