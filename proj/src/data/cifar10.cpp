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

#include "fodp/data/cifar10.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "fodp/core/errors.hpp"

namespace fodp {

std::vector<Cifar10Record> read_cifar10_file(const std::filesystem::path& file,
                                             std::size_t max_records) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FormatError("cifar10: cannot open " + file.string());
  std::vector<Cifar10Record> records;
  std::array<char, kCifarRecordBytes> buf{};
  while (records.size() < max_records) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got == 0) break;
    if (got < kCifarRecordBytes) {
      throw FormatError("cifar10: truncated record " +
                        std::to_string(records.size()) + " in " +
                        file.string());
    }
    Cifar10Record r;
    r.label = static_cast<std::uint8_t>(buf[0]);
    if (r.label > 9) {
      throw FormatError("cifar10: label byte " + std::to_string(r.label) +
                        " in record " + std::to_string(records.size()) +
                        " of " + file.string());
    }
    for (std::size_t i = 0; i < kCifarPixels; ++i) {
      r.pixels[i] = static_cast<std::uint8_t>(buf[1 + i]);
    }
    records.push_back(r);
  }
  return records;
}

ChannelStats channel_stats(const std::vector<Cifar10Record>& records) {
  ChannelStats s;
  constexpr std::size_t plane = kCifarPixels / 3;
  for (std::size_t ch = 0; ch < 3; ++ch) {
    double sum = 0.0;
    double sq = 0.0;
    for (const auto& r : records) {
      for (std::size_t i = 0; i < plane; ++i) {
        const double v = r.pixels[ch * plane + i] / 255.0;
        sum += v;
        sq += v * v;
      }
    }
    const double n = static_cast<double>(records.size() * plane);
    const double mean = n > 0 ? sum / n : 0.0;
    const double var = n > 0 ? std::max(0.0, sq / n - mean * mean) : 0.0;
    s.mean[ch] = mean;
    s.std[ch] = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return s;
}

Dataset to_dataset(const std::vector<Cifar10Record>& records,
                   const ChannelStats& stats) {
  constexpr std::size_t plane = kCifarPixels / 3;
  Dataset d;
  d.num_classes = 10;
  d.dim = kCifarPixels;
  d.examples.reserve(records.size());
  for (const auto& r : records) {
    Example ex;
    ex.label = r.label;
    ex.features.resize(kCifarPixels);
    for (std::size_t i = 0; i < kCifarPixels; ++i) {
      const std::size_t ch = i / plane;
      ex.features[i] = (r.pixels[i] / 255.0 - stats.mean[ch]) / stats.std[ch];
    }
    d.examples.push_back(std::move(ex));
  }
  return d;
}

DataSplit load_cifar10_binary(const std::filesystem::path& dir,
                              std::size_t train_count,
                              std::size_t test_count) {
  std::vector<Cifar10Record> train;
  for (int batch = 1; batch <= 5 && train.size() < train_count; ++batch) {
    const auto file = dir / ("data_batch_" + std::to_string(batch) + ".bin");
    if (batch > 1 && !std::filesystem::exists(file)) break;
    auto part = read_cifar10_file(file, train_count - train.size());
    train.insert(train.end(), part.begin(), part.end());
  }
  const auto test = read_cifar10_file(dir / "test_batch.bin", test_count);
  if (train.empty() || test.empty()) {
    throw FormatError("cifar10: no records found under " + dir.string());
  }
  const ChannelStats stats = channel_stats(train);
  return DataSplit{to_dataset(train, stats), to_dataset(test, stats)};
}

}  // namespace fodp
