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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <vector>

#include "fodp/core/errors.hpp"
#include "fodp/core/rng.hpp"
#include "fodp/data/cifar10.hpp"
#include "fodp/data/dataset_spec.hpp"
#include "fodp/model/kernels.hpp"
#include "fodp/model/mlp.hpp"

namespace fodp {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("fodp_data_" + std::to_string(::testing::UnitTest::GetInstance()
                                               ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// Record r has label labels[r] and pixel i equal to (r * 7 + i) mod 256.
void write_batch(const fs::path& file, const std::vector<std::uint8_t>& labels,
                 std::size_t truncate_last_by = 0) {
  std::ofstream out(file, std::ios::binary);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    out.put(static_cast<char>(labels[r]));
    std::size_t n = kCifarPixels;
    if (r + 1 == labels.size()) n -= truncate_last_by;
    for (std::size_t i = 0; i < n; ++i) {
      out.put(static_cast<char>((r * 7 + i) % 256));
    }
  }
}

TEST(Synthetic, DeterministicForASeed) {
  SyntheticSpec spec;
  spec.per_class_count = 100;
  spec.train_count = 600;
  spec.test_count = 300;
  Rng a(12), b(12);
  const DataSplit x = generate_synthetic(spec, a);
  const DataSplit y = generate_synthetic(spec, b);
  ASSERT_EQ(x.train.size(), 600u);
  ASSERT_EQ(x.test.size(), 300u);
  for (std::size_t i = 0; i < x.train.size(); ++i) {
    ASSERT_EQ(x.train.examples[i].features, y.train.examples[i].features);
    ASSERT_EQ(x.train.examples[i].label, y.train.examples[i].label);
  }
}

TEST(Synthetic, ZeroSpreadCollapsesEachClass) {
  SyntheticSpec spec;
  spec.num_classes = 5;
  spec.dim = 3;  // hypercube centres
  spec.cluster_std = 0.0;
  spec.per_class_count = 20;
  spec.train_count = 60;
  spec.test_count = 40;
  Rng rng(3);
  const DataSplit d = generate_synthetic(spec, rng);
  std::vector<std::vector<double>> centroid(5);
  for (const auto& e : d.train.examples) {
    if (centroid[e.label].empty()) centroid[e.label] = e.features;
    EXPECT_EQ(e.features, centroid[e.label]);
  }
  // 1-nearest-centroid on the test split.
  std::size_t correct = 0;
  for (const auto& e : d.test.examples) {
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t k = 0; k < 5; ++k) {
      if (centroid[k].empty()) continue;
      double dist = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        dist += std::pow(e.features[i] - centroid[k][i], 2);
      }
      if (dist < best_d) {
        best_d = dist;
        best = k;
      }
    }
    correct += best == e.label;
  }
  EXPECT_EQ(correct, d.test.size());
}

TEST(Synthetic, SimplexCentresAndBalancedLabels) {
  SyntheticSpec spec;
  spec.cluster_std = 0.0;
  spec.center_scale = 2.5;
  spec.per_class_count = 10;
  spec.train_count = 60;
  spec.test_count = 40;
  Rng rng(4);
  const DataSplit d = generate_synthetic(spec, rng);
  std::vector<int> counts(10, 0);
  for (const auto* part : {&d.train, &d.test}) {
    for (const auto& e : part->examples) {
      ++counts[e.label];
      for (std::size_t i = 0; i < 64; ++i) {
        EXPECT_EQ(e.features[i], i == e.label ? 2.5 : 0.0);
      }
    }
  }
  for (int c : counts) EXPECT_EQ(c, 10);
}

TEST(Synthetic, ProbeLearnsWellAboveChance) {
  SyntheticSpec spec;
  spec.per_class_count = 500;
  spec.train_count = 3000;
  spec.test_count = 2000;
  spec.center_scale = 3.0;
  Rng rng(5);
  const DataSplit d = generate_synthetic(spec, rng);
  const MlpShape s{64, 16, 16, 10};
  Rng init(6);
  GradientVector theta = init_params(s, init);
  for (int epoch = 0; epoch < 3; ++epoch) {
    for (const auto& e : d.train.examples) {
      vec_axpy_inplace(-0.05, per_example_grad(s, theta, e), theta);
    }
  }
  EXPECT_GT(evaluate(s, theta, d.test).accuracy, 0.5);
}

TEST(Synthetic, InvalidSpecsRejected) {
  SyntheticSpec spec;
  spec.train_count = 7000;
  spec.test_count = 1;
  EXPECT_THROW(spec.validate(), ConfigError);
  spec = {};
  spec.num_classes = 10;
  spec.dim = 3;  // 8 hypercube vertices < 10 classes
  EXPECT_THROW(spec.validate(), ConfigError);
  spec = {};
  spec.cluster_std = -1.0;
  EXPECT_THROW(spec.validate(), ConfigError);
}

TEST(Cifar10, DecodesFixture) {
  TempDir dir;
  const fs::path f = dir.path() / "batch.bin";
  write_batch(f, {6, 9});
  const auto records = read_cifar10_file(f, 10);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].label, 6);
  EXPECT_EQ(records[0].pixels[0], 0);
  EXPECT_EQ(records[0].pixels[300], 300 % 256);
  EXPECT_EQ(records[1].label, 9);
  EXPECT_EQ(records[1].pixels[0], 7);
}

TEST(Cifar10, ReturnsAtMostRequested) {
  TempDir dir;
  const fs::path f = dir.path() / "batch.bin";
  write_batch(f, {0, 1, 2, 3, 4});
  EXPECT_EQ(read_cifar10_file(f, 3).size(), 3u);
  EXPECT_EQ(read_cifar10_file(f, 99).size(), 5u);
}

TEST(Cifar10, RejectsBadInput) {
  TempDir dir;
  const fs::path bad_label = dir.path() / "label.bin";
  write_batch(bad_label, {1, 255});
  EXPECT_THROW(read_cifar10_file(bad_label, 10), FormatError);
  const fs::path truncated = dir.path() / "short.bin";
  write_batch(truncated, {1, 2}, 10);
  EXPECT_THROW(read_cifar10_file(truncated, 10), FormatError);
  EXPECT_THROW(read_cifar10_file(dir.path() / "missing.bin", 1), FormatError);
}

TEST(Cifar10, LoadsAndStandardisesWithTrainStatistics) {
  TempDir dir;
  write_batch(dir.path() / "data_batch_1.bin", {0, 1, 2});
  write_batch(dir.path() / "data_batch_2.bin", {3, 4});
  write_batch(dir.path() / "test_batch.bin", {5, 6, 7});
  const DataSplit d = load_cifar10_binary(dir.path(), 4, 2);
  ASSERT_EQ(d.train.size(), 4u);
  ASSERT_EQ(d.test.size(), 2u);
  EXPECT_EQ(d.train.examples[3].label, 3u);
  EXPECT_EQ(d.train.dim, kCifarPixels);
  for (std::size_t ch = 0; ch < 3; ++ch) {
    double sum = 0.0, sq = 0.0;
    std::size_t n = 0;
    for (const auto& e : d.train.examples) {
      for (std::size_t i = ch * 1024; i < (ch + 1) * 1024; ++i) {
        sum += e.features[i];
        sq += e.features[i] * e.features[i];
        ++n;
      }
    }
    EXPECT_NEAR(sum / n, 0.0, 1e-9);
    EXPECT_NEAR(sq / n, 1.0, 1e-9);
  }
}

TEST(Cifar10, MissingTestBatchIsAnError) {
  TempDir dir;
  write_batch(dir.path() / "data_batch_1.bin", {0, 1});
  EXPECT_THROW(load_cifar10_binary(dir.path(), 2, 2), FormatError);
}

}  // namespace
}  // namespace fodp
