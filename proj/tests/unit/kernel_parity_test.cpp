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

#include <omp.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "fodp/core/errors.hpp"
#include "fodp/data/dataset_spec.hpp"
#include "fodp/model/kernels.hpp"
#include "fodp/model/mlp.hpp"
#include "fodp/sampling/kernels.hpp"
#include "test_support.hpp"

namespace fodp {
namespace {

class ParityTest : public ::testing::Test {
 protected:
  void SetUp() override {
    // Several threads even on a single-core host, so interleavings vary.
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
    SyntheticSpec spec;
    spec.per_class_count = 60;
    spec.train_count = 400;
    spec.test_count = 200;
    spec.dim = 16;
    Rng rng(21);
    data_ = generate_synthetic(spec, rng);
    shape_ = MlpShape{16, 12, 8, 10};
    Rng init(22);
    theta_ = init_params(shape_, init);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

  int saved_ = 1;
  DataSplit data_;
  MlpShape shape_;
  GradientVector theta_;
};

TEST_F(ParityTest, ClippedSumBitIdentical) {
  const MlpGradientSource src(shape_, data_.train);
  std::vector<std::size_t> idx(data_.train.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (double c : {0.01, 1.0, 100.0}) {
    for (int rep = 0; rep < 5; ++rep) {
      EXPECT_TRUE(bitwise_equal(clipped_sum_serial(src, theta_, idx, c),
                                clipped_sum_parallel(src, theta_, idx, c)));
    }
  }
  const std::vector<std::size_t> none;
  EXPECT_EQ(clipped_sum_parallel(src, theta_, none, 1.0),
            GradientVector::zeros(shape_.param_count()));
}

TEST_F(ParityTest, EvaluateBitIdentical) {
  for (int rep = 0; rep < 5; ++rep) {
    const EvalResult a = evaluate_serial(shape_, theta_, data_.test);
    const EvalResult b = evaluate_parallel(shape_, theta_, data_.test);
    EXPECT_EQ(a.accuracy, b.accuracy);
    EXPECT_EQ(a.mean_loss, b.mean_loss);
  }
}

TEST_F(ParityTest, ParallelPropagatesErrors) {
  std::vector<GradientVector> rows(50, GradientVector{1.0, 2.0});
  rows[17] = GradientVector{std::nan(""), 0.0};
  const testing::TableSource src(rows);
  std::vector<std::size_t> idx(50);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const GradientVector theta(2);
  EXPECT_THROW(clipped_sum_serial(src, theta, idx, 1.0), NumericError);
  EXPECT_THROW(clipped_sum_parallel(src, theta, idx, 1.0), NumericError);
}

}  // namespace
}  // namespace fodp
