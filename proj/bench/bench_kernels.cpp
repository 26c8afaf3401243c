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

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "fodp/data/dataset_spec.hpp"
#include "fodp/model/kernels.hpp"
#include "fodp/model/mlp.hpp"
#include "fodp/sampling/kernels.hpp"

namespace {

struct Fixture {
  fodp::DataSplit data;
  fodp::MlpShape shape;
  fodp::GradientVector theta;

  Fixture() {
    fodp::Rng rng(7);
    fodp::Rng data_rng = rng.substream(fodp::Stream::kData);
    data = fodp::build_dataset(fodp::SyntheticSpec{}, data_rng);
    shape = fodp::MlpShape{data.train.dim, 64, 32, data.train.num_classes};
    fodp::Rng init_rng = rng.substream(fodp::Stream::kInit);
    theta = fodp::init_params(shape, init_rng);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

template <bool kParallel>
void BM_ClippedSum(benchmark::State& state) {
  const Fixture& f = fixture();
  const fodp::MlpGradientSource source(f.shape, f.data.train);
  std::vector<std::size_t> idx(static_cast<std::size_t>(state.range(0)));
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (auto _ : state) {
    auto s = kParallel ? fodp::clipped_sum_parallel(source, f.theta, idx, 1.0)
                       : fodp::clipped_sum_serial(source, f.theta, idx, 1.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool kParallel>
void BM_Evaluate(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    auto r = kParallel ? fodp::evaluate_parallel(f.shape, f.theta, f.data.test)
                       : fodp::evaluate_serial(f.shape, f.theta, f.data.test);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(f.data.test.examples.size()));
}

}  // namespace

BENCHMARK(BM_ClippedSum<false>)->Name("clipped_sum/serial")->Arg(200)->Arg(2000);
BENCHMARK(BM_ClippedSum<true>)->Name("clipped_sum/parallel")->Arg(200)->Arg(2000);
BENCHMARK(BM_Evaluate<false>)->Name("evaluate/serial");
BENCHMARK(BM_Evaluate<true>)->Name("evaluate/parallel");

BENCHMARK_MAIN();
