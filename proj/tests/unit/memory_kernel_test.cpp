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
#include <numeric>
#include <vector>

#include "fodp/core/config.hpp"
#include "fodp/core/errors.hpp"
#include "fodp/core/rng.hpp"
#include "fodp/memory/kernel.hpp"
#include "fodp/memory/release_buffer.hpp"

namespace fodp {
namespace {

ReleaseBuffer filled(std::size_t K, const std::vector<GradientVector>& rel,
                     double gamma) {
  ReleaseBuffer b(K);
  for (const auto& r : rel) b.push(r, gamma);
  return b;
}

TEST(ReleaseBuffer, LengthAndWindowFollowStep) {
  ReleaseBuffer b(4);
  EXPECT_EQ(b.size(), 0u);
  EXPECT_EQ(b.active_window(), 1u);
  EXPECT_FALSE(b.ema().has_value());
  for (std::size_t t = 1; t <= 6; ++t) {
    b.push(GradientVector{static_cast<double>(t)}, 0.2);
    EXPECT_EQ(b.step(), t);
    EXPECT_EQ(b.size(), std::min<std::size_t>(3, t));
    EXPECT_EQ(b.active_window(), std::min<std::size_t>(4, t + 1));
    EXPECT_EQ(b.lag(1)[0], static_cast<double>(t));
  }
  EXPECT_EQ(b.lag(3)[0], 4.0);
}

TEST(ReleaseBuffer, WindowOneKeepsNothing) {
  ReleaseBuffer b(1);
  b.push({1.0}, 0.5);
  EXPECT_EQ(b.size(), 0u);
  EXPECT_EQ(b.active_window(), 1u);
  EXPECT_TRUE(b.ema().has_value());
}

TEST(Ema, InitialisedToFirstRelease) {
  const ReleaseBuffer b = filled(3, {{2.0, -1.0}}, 0.3);
  EXPECT_EQ(*b.ema(), (GradientVector{2.0, -1.0}));
}

TEST(Ema, GammaOneTracksLatest) {
  const ReleaseBuffer b = filled(3, {{1.0}, {5.0}, {-2.0}}, 1.0);
  EXPECT_EQ((*b.ema())[0], -2.0);
}

TEST(Ema, TwoStepRecursion) {
  const ReleaseBuffer b = filled(3, {{2.0}, {4.0}}, 0.5);
  EXPECT_DOUBLE_EQ((*b.ema())[0], 3.0);
  const ReleaseBuffer f = ema_update(filled(3, {{2.0}}, 0.5), {4.0}, 0.5);
  EXPECT_DOUBLE_EQ((*f.ema())[0], 3.0);
}

TEST(Inconsistency, Values) {
  const GradientVector ema{1.0, 2.0};
  EXPECT_EQ(inconsistency(ema, ema, 1e-3, 1e-8), 0.0);
  EXPECT_NEAR(inconsistency({1e-3, 0.0}, {0.0, 0.0}, 1e-3, 1e-8),
              1e-3 / (1e-3 + 1e-8), 1e-15);
  EXPECT_NEAR(inconsistency({0.3, 2.4}, {0.0, 2.0}, 1e-3, 1e-8),
              0.5 / (2.0 + 1e-8), 1e-15);
}

TEST(Confidence, Values) {
  EXPECT_EQ(confidence({0.0, 0.0}, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(confidence({0.6, 0.8}, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(confidence({9.0}, 1.0), 0.9);
}

TEST(KernelWeights, FlatWhenPowerLawAndTemperingOff) {
  MechanismConfig cfg;
  cfg.alpha = 1.0;
  cfg.temper_lambda = 0.0;
  cfg.tau = 0.0;
  cfg.memory_window = 4;
  const ReleaseBuffer b = filled(4, {{1.0}, {3.0}, {-2.0}}, cfg.gamma);
  const KernelWeights w = kernel_weights(b, cfg);
  ASSERT_EQ(w.size(), 3u);
  for (double v : w.weights) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
}

TEST(KernelWeights, PowerLawOnly) {
  MechanismConfig cfg;
  cfg.alpha = 0.8;
  cfg.temper_lambda = 0.0;
  cfg.tau = 0.0;
  cfg.memory_window = 3;
  const ReleaseBuffer b = filled(3, {{1.0}, {2.0}}, cfg.gamma);
  const KernelWeights w = kernel_weights(b, cfg);
  const double a1 = std::pow(2.0, -0.2);
  const double a2 = std::pow(3.0, -0.2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w.weights[0], a1 / (a1 + a2), 1e-14);
  EXPECT_NEAR(w.weights[1], a2 / (a1 + a2), 1e-14);
}

TEST(KernelWeights, MatchesDirectFormulaWithTempering) {
  MechanismConfig cfg;
  cfg.alpha = 0.7;
  cfg.temper_lambda = 0.3;
  cfg.tau = 2.0;
  cfg.gamma = 0.4;
  cfg.memory_window = 6;
  Rng rng(4);
  std::vector<GradientVector> rel;
  for (int i = 0; i < 9; ++i) rel.push_back(gaussian_vector(rng, 3, 1.0));
  const ReleaseBuffer b = filled(6, rel, cfg.gamma);

  // Direct evaluation: EMA by recursion over all releases, raw coefficients
  // by pow/exp, then plain normalisation.
  std::vector<double> ema = rel[0].values();
  for (std::size_t i = 1; i < rel.size(); ++i) {
    for (int k = 0; k < 3; ++k) ema[k] = 0.4 * rel[i][k] + 0.6 * ema[k];
  }
  const double en = std::hypot(ema[0], ema[1], ema[2]);
  const double chi = en / (en + cfg.zeta);
  std::vector<double> raw;
  for (std::size_t j = 1; j <= 5; ++j) {
    const auto& r = rel[rel.size() - j];
    const double dev = std::hypot(r[0] - ema[0], r[1] - ema[1], r[2] - ema[2]);
    const double nu = dev / (std::max(en, cfg.kappa) + cfg.eps_stab);
    raw.push_back(std::pow(j + 1.0, cfg.alpha - 1.0) *
                  std::exp(-(cfg.temper_lambda + chi * cfg.tau * nu) * j));
  }
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  const KernelWeights w = kernel_weights(b, cfg);
  ASSERT_EQ(w.size(), 5u);
  EXPECT_NEAR(w.chi, chi, 1e-14);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(w.weights[j], raw[j] / total, 1e-12);
}

TEST(KernelWeights, SumToOneAndNonNegative) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    MechanismConfig cfg;
    cfg.alpha = 0.05 + 0.95 * rng.uniform();
    cfg.temper_lambda = 2.0 * rng.uniform();
    cfg.tau = 5.0 * rng.uniform();
    cfg.memory_window = 2 + rng.uniform_index(30);
    std::vector<GradientVector> rel;
    const std::size_t n = 1 + rng.uniform_index(40);
    for (std::size_t i = 0; i < n; ++i) {
      rel.push_back(gaussian_vector(rng, 4, 10.0 * rng.uniform()));
    }
    const KernelWeights w =
        kernel_weights(filled(cfg.memory_window, rel, cfg.gamma), cfg);
    double s = 0.0;
    for (double v : w.weights) {
      ASSERT_GE(v, 0.0);
      s += v;
    }
    ASSERT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(KernelWeights, RequiresMemory) {
  MechanismConfig cfg;
  EXPECT_THROW(kernel_weights(ReleaseBuffer(8), cfg), ConfigError);
  cfg.memory_window = 1;
  EXPECT_THROW(kernel_weights(filled(1, {{1.0}}, 0.2), cfg), ConfigError);
}

TEST(KernelWeights, RawCoefficientDecreasesInEachTemperingInput) {
  const double base = log_raw_coefficient(3, 0.8, 0.05, 0.5, 1.0, 0.7);
  EXPECT_LT(log_raw_coefficient(3, 0.8, 0.05, 0.6, 1.0, 0.7), base);
  EXPECT_LT(log_raw_coefficient(3, 0.8, 0.05, 0.5, 1.1, 0.7), base);
  EXPECT_LT(log_raw_coefficient(3, 0.8, 0.05, 0.5, 1.0, 0.8), base);
}

TEST(NormalizeLogWeights, SurvivesUnderflow) {
  const auto w = normalize_log_weights({-2000.0, -2001.0});
  const double e = std::exp(-1.0);
  EXPECT_NEAR(w[0], 1.0 / (1.0 + e), 1e-15);
  EXPECT_NEAR(w[1], e / (1.0 + e), 1e-15);
}

TEST(BaselineWeights, UniformAndExponential) {
  for (double v : uniform_weights(4)) EXPECT_DOUBLE_EQ(v, 0.25);
  const auto e = exponential_weights(3, 0.5);
  EXPECT_NEAR(e[0], 4.0 / 7.0, 1e-15);
  EXPECT_NEAR(e[1], 2.0 / 7.0, 1e-15);
  EXPECT_NEAR(e[2], 1.0 / 7.0, 1e-15);
}

TEST(VariantWeights, EmptyWithoutMemory) {
  MechanismConfig cfg;
  EXPECT_TRUE(variant_weights(ReleaseBuffer(8), cfg).empty());
  cfg.memory_variant = MemoryVariant::kCurrentOnly;
  EXPECT_TRUE(variant_weights(filled(8, {{1.0}, {2.0}}, 0.2), cfg).empty());
}

TEST(MemoryState, NoMemoryIsZero) {
  const ReleaseBuffer b(8);
  EXPECT_EQ(memory_state(b, KernelWeights{}, 2), GradientVector::zeros(2));
}

TEST(MemoryState, SingleLagCopiesLastRelease) {
  MechanismConfig cfg;
  const ReleaseBuffer b = filled(8, {{0.25, -3.0}}, cfg.gamma);
  const KernelWeights w = variant_weights(b, cfg);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.weights[0], 1.0);
  EXPECT_TRUE(bitwise_equal(memory_state(b, w, 2), GradientVector{0.25, -3.0}));
}

TEST(MemoryState, ConvexCombination) {
  // Newest first: lag 1 = (1,0), lag 2 = (0,1).
  const ReleaseBuffer b = filled(3, {{0.0, 1.0}, {1.0, 0.0}}, 0.2);
  KernelWeights w;
  w.weights = {0.6, 0.4};
  const GradientVector u = memory_state(b, w, 2);
  EXPECT_DOUBLE_EQ(u[0], 0.6);
  EXPECT_DOUBLE_EQ(u[1], 0.4);
}

}  // namespace
}  // namespace fodp
