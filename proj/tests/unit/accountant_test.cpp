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
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "fodp/accountant/rdp.hpp"
#include "fodp/core/errors.hpp"

namespace fodp {
namespace {

using Big = boost::multiprecision::cpp_dec_float_50;

// The binomial expansion summed term by term in 50-digit arithmetic, with
// exact integer binomial coefficients.
double oracle_rdp(int order, double q_in, double rho_in) {
  const Big q(q_in);
  const Big rho(rho_in);
  Big total = 0;
  Big binom = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) binom = binom * (order - k + 1) / k;
    const Big expo = Big((k * k - k)) / (2 * rho * rho);
    total += binom * pow(1 - q, order - k) * pow(q, k) * exp(expo);
  }
  return static_cast<double>(log(total) / (order - 1));
}

TEST(Rdp, DefaultGrid) {
  const auto g = default_orders();
  ASSERT_EQ(g.size(), 65u);
  EXPECT_EQ(g.front(), 2.0);
  EXPECT_EQ(g[62], 64.0);
  EXPECT_EQ(g[63], 128.0);
  EXPECT_EQ(g.back(), 256.0);
}

TEST(Rdp, FullParticipationIsPlainGaussian) {
  const double rho = 1.1 / 0.9;
  for (double a : default_orders()) {
    EXPECT_EQ(rdp_subsampled_gaussian(a, 1.0, rho), a / (2.0 * rho * rho));
  }
}

TEST(Rdp, NoSamplingCostsNothing) {
  for (double a : default_orders()) EXPECT_EQ(rdp_subsampled_gaussian(a, 0.0, 1.1), 0.0);
}

TEST(Rdp, MatchesHighPrecisionExpansion) {
  const double rho = 1.1 / 0.9;
  for (double a : default_orders()) {
    const double got = rdp_subsampled_gaussian(a, 0.04, rho);
    const double want = oracle_rdp(static_cast<int>(a), 0.04, rho);
    EXPECT_NEAR(got, want, 1e-12 * want) << "order " << a;
    EXPECT_LE(got, a / (2.0 * rho * rho));
  }
}

TEST(Rdp, MatchesHighPrecisionAcrossRates) {
  for (double q : {0.001, 0.01, 0.1, 0.5, 0.9}) {
    for (double rho : {0.6, 1.0, 2.5}) {
      for (int a : {2, 5, 17, 64}) {
        const double want = oracle_rdp(a, q, rho);
        EXPECT_NEAR(rdp_subsampled_gaussian(a, q, rho), want, 1e-12 * want)
            << "q=" << q << " rho=" << rho << " order=" << a;
      }
    }
  }
}

TEST(Rdp, RejectsInvalidArguments) {
  EXPECT_THROW(rdp_subsampled_gaussian(1.0, 0.1, 1.0), ConfigError);
  EXPECT_THROW(rdp_subsampled_gaussian(2.5, 0.1, 1.0), ConfigError);
  EXPECT_THROW(rdp_subsampled_gaussian(2.0, 0.1, 0.0), ConfigError);
  EXPECT_THROW(rdp_subsampled_gaussian(2.0, 1.5, 1.0), ConfigError);
  EXPECT_THROW(RdpCurve::zero({3.0, 2.0}), ConfigError);
  EXPECT_THROW(RdpCurve::zero({1.0}), ConfigError);
}

TEST(Compose, ZeroStepsLeaveCurveUnchanged) {
  const auto orders = default_orders();
  const RdpCurve c = compose(RdpCurve::zero(orders),
                             rdp_per_step(orders, 0.04, 1.2), 0);
  for (double e : c.eps_at_order) EXPECT_EQ(e, 0.0);
  EXPECT_EQ(c.steps_composed, 0u);
}

TEST(Compose, HomogeneousAndAdditive) {
  const auto orders = default_orders();
  const auto per = rdp_per_step(orders, 0.04, 1.1 / 0.9);
  const RdpCurve whole = compose(RdpCurve::zero(orders), per, 1500);
  const RdpCurve split =
      compose(compose(RdpCurve::zero(orders), per, 600), per, 900);
  EXPECT_EQ(split.steps_composed, 1500u);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    EXPECT_NEAR(whole.eps_at_order[i], 1500.0 * per[i], 1e-12 * whole.eps_at_order[i]);
    EXPECT_NEAR(split.eps_at_order[i], whole.eps_at_order[i],
                1e-12 * whole.eps_at_order[i]);
  }
  EXPECT_THROW(compose(RdpCurve::zero(orders), {0.1}, 1), ConfigError);
}

TEST(Conversion, ZeroStepsPickLargestOrder) {
  const EpsilonDelta e = to_eps_delta(RdpCurve::zero(default_orders()), 1e-5);
  EXPECT_EQ(e.best_order, 256.0);
  EXPECT_DOUBLE_EQ(e.epsilon, std::log(1e5) / 255.0);
}

TEST(Conversion, SmallerBetaSpendsLess) {
  double previous = 0.0;
  for (double beta : {0.65, 0.80, 0.90, 0.95, 1.00}) {
    const double eps = epsilon_after(1500, 0.04, 1.1 / beta, 1e-5).epsilon;
    EXPECT_GT(eps, previous) << "beta " << beta;
    previous = eps;
  }
}

TEST(Conversion, MonotoneInSteps) {
  double previous = 0.0;
  for (std::size_t t : {1u, 10u, 100u, 1000u}) {
    const double eps = epsilon_after(t, 0.04, 1.1, 1e-5).epsilon;
    EXPECT_GT(eps, previous);
    previous = eps;
  }
}

}  // namespace
}  // namespace fodp
