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

/// Accumulated Renyi DP over a fixed grid of orders.
struct RdpCurve {
  std::vector<double> orders;        // strictly increasing, all > 1
  std::vector<double> eps_at_order;  // same length, all >= 0
  std::size_t steps_composed = 0;

  /// Zero curve over the given grid. Throws ConfigError on an invalid grid.
  static RdpCurve zero(std::vector<double> orders);
};

/// {2, 3, ..., 64} U {128, 256}.
std::vector<double> default_orders();

/// RDP upper bound at `order` for the Poisson-subsampled Gaussian mechanism
/// with sampling rate q and noise-to-sensitivity ratio rho.
///
/// For 0 < q < 1 the order must be an integer; the bound is
///   (1/(order-1)) * log sum_{k=0}^{order} C(order,k) (1-q)^(order-k) q^k
///                                        * exp((k^2 - k) / (2 rho^2)),
/// evaluated in log space. q = 1 returns order/(2 rho^2); q = 0 returns 0.
double rdp_subsampled_gaussian(double order, double q, double rho);

/// Per-step values over a grid.
std::vector<double> rdp_per_step(const std::vector<double>& orders, double q,
                                 double rho);

/// eps_tot(order) += steps * per_step(order).
RdpCurve compose(RdpCurve curve, const std::vector<double>& per_step,
                 std::size_t steps);

struct EpsilonDelta {
  double epsilon = 0.0;
  double best_order = 0.0;
};

/// min over the grid of eps_tot(order) + log(1/delta)/(order - 1).
EpsilonDelta to_eps_delta(const RdpCurve& curve, double delta);

/// Convenience: (epsilon, delta) after `steps` homogeneous steps.
EpsilonDelta epsilon_after(std::size_t steps, double q, double rho,
                           double delta,
                           const std::vector<double>& orders = default_orders());

}  // namespace fodp
