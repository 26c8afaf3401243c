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

#include "fodp/accountant/rdp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fodp/core/errors.hpp"

namespace fodp {

namespace {

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log(exp(x) - 1) for x > 0.
double log_expm1(double x) {
  return x > 1.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
}

void check_grid(const std::vector<double>& orders) {
  if (orders.empty()) throw ConfigError("RdpCurve: empty order grid");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!(orders[i] > 1.0) || !std::isfinite(orders[i])) {
      throw ConfigError("RdpCurve: orders must be finite and > 1");
    }
    if (i > 0 && !(orders[i] > orders[i - 1])) {
      throw ConfigError("RdpCurve: orders must be strictly increasing");
    }
  }
}

}  // namespace

RdpCurve RdpCurve::zero(std::vector<double> orders) {
  check_grid(orders);
  RdpCurve c;
  c.eps_at_order.assign(orders.size(), 0.0);
  c.orders = std::move(orders);
  return c;
}

std::vector<double> default_orders() {
  std::vector<double> orders;
  for (int a = 2; a <= 64; ++a) orders.push_back(a);
  orders.push_back(128);
  orders.push_back(256);
  return orders;
}

double rdp_subsampled_gaussian(double order, double q, double rho) {
  if (!(order > 1.0) || !std::isfinite(order)) {
    throw ConfigError("rdp_subsampled_gaussian: order must be > 1");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ConfigError("rdp_subsampled_gaussian: rho must be > 0");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ConfigError("rdp_subsampled_gaussian: q must lie in [0, 1]");
  }
  if (q == 0.0) return 0.0;
  if (q == 1.0) return order / (2.0 * rho * rho);
  if (order != std::floor(order)) {
    throw ConfigError(
        "rdp_subsampled_gaussian: subsampled bound needs an integer order");
  }

  // The binomial weights sum to one, so A = 1 + B with
  // B = sum_{k>=2} C(order,k) (1-q)^(order-k) q^k (exp((k^2-k)/(2 rho^2)) - 1).
  // Every term of B is positive, which keeps full relative precision when
  // log A is close to zero.
  const double log_q = std::log(q);
  const double log_1mq = std::log1p(-q);
  const double inv_two_rho_sq = 1.0 / (2.0 * rho * rho);
  double log_b = -std::numeric_limits<double>::infinity();
  const auto n = static_cast<long>(order);
  for (long k = 2; k <= n; ++k) {
    const auto kd = static_cast<double>(k);
    const double term = log_binomial(order, kd) + (order - kd) * log_1mq +
                        kd * log_q + log_expm1((kd * kd - kd) * inv_two_rho_sq);
    log_b = log_add(log_b, term);
  }
  const double log_a = log_b > 0.0 ? log_b + std::log1p(std::exp(-log_b))
                                   : std::log1p(std::exp(log_b));
  return log_a / (order - 1.0);
}

std::vector<double> rdp_per_step(const std::vector<double>& orders, double q,
                                 double rho) {
  std::vector<double> out(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out[i] = rdp_subsampled_gaussian(orders[i], q, rho);
  }
  return out;
}

RdpCurve compose(RdpCurve curve, const std::vector<double>& per_step,
                 std::size_t steps) {
  if (per_step.size() != curve.orders.size()) {
    throw ConfigError("compose: per-step values do not match the order grid");
  }
  const auto n = static_cast<double>(steps);
  for (std::size_t i = 0; i < per_step.size(); ++i) {
    if (!(per_step[i] >= 0.0)) {
      throw ConfigError("compose: per-step RDP must be >= 0");
    }
    curve.eps_at_order[i] += n * per_step[i];
  }
  curve.steps_composed += steps;
  return curve;
}

EpsilonDelta to_eps_delta(const RdpCurve& curve, double delta) {
  if (curve.orders.empty()) throw ConfigError("to_eps_delta: empty grid");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ConfigError("to_eps_delta: delta must lie in (0, 1)");
  }
  const double log_inv_delta = -std::log(delta);
  EpsilonDelta best{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < curve.orders.size(); ++i) {
    const double eps =
        curve.eps_at_order[i] + log_inv_delta / (curve.orders[i] - 1.0);
    if (eps < best.epsilon) best = {eps, curve.orders[i]};
  }
  return best;
}

EpsilonDelta epsilon_after(std::size_t steps, double q, double rho,
                           double delta, const std::vector<double>& orders) {
  RdpCurve c = compose(RdpCurve::zero(orders), rdp_per_step(orders, q, rho),
                       steps);
  return to_eps_delta(c, delta);
}

}  // namespace fodp
