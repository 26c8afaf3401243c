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

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fodp/accountant/rdp.hpp"
#include "fodp/core/errors.hpp"
#include "fodp/harness/csv.hpp"
#include "fodp/harness/report.hpp"
#include "fodp/harness/run.hpp"
#include "fodp/harness/stats.hpp"
#include "fodp/oracle/oracle.hpp"

namespace {

std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::size_t end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void print_final(const std::vector<fodp::RunLog>& logs) {
  for (const auto& log : logs) {
    std::cout << log.algorithm << " seed " << log.seed
              << ": final_accuracy=" << fodp::format_double(log.final.final_accuracy)
              << " epsilon=" << fodp::format_double(log.final.final_epsilon) << "\n";
  }
}

int cmd_account(double q, double sigma, double beta, std::size_t steps,
                double delta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw fodp::ConfigError("beta must be in (0,1]");
  if (!(sigma > 0.0)) throw fodp::ConfigError("sigma must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw fodp::ConfigError("delta must be in (0,1)");
  const double rho = sigma / beta;
  const auto orders = fodp::default_orders();
  const auto per_step = fodp::rdp_per_step(orders, q, rho);
  const auto curve = fodp::compose(fodp::RdpCurve::zero(orders), per_step, steps);

  nlohmann::ordered_json out;
  out["q"] = q;
  out["sigma"] = sigma;
  out["beta"] = beta;
  out["rho"] = rho;
  out["steps"] = steps;
  out["delta"] = delta;
  nlohmann::ordered_json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    rows.push_back({{"order", orders[i]},
                    {"rdp_per_step", per_step[i]},
                    {"rdp_total", curve.eps_at_order[i]}});
  }
  out["curve"] = rows;
  if (steps == 0) {
    out["epsilon"] = 0.0;
    out["best_order"] = nullptr;
  } else {
    const auto ed = fodp::to_eps_delta(curve, delta);
    out["epsilon"] = ed.epsilon;
    out["best_order"] = ed.best_order;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t trials) {
  bool ok = true;
  for (const auto& o : fodp::oracle::verify_suite(seed, trials)) {
    std::cout << (o.passed ? "PASS " : "FAIL ") << o.name << ": " << o.detail
              << "\n";
    ok = ok && o.passed;
  }
  std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fodp: differentially private SGD with fractional memory"};
  app.require_subcommand(1);

  std::string config_path;
  unsigned jobs = 1;

  auto* train = app.add_subcommand("train", "Train every seed of a config");
  train->add_option("--config", config_path, "Run config file")->required();
  train->add_option("--jobs", jobs, "Seeds run concurrently")->check(CLI::PositiveNumber);

  std::string axis;
  std::string values;
  auto* sweep = app.add_subcommand("sweep", "Ablation sweep over one axis");
  sweep->add_option("--axis", axis, "beta | alpha | K | variant | algorithm")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();
  sweep->add_option("--config", config_path, "Base run config")->required();
  sweep->add_option("--jobs", jobs, "Seeds run concurrently")->check(CLI::PositiveNumber);

  double q = 0.04, sigma = 1.1, beta = 0.9, delta = 1e-5;
  std::size_t steps = 0;
  auto* account = app.add_subcommand("account", "Privacy curve and (epsilon, delta)");
  account->add_option("--q", q, "Sampling rate")->required();
  account->add_option("--sigma", sigma, "Noise multiplier")->required();
  account->add_option("--beta", beta, "Mixing coefficient")->capture_default_str();
  account->add_option("--steps", steps, "Composed steps")->required();
  account->add_option("--delta", delta, "Target delta")->capture_default_str();

  std::uint64_t verify_seed = 20260101;
  std::size_t trials = 100;
  auto* verify = app.add_subcommand("verify", "Run the brute-force oracle checks");
  verify->add_option("--seed", verify_seed, "Oracle seed")->capture_default_str();
  verify->add_option("--trials", trials, "Sensitivity trials per beta")
      ->capture_default_str();

  std::string in_dir, out_dir;
  auto* report = app.add_subcommand("report", "Plot-ready CSVs from run logs");
  report->add_option("--in", in_dir, "Log directory")->required();
  report->add_option("--out", out_dir, "Output directory")->required();

  std::string summary_out;
  auto* summarize = app.add_subcommand("summarize", "Seed statistics per algorithm");
  summarize->add_option("--in", in_dir, "Log directory")->required();
  summarize->add_option("--out", summary_out, "Write the table here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) {
      print_final(fodp::run(fodp::load_run_config(config_path), jobs));
    } else if (*sweep) {
      const auto base = fodp::load_run_config(config_path);
      const auto result = fodp::sweep(base, fodp::parse_sweep_axis(axis),
                                      split_values(values), jobs);
      print_final(result.logs);
    } else if (*account) {
      return cmd_account(q, sigma, beta, steps, delta);
    } else if (*verify) {
      return cmd_verify(verify_seed, trials);
    } else if (*report) {
      fodp::report(in_dir, out_dir);
    } else if (*summarize) {
      const auto table = fodp::summarize_logs(in_dir);
      if (summary_out.empty()) {
        std::cout << fodp::to_csv_text(table);
      } else {
        fodp::write_csv(summary_out, table);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "fodp: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
