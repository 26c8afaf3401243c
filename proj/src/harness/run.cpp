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

#include "fodp/harness/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "fodp/accountant/rdp.hpp"
#include "fodp/core/errors.hpp"
#include "fodp/model/kernels.hpp"
#include "fodp/model/mlp.hpp"

namespace fodp {

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

CsvTable RunLog::epoch_table() const {
  CsvTable t;
  t.header = {"algorithm", "seed", "epoch", "test_accuracy",
              "mean_loss", "epsilon", "elapsed_seconds"};
  for (const EpochRow& r : epochs) {
    t.rows.push_back({algorithm, std::to_string(seed), std::to_string(r.epoch),
                      format_double(r.test_accuracy), format_double(r.mean_loss),
                      format_double(r.epsilon), fixed3(r.elapsed_seconds)});
  }
  return t;
}

CsvTable RunLog::final_table() const {
  CsvTable t;
  t.header = {"algorithm",  "seed",          "final_accuracy", "best_accuracy",
              "final_loss", "final_epsilon", "runtime_seconds"};
  t.rows.push_back({algorithm, std::to_string(seed),
                    format_double(final.final_accuracy),
                    format_double(final.best_accuracy),
                    format_double(final.final_loss),
                    format_double(final.final_epsilon),
                    fixed3(final.runtime_seconds)});
  return t;
}

RunLog run_seed(const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  const Rng master(seed);
  Rng data_rng = master.substream(Stream::kData);
  const DataSplit data = build_dataset(cfg.dataset, data_rng);
  const MlpShape shape{data.train.dim, cfg.hidden1, cfg.hidden2,
                       data.train.num_classes};
  Rng init_rng = master.substream(Stream::kInit);
  const GradientVector theta0 = init_params(shape, init_rng);

  const MlpGradientSource source(shape, data.train);
  const DatasetHandle handle = DatasetHandle::make(source, cfg.privacy.q);
  Trainer trainer(cfg.algorithm, cfg.mechanism, cfg.privacy, cfg.train.eta,
                  cfg.eta_post(), theta0, seed);

  const std::vector<double> orders = default_orders();
  const std::vector<double> per_step = rdp_per_step(
      orders, cfg.privacy.q, noise_ratio(cfg.algorithm, cfg.mechanism, cfg.privacy));
  RdpCurve curve = RdpCurve::zero(orders);
  auto current_epsilon = [&] {
    if (curve.steps_composed == 0) return 0.0;
    return to_eps_delta(curve, cfg.privacy.delta).epsilon;
  };

  RunLog log;
  log.algorithm = cfg.series_name();
  log.seed = seed;
  auto evaluate_now = [&](std::size_t epoch) {
    const EvalResult ev = evaluate(shape, trainer.theta(), data.test);
    log.epochs.push_back(
        {epoch, ev.accuracy, ev.mean_loss, current_epsilon(), elapsed()});
  };

  evaluate_now(0);
  const std::size_t steps = steps_per_epoch(cfg.privacy.q);
  for (std::size_t epoch = 1; epoch <= cfg.train.epochs; ++epoch) {
    for (std::size_t s = 0; s < steps; ++s) {
      trainer.step(handle);
      curve = compose(std::move(curve), per_step, 1);
    }
    if (epoch % cfg.train.eval_every == 0 || epoch == cfg.train.epochs) {
      evaluate_now(epoch);
    }
  }

  const EpochRow& last = log.epochs.back();
  log.final.final_accuracy = last.test_accuracy;
  log.final.final_loss = last.mean_loss;
  log.final.final_epsilon = last.epsilon;
  log.final.best_accuracy = 0.0;
  for (const EpochRow& r : log.epochs) {
    log.final.best_accuracy = std::max(log.final.best_accuracy, r.test_accuracy);
  }
  log.final.runtime_seconds = elapsed();
  return log;
}

std::filesystem::path log_path(const std::filesystem::path& dir,
                               const std::string& series, std::uint64_t seed) {
  return dir / (series + "_seed" + std::to_string(seed) + "_log.csv");
}

std::filesystem::path final_path(const std::filesystem::path& dir,
                                 const std::string& series,
                                 std::uint64_t seed) {
  return dir / (series + "_seed" + std::to_string(seed) + "_final.csv");
}

void write_run_log(const std::filesystem::path& dir, const RunLog& log) {
  write_csv(log_path(dir, log.algorithm, log.seed), log.epoch_table());
  write_csv(final_path(dir, log.algorithm, log.seed), log.final_table());
}

std::vector<RunLog> run(const RunConfig& cfg, unsigned jobs) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  std::vector<RunLog> logs(cfg.seeds.size());
  if (jobs <= 1 || cfg.seeds.size() <= 1) {
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
      logs[i] = run_seed(cfg, cfg.seeds[i]);
      write_run_log(cfg.out_dir, logs[i]);
    }
    return logs;
  }

  // Seeds are independent jobs; each writes its own files.
  std::size_t next = 0;
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= cfg.seeds.size() || failure) return;
        i = next++;
      }
      try {
        logs[i] = run_seed(cfg, cfg.seeds[i]);
        write_run_log(cfg.out_dir, logs[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, cfg.seeds.size()); ++j) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return logs;
}

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "beta") return SweepAxis::kBeta;
  if (name == "alpha") return SweepAxis::kAlpha;
  if (name == "K" || name == "k" || name == "memory_window") return SweepAxis::kK;
  if (name == "variant" || name == "memory_variant") return SweepAxis::kVariant;
  if (name == "algorithm") return SweepAxis::kAlgorithm;
  throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kBeta:
      return "beta";
    case SweepAxis::kAlpha:
      return "alpha";
    case SweepAxis::kK:
      return "K";
    case SweepAxis::kVariant:
      return "variant";
    case SweepAxis::kAlgorithm:
      return "algorithm";
  }
  return "unknown";
}

RunConfig apply_sweep_value(const RunConfig& base, SweepAxis axis,
                            std::string_view value) {
  RunConfig c = base;
  const std::string v(value);
  switch (axis) {
    case SweepAxis::kBeta:
      c.mechanism.beta = parse_double_field(v);
      break;
    case SweepAxis::kAlpha:
      c.mechanism.alpha = parse_double_field(v);
      break;
    case SweepAxis::kK:
      c.mechanism.memory_window = parse_uint_field(v);
      break;
    case SweepAxis::kVariant:
      c.mechanism.memory_variant = parse_memory_variant(v);
      break;
    case SweepAxis::kAlgorithm:
      c.algorithm = parse_algorithm(v);
      break;
  }
  c.label = std::string(to_string(c.algorithm)) + "_" +
            std::string(to_string(axis)) + "=" + v;
  c.validate();
  return c;
}

SweepResult sweep(const RunConfig& base, SweepAxis axis,
                  const std::vector<std::string>& values, unsigned jobs) {
  if (values.empty()) throw ConfigError("sweep: no values given");
  std::vector<RunConfig> configs;
  for (const auto& v : values) configs.push_back(apply_sweep_value(base, axis, v));

  SweepResult result;
  result.table.header = {"axis", "value", "algorithm", "seed",
                         "epoch", "test_accuracy", "epsilon"};
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (RunLog& log : run(configs[i], jobs)) {
      for (const EpochRow& r : log.epochs) {
        result.table.rows.push_back(
            {std::string(to_string(axis)), values[i], log.algorithm,
             std::to_string(log.seed), std::to_string(r.epoch),
             format_double(r.test_accuracy), format_double(r.epsilon)});
      }
      result.logs.push_back(std::move(log));
    }
  }
  write_csv(std::filesystem::path(base.out_dir) /
                ("sweep_" + std::string(to_string(axis)) + ".csv"),
            result.table);
  return result;
}

}  // namespace fodp
