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

#include "fodp/harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/distributions/students_t.hpp>

#include "fodp/core/errors.hpp"
#include "fodp/harness/run_config.hpp"

namespace fodp {

double student_t_quantile(double p, double dof) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("quantile level must be in (0,1)");
  if (!(dof > 0.0)) throw ConfigError("degrees of freedom must be positive");
  const boost::math::students_t dist(dof);
  return boost::math::quantile(dist, p);
}

SummaryStats t_interval(double mean, double sd, std::size_t n) {
  SummaryStats s;
  s.n = n;
  s.mean = mean;
  if (n < 2) return s;
  if (!(sd >= 0.0)) throw ConfigError("standard deviation must be non-negative");
  s.std = sd;
  const double half = student_t_quantile(0.975, static_cast<double>(n - 1)) *
                      sd / std::sqrt(static_cast<double>(n));
  s.ci_low = mean - half;
  s.ci_high = mean + half;
  return s;
}

SummaryStats summarize_values(const std::vector<double>& values) {
  if (values.empty()) throw ConfigError("cannot summarise an empty sample");
  const double n = static_cast<double>(values.size());
  // Shifted by the first value so identical samples give an exact mean.
  const double x0 = values.front();
  double shift = 0.0;
  for (double v : values) shift += v - x0;
  const double mean = x0 + shift / n;
  if (values.size() < 2) return t_interval(mean, 0.0, values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return t_interval(mean, std::sqrt(ss / (n - 1.0)), values.size());
}

CsvTable summarize_logs(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw FormatError("summarize: not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > 10 &&
        name.compare(name.size() - 10, 10, "_final.csv") == 0) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  static const char* const kMetrics[] = {"final_accuracy", "best_accuracy",
                                         "final_loss", "final_epsilon"};
  // algorithm -> metric index -> values
  std::map<std::string, std::vector<std::vector<double>>> groups;
  for (const auto& f : files) {
    const CsvTable t = read_csv(f);
    const std::size_t alg = t.column("algorithm");
    std::size_t cols[4];
    for (int m = 0; m < 4; ++m) cols[m] = t.column(kMetrics[m]);
    for (const auto& row : t.rows) {
      auto& g = groups[row[alg]];
      g.resize(4);
      for (int m = 0; m < 4; ++m) g[m].push_back(parse_double_field(row[cols[m]]));
    }
  }

  CsvTable out;
  out.header = {"algorithm", "metric", "n", "mean", "std",
                "ci95_low", "ci95_high", "note"};
  for (const auto& [alg, metrics] : groups) {
    for (int m = 0; m < 4; ++m) {
      const SummaryStats s = summarize_values(metrics[m]);
      auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
      };
      out.rows.push_back({alg, kMetrics[m], std::to_string(s.n),
                          format_double(s.mean), opt(s.std), opt(s.ci_low),
                          opt(s.ci_high),
                          s.n < 2 ? "n<2: no interval" : ""});
    }
  }
  return out;
}

}  // namespace fodp
