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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fodp/harness/csv.hpp"

namespace fodp {

/// Two-sided Student-t quantile t_{p, dof} (boost::math::students_t).
double student_t_quantile(double p, double dof);

struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> std;  // sample std, n-1 denominator; n >= 2
  std::optional<double> ci_low;
  std::optional<double> ci_high;
};

/// mean +- t_{0.975, n-1} * s / sqrt(n).
SummaryStats t_interval(double mean, double sd, std::size_t n);

/// Summary of raw values; std and CI stay empty when n < 2.
SummaryStats summarize_values(const std::vector<double>& values);

inline constexpr const char* kSummaryHeader =
    "algorithm,metric,n,mean,std,ci95_low,ci95_high,note";

/// Reads every *_final.csv under dir (sorted by file name), groups rows by
/// the algorithm column and summarises final_accuracy, best_accuracy,
/// final_loss and final_epsilon. Pure function of the files.
CsvTable summarize_logs(const std::filesystem::path& dir);

}  // namespace fodp
