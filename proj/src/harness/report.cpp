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

#include "fodp/harness/report.hpp"

#include <algorithm>
#include <tuple>

#include "fodp/core/errors.hpp"
#include "fodp/harness/csv.hpp"

namespace fodp {

namespace {

struct Point {
  std::string series;
  unsigned long long seed;
  unsigned long long epoch;
  std::string accuracy;
  std::string epsilon;
};

bool ends_with(const std::string& s, std::string_view tail) {
  return s.size() >= tail.size() &&
         s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

void report(const std::filesystem::path& in, const std::filesystem::path& out) {
  if (!std::filesystem::is_directory(in)) {
    throw FormatError("report: not a directory: " + in.string());
  }
  std::vector<Point> points;
  for (const auto& entry : std::filesystem::directory_iterator(in)) {
    if (!entry.is_regular_file() ||
        !ends_with(entry.path().filename().string(), "_log.csv")) {
      continue;
    }
    const CsvTable t = read_csv(entry.path());
    const std::size_t alg = t.column("algorithm");
    const std::size_t seed = t.column("seed");
    const std::size_t epoch = t.column("epoch");
    const std::size_t acc = t.column("test_accuracy");
    const std::size_t eps = t.column("epsilon");
    for (const auto& row : t.rows) {
      points.push_back({row[alg], parse_uint_field(row[seed]),
                        parse_uint_field(row[epoch]), row[acc], row[eps]});
    }
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return std::tie(a.series, a.seed, a.epoch) <
           std::tie(b.series, b.seed, b.epoch);
  });

  CsvTable by_epoch{{"series", "seed", "epoch", "test_accuracy"}, {}};
  CsvTable by_eps{{"series", "seed", "epoch", "epsilon", "test_accuracy"}, {}};
  CsvTable eps_epoch{{"series", "seed", "epoch", "epsilon"}, {}};
  for (const Point& p : points) {
    const std::string seed = std::to_string(p.seed);
    const std::string epoch = std::to_string(p.epoch);
    by_epoch.rows.push_back({p.series, seed, epoch, p.accuracy});
    by_eps.rows.push_back({p.series, seed, epoch, p.epsilon, p.accuracy});
    eps_epoch.rows.push_back({p.series, seed, epoch, p.epsilon});
  }
  write_csv(out / "accuracy_vs_epoch.csv", by_epoch);
  write_csv(out / "accuracy_vs_epsilon.csv", by_eps);
  write_csv(out / "epsilon_vs_epoch.csv", eps_epoch);
}

}  // namespace fodp
