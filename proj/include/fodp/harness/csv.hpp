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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fodp {

/// Minimal comma-separated table. Fields never contain commas or quotes
/// (labels are sanitised before they reach a log).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& file);
void write_csv(const std::filesystem::path& file, const CsvTable& table);
std::string to_csv_text(const CsvTable& table);

double parse_double_field(std::string_view s);
unsigned long long parse_uint_field(std::string_view s);

}  // namespace fodp
