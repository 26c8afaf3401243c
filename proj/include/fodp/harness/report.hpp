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

namespace fodp {

/// Reads every *_log.csv under `in` and writes plot-ready tables into `out`:
///   accuracy_vs_epoch.csv   series,seed,epoch,test_accuracy
///   accuracy_vs_epsilon.csv series,seed,epoch,epsilon,test_accuracy
///   epsilon_vs_epoch.csv    series,seed,epoch,epsilon
/// Rows are sorted by (series, seed, epoch). Throws FormatError when `in`
/// does not exist; an existing but empty directory yields header-only files.
void report(const std::filesystem::path& in, const std::filesystem::path& out);

}  // namespace fodp
