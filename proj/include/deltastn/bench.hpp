// Copyright 2026 The deltastn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DELTASTN_BENCH_HPP_
#define DELTASTN_BENCH_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deltastn/replay.hpp"

namespace deltastn {

struct BenchOptions {
  std::vector<EngineKind> engines{EngineKind::kDelta, EngineKind::kBaseline};
  int repetitions = 1;
  ReplayLimits limits;
  /// Worker threads; each run owns its engine instances.
  int jobs = 1;
};

/// One measured (instance, engine, repetition) triple, or the median of the
/// repetitions of one (instance, engine) pair when `median` is set.
struct BenchRow {
  RunResult result;
  int repetition = 0;
  bool median = false;
};

/// Replays every file on every engine `repetitions` times, then appends one
/// median row per (file, engine). Unreadable or malformed files produce
/// parse_error rows; nothing aborts the batch.
[[nodiscard]] std::vector<BenchRow> bench(const std::vector<std::filesystem::path>& files,
                                           const BenchOptions& options);

/// Same, over already loaded traces.
[[nodiscard]] std::vector<BenchRow> bench(const std::vector<Trace>& traces,
                                           const BenchOptions& options);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

/// Reads rows back from `write_bench_csv` output. Throws std::runtime_error
/// naming the offending line on malformed input.
[[nodiscard]] std::vector<BenchRow> read_bench_csv(std::istream& in);

/// Cactus series: ascending per-instance resource values of solved runs,
/// numbered 1..k.
using CactusSeries = std::vector<std::pair<std::size_t, double>>;

struct CactusData {
  /// resource ("time" or "memory") -> engine -> series
  std::map<std::string, std::map<std::string, CactusSeries>> series;
};

/// Uses median rows when the CSV has any, otherwise every row. Only runs
/// with status ok count as solved.
[[nodiscard]] CactusData cactus_from_rows(const std::vector<BenchRow>& rows);

/// Writes `cactus_<resource>_<engine>.dat` per series into `dir` and
/// returns the written paths.
std::vector<std::filesystem::path> write_cactus(const CactusData& data,
                                                const std::filesystem::path& dir);

}  // namespace deltastn

#endif  // DELTASTN_BENCH_HPP_
