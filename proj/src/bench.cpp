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

#include "deltastn/bench.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace deltastn {

namespace {

constexpr std::string_view kCsvHeader = "# deltastn-bench csv v1";
constexpr std::string_view kCsvColumns =
    "instance,engine,rep,status,wall_time_s,ops_executed,checks,sat,unsat,peak_cells,"
    "peak_entries,peak_logical,peak_rss_bytes,failed_op,detail";
constexpr std::size_t kCsvFields = 15;

std::uint64_t peak_rss_bytes() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // Linux reports KiB
}

std::string sanitize(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

struct Input {
  std::string name;
  std::optional<Trace> trace;
  std::string error;
};

std::vector<BenchRow> run_inputs(const std::vector<Input>& inputs, const BenchOptions& options) {
  struct Task {
    std::size_t input;
    EngineKind engine;
    int rep;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (EngineKind e : options.engines) {
      for (int rep = 0; rep < options.repetitions; ++rep) tasks.push_back({i, e, rep});
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  auto run_task = [&](std::size_t k) {
    const Task& t = tasks[k];
    const Input& in = inputs[t.input];
    RunResult r;
    if (in.trace) {
      r = replay(*in.trace, t.engine, options.limits);
      r.peak_rss_bytes = peak_rss_bytes();
    } else {
      r.engine = t.engine;
      r.status = RunStatus::kParseError;
      r.detail = in.error;
    }
    r.instance = in.name;
    rows[k] = BenchRow{std::move(r), t.rep, false};
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_task(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) run_task(k);
      });
    }
  }

  // Tasks are grouped by (input, engine) with consecutive repetitions.
  std::vector<BenchRow> out;
  const auto reps = static_cast<std::size_t>(std::max(0, options.repetitions));
  for (std::size_t g = 0; reps > 0 && g < rows.size(); g += reps) {
    std::vector<double> times;
    BenchRow median = rows[g];
    median.median = true;
    for (std::size_t k = g; k < g + reps; ++k) {
      times.push_back(rows[k].result.wall_time_s);
      if (median.result.status == RunStatus::kOk && rows[k].result.status != RunStatus::kOk) {
        median.result.status = rows[k].result.status;
        median.result.detail = rows[k].result.detail;
        median.result.failed_op = rows[k].result.failed_op;
      }
      out.push_back(std::move(rows[k]));
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    median.result.wall_time_s =
        times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
    out.push_back(std::move(median));
  }
  return out;
}

template <class T>
T parse_number(std::string_view s, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("malformed CSV line " + std::to_string(line) + ": bad number '" +
                             std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<BenchRow> bench(const std::vector<std::filesystem::path>& files,
                            const BenchOptions& options) {
  std::vector<Input> inputs;
  for (const auto& path : files) {
    Input in;
    in.name = path.filename().string();
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      in.error = "cannot open " + path.string();
    } else {
      try {
        in.trace = parse_trace(file, in.name);
      } catch (const TraceError& e) {
        in.error = e.what();
      }
    }
    inputs.push_back(std::move(in));
  }
  return run_inputs(inputs, options);
}

std::vector<BenchRow> bench(const std::vector<Trace>& traces, const BenchOptions& options) {
  std::vector<Input> inputs;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    Input in;
    in.name = traces[i].source().empty() ? "trace" + std::to_string(i) : traces[i].source();
    in.trace = traces[i];
    inputs.push_back(std::move(in));
  }
  return run_inputs(inputs, options);
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n' << kCsvColumns << '\n';
  for (const BenchRow& row : rows) {
    const RunResult& r = row.result;
    out << sanitize(r.instance) << ',' << engine_name(r.engine) << ','
        << (row.median ? std::string("median") : std::to_string(row.repetition)) << ','
        << status_name(r.status) << ',' << std::setprecision(9) << r.wall_time_s << ','
        << r.ops_executed << ',' << r.checks << ',' << r.sat << ',' << r.unsat << ','
        << r.peak_cells << ',' << r.peak_entries << ',' << r.peak_logical << ',';
    if (r.peak_rss_bytes) out << *r.peak_rss_bytes;
    out << ',';
    if (r.failed_op) out << *r.failed_op;
    out << ',' << sanitize(r.detail) << '\n';
  }
}

std::vector<BenchRow> read_bench_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_columns = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!seen_columns) {
      if (line != kCsvColumns) {
        throw std::runtime_error("malformed CSV line " + std::to_string(line_no) +
                                 ": unexpected column header");
      }
      seen_columns = true;
      continue;
    }
    std::vector<std::string_view> f;
    std::string_view rest(line);
    while (true) {
      auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != kCsvFields) {
      throw std::runtime_error("malformed CSV line " + std::to_string(line_no) + ": expected " +
                               std::to_string(kCsvFields) + " fields");
    }
    BenchRow row;
    RunResult& r = row.result;
    r.instance = std::string(f[0]);
    if (f[1] == "delta") {
      r.engine = EngineKind::kDelta;
    } else if (f[1] == "baseline") {
      r.engine = EngineKind::kBaseline;
    } else {
      throw std::runtime_error("malformed CSV line " + std::to_string(line_no) + ": unknown engine");
    }
    if (f[2] == "median") {
      row.median = true;
    } else {
      row.repetition = parse_number<int>(f[2], line_no);
    }
    bool known_status = false;
    for (RunStatus s : {RunStatus::kOk, RunStatus::kTimeout, RunStatus::kMemout,
                        RunStatus::kDivergence, RunStatus::kParseError}) {
      if (f[3] == status_name(s)) {
        r.status = s;
        known_status = true;
      }
    }
    if (!known_status) {
      throw std::runtime_error("malformed CSV line " + std::to_string(line_no) + ": unknown status");
    }
    r.wall_time_s = parse_number<double>(f[4], line_no);
    r.ops_executed = parse_number<std::size_t>(f[5], line_no);
    r.checks = parse_number<std::size_t>(f[6], line_no);
    r.sat = parse_number<std::size_t>(f[7], line_no);
    r.unsat = parse_number<std::size_t>(f[8], line_no);
    r.peak_cells = parse_number<std::uint64_t>(f[9], line_no);
    r.peak_entries = parse_number<std::uint64_t>(f[10], line_no);
    r.peak_logical = parse_number<std::uint64_t>(f[11], line_no);
    if (!f[12].empty()) r.peak_rss_bytes = parse_number<std::uint64_t>(f[12], line_no);
    if (!f[13].empty()) r.failed_op = parse_number<std::size_t>(f[13], line_no);
    r.detail = std::string(f[14]);
    rows.push_back(std::move(row));
  }
  if (!seen_columns) throw std::runtime_error("malformed CSV: missing column header");
  return rows;
}

CactusData cactus_from_rows(const std::vector<BenchRow>& rows) {
  const bool has_median = std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.median; });
  CactusData data;
  for (const BenchRow& row : rows) {
    if (row.median != has_median) continue;
    const std::string engine(engine_name(row.result.engine));
    data.series["time"][engine];
    data.series["memory"][engine];
    if (row.result.status != RunStatus::kOk) continue;
    data.series["time"][engine].emplace_back(0, row.result.wall_time_s);
    data.series["memory"][engine].emplace_back(0, static_cast<double>(row.result.peak_logical));
  }
  for (auto& [resource, engines] : data.series) {
    for (auto& [engine, series] : engines) {
      std::sort(series.begin(), series.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
      for (std::size_t i = 0; i < series.size(); ++i) series[i].first = i + 1;
    }
  }
  return data;
}

std::vector<std::filesystem::path> write_cactus(const CactusData& data,
                                                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& [resource, engines] : data.series) {
    for (const auto& [engine, series] : engines) {
      auto path = dir / ("cactus_" + resource + "_" + engine + ".dat");
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << "# solved " << resource << '\n' << std::setprecision(12);
      for (const auto& [solved, value] : series) out << solved << ' ' << value << '\n';
      written.push_back(std::move(path));
    }
  }
  return written;
}

}  // namespace deltastn
