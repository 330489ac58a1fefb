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

// Command-line harness: replay, verify, bench, gen, report.
//
// Exit codes: 0 ok, 1 divergence or expectation failure, 2 parse or usage
// error, 3 limit exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deltastn/bench.hpp"
#include "deltastn/replay.hpp"
#include "deltastn/trace.hpp"
#include "deltastn/workload.hpp"

namespace {

using namespace deltastn;

constexpr int kExitOk = 0;
constexpr int kExitDivergence = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct LoadError {
  std::string message;
};

Trace load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError{"cannot open " + path};
  try {
    return parse_trace(in, std::filesystem::path(path).filename().string());
  } catch (const TraceError& e) {
    throw LoadError{path + ": " + e.what()};
  }
}

int exit_code(RunStatus status) {
  switch (status) {
    case RunStatus::kOk: return kExitOk;
    case RunStatus::kDivergence: return kExitDivergence;
    case RunStatus::kParseError: return kExitUsage;
    case RunStatus::kTimeout:
    case RunStatus::kMemout: return kExitLimit;
  }
  return kExitUsage;
}

void print_result(const RunResult& r, std::ostream& out) {
  out << "instance=" << r.instance << " engine=" << engine_name(r.engine)
      << " status=" << status_name(r.status) << " ops=" << r.ops_executed << " checks=" << r.checks
      << " sat=" << r.sat << " unsat=" << r.unsat << " wall_time_s=" << r.wall_time_s
      << " peak_cells=" << r.peak_cells << " peak_entries=" << r.peak_entries
      << " peak_logical=" << r.peak_logical << '\n';
  if (r.failed_op) out << "failed at op " << *r.failed_op << ": " << r.detail << '\n';
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental simple temporal network engine: trace replay and benchmarking"};
  app.require_subcommand(1);

  const std::map<std::string, EngineKind> engines{{"delta", EngineKind::kDelta},
                                                  {"baseline", EngineKind::kBaseline}};
  ReplayLimits limits;
  int result = kExitOk;

  // replay
  auto* replay_cmd = app.add_subcommand("replay", "Replay a trace on one engine");
  std::string replay_file;
  EngineKind replay_engine = EngineKind::kDelta;
  replay_cmd->add_option("file", replay_file, "Trace file")->required();
  replay_cmd->add_option("--engine", replay_engine, "delta or baseline")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  replay_cmd->add_option("--time-limit", limits.time_limit_s, "Seconds");
  replay_cmd->add_option("--mem-limit", limits.memory_limit, "Logical memory units");
  replay_cmd->callback([&] {
    const Trace trace = load(replay_file);
    const RunResult r = replay(trace, replay_engine, limits);
    print_result(r, std::cout);
    result = exit_code(r.status);
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run both engines in lockstep and compare");
  std::string verify_file;
  bool no_audit = false;
  verify_cmd->add_option("file", verify_file, "Trace file")->required();
  verify_cmd->add_flag("--no-audit", no_audit, "Skip structural audits");
  verify_cmd->callback([&] {
    const Trace trace = load(verify_file);
    const VerifyReport v = verify(trace, VerifyOptions{!no_audit});
    std::cout << "checks=" << v.checks << " consistent=" << v.consistent_checks
              << " models_compared=" << v.models_compared
              << " monotonicity_violations=" << v.monotonicity_violations
              << " audit_violations=" << v.audit_violations << '\n';
    if (!v.ok) {
      std::cout << "divergence at op " << *v.divergence_op << ": " << v.message << '\n';
      result = kExitDivergence;
    } else if (v.monotonicity_violations > 0) {
      result = kExitDivergence;
    } else {
      std::cout << "no divergence\n";
    }
  });

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Measure engines over many traces");
  std::vector<std::string> bench_files;
  std::vector<std::string> bench_engines{"delta", "baseline"};
  BenchOptions bench_options;
  std::string bench_out;
  bench_cmd->add_option("files", bench_files, "Trace files")->required();
  bench_cmd->add_option("--engines", bench_engines, "Comma-separated engines")
      ->delimiter(',')
      ->check(CLI::IsMember({"delta", "baseline"}));
  bench_cmd->add_option("--reps", bench_options.repetitions, "Repetitions")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", bench_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--time-limit", limits.time_limit_s, "Seconds per run");
  bench_cmd->add_option("--mem-limit", limits.memory_limit, "Logical memory units per run");
  bench_cmd->add_option("--out", bench_out, "CSV output (default stdout)");
  bench_cmd->callback([&] {
    bench_options.engines.clear();
    for (const auto& e : bench_engines) bench_options.engines.push_back(engines.at(e));
    bench_options.limits = limits;
    std::vector<std::filesystem::path> paths(bench_files.begin(), bench_files.end());
    std::ostringstream csv;
    write_bench_csv(bench(paths, bench_options), csv);
    result = write_output(bench_out, csv.str());
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a workload trace");
  std::string kind = "fctp";
  WorkloadSpec spec;
  AdversarialSpec adv;
  std::string step_text = "1";
  std::string gen_out;
  gen_cmd->add_option("--kind", kind, "fctp, negcycle, subsumption or chain")
      ->check(CLI::IsMember({"fctp", "negcycle", "subsumption", "chain"}));
  gen_cmd->add_option("--seed", spec.seed, "PRNG seed");
  gen_cmd->add_option("--depth", spec.depth, "Search tree depth");
  gen_cmd->add_option("--branching", spec.branching, "Children per node");
  gen_cmd->add_option("--adds", spec.adds_per_node, "Constraints per child");
  gen_cmd->add_option("--new-tp-prob", spec.new_tp_prob, "Chance of a new event per add");
  gen_cmd->add_option("--contradiction-prob", spec.contradiction_prob, "Chance of a contradiction");
  gen_cmd->add_option("--redundancy-prob", spec.redundancy_prob, "Chance of a repeated constraint");
  gen_cmd->add_option("--bound-min", spec.bound_min, "Smallest duration or separation");
  gen_cmd->add_option("--bound-max", spec.bound_max, "Largest duration or separation");
  gen_cmd->add_flag("--total-order", spec.total_order, "Totally ordered events");
  gen_cmd->add_option("--root-prefix", spec.root_prefix, "Constraints on the root");
  bool keep_alive = false;
  bool no_models = false;
  gen_cmd->add_flag("--no-destroy", keep_alive, "Keep every network alive");
  gen_cmd->add_flag("--no-models", no_models, "Omit model queries");
  gen_cmd->add_option("--max-ops", spec.max_ops, "Operation cap");
  gen_cmd->add_option("--n", adv.n, "Size of an adversarial trace");
  gen_cmd->add_option("--step", step_text, "Chain separation (rational)");
  gen_cmd->add_option("--check-every", adv.check_every, "Chain: adds between checks");
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");
  gen_cmd->callback([&] {
    spec.emit_destroy = !keep_alive;
    spec.model_queries = !no_models;
    Trace trace;
    if (kind == "fctp") {
      trace = generate(spec);
    } else {
      adv.seed = spec.seed;
      adv.kind = kind == "negcycle"      ? AdversarialKind::kNegCycle
                 : kind == "subsumption" ? AdversarialKind::kSubsumptionChain
                                         : AdversarialKind::kDeepChain;
      auto step = parse_bound(step_text);
      if (!step) throw WorkloadError("malformed --step " + step_text);
      adv.step = *step;
      trace = generate_adversarial(adv);
    }
    result = write_output(gen_out, write_trace(trace));
  });

  // report
  auto* report_cmd = app.add_subcommand("report", "Turn a bench CSV into cactus series");
  std::string report_csv;
  std::string report_dir = ".";
  report_cmd->add_option("--csv", report_csv, "Bench CSV")->required();
  report_cmd->add_option("--out-dir", report_dir, "Directory for series files");
  report_cmd->callback([&] {
    std::ifstream in(report_csv);
    if (!in) throw LoadError{"cannot open " + report_csv};
    const auto rows = read_bench_csv(in);
    for (const auto& path : write_cactus(cactus_from_rows(rows), report_dir)) {
      std::cout << path.string() << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const LoadError& e) {
    std::cerr << e.message << '\n';
    return kExitUsage;
  } catch (const WorkloadError& e) {
    std::cerr << "invalid workload: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return result;
}
