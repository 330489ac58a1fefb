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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "deltastn/bench.hpp"
#include "deltastn/replay.hpp"
#include "deltastn/workload.hpp"
#include "doctest.h"

using namespace deltastn;

namespace {

// Mutants used to confirm that lockstep verification notices bugs.
class OffByHalfModel {
 public:
  static OffByHalfModel make() { return {}; }
  OffByHalfModel copy() const { return *this; }
  void add(TimePointId x, TimePointId y, const Bound& b) { net_.add(x, y, b); }
  bool check() const { return net_.check(); }
  Bound model(TimePointId x) const {
    Bound v = net_.model(x);
    return v > Bound(0) ? v + Bound(1, 2) : v;
  }
  std::size_t num_time_points() const { return net_.num_time_points(); }

 private:
  DeltaSTN net_;
};

class ForgetfulCopy {
 public:
  static ForgetfulCopy make() { return {}; }
  ForgetfulCopy copy() const { return {}; }
  void add(TimePointId x, TimePointId y, const Bound& b) { net_.add(x, y, b); }
  bool check() const { return net_.check(); }
  Bound model(TimePointId x) const { return net_.model(x); }
  std::size_t num_time_points() const { return net_.num_time_points(); }

 private:
  DeltaSTN net_;
};

Trace fctp(std::uint64_t seed, int depth, int branching, double contradiction = 0.1) {
  WorkloadSpec spec;
  spec.seed = seed;
  spec.depth = depth;
  spec.branching = branching;
  spec.adds_per_node = 3;
  spec.contradiction_prob = contradiction;
  return generate(spec);
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("deltastn_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("replay: empty trace") {
  for (EngineKind e : {EngineKind::kDelta, EngineKind::kBaseline}) {
    const RunResult r = replay(Trace{}, e);
    CHECK(r.status == RunStatus::kOk);
    CHECK(r.ops_executed == 0);
  }
}

TEST_CASE("replay: failed expectation is a divergence at its op") {
  const Trace t = parse_trace("make s0\ncheck s0 -> unsat\n");
  for (EngineKind e : {EngineKind::kDelta, EngineKind::kBaseline}) {
    const RunResult r = replay(t, e);
    CHECK(r.status == RunStatus::kDivergence);
    CHECK(r.failed_op == 2);
  }
  const Trace m = parse_trace("make s0\nadd s0 a b -2\nmodel s0 b -> 3\n");
  CHECK(replay(m, EngineKind::kDelta).failed_op == 3);
  const Trace unknown = parse_trace("make s0\nadd s0 a b -2\nmodel s0 zz\n");
  const RunResult u = replay(unknown, EngineKind::kDelta);
  CHECK(u.status == RunStatus::kDivergence);
  CHECK(u.detail.find("unknown time point") != std::string::npos);
}

TEST_CASE("replay: both engines give the same verdicts on a deep workload") {
  const Trace t = fctp(11, 10, 2);
  const RunResult d = replay(t, EngineKind::kDelta);
  const RunResult b = replay(t, EngineKind::kBaseline);
  CHECK(d.status == RunStatus::kOk);
  CHECK(b.status == RunStatus::kOk);
  CHECK(d.sat == b.sat);
  CHECK(d.unsat == b.unsat);
  CHECK(d.ops_executed == t.size());
  CHECK(d.peak_entries == b.peak_entries);
  CHECK(verify(t).ok);
}

TEST_CASE("replay: limits") {
  const Trace t = generate_adversarial({AdversarialKind::kDeepChain, 200, 1, Bound(1), 0});
  const RunResult slow = replay(t, EngineKind::kDelta, ReplayLimits{-1.0, 1'000'000});
  CHECK(slow.status == RunStatus::kTimeout);
  CHECK(slow.failed_op == 1);
  const RunResult big = replay(t, EngineKind::kDelta, ReplayLimits{60.0, 30});
  CHECK(big.status == RunStatus::kMemout);
  // After op k >= 2 the chain holds k - 1 cells and k entries.
  CHECK(big.failed_op == 16);
}

TEST_CASE("replay: logical memory matches engine counters") {
  WorkloadSpec spec;
  spec.depth = 6;
  spec.branching = 2;
  spec.adds_per_node = 3;
  spec.emit_destroy = false;
  const Trace t = generate(spec);
  const auto before = NeighborCell::counters().allocated;
  const RunResult d = replay(t, EngineKind::kDelta);
  CHECK(d.peak_cells == NeighborCell::counters().allocated - before);

  // The baseline's count is the sum of per-network edge maps.
  std::vector<std::optional<BaselineSTN>> nets(t.net_names().size());
  std::uint64_t edges = 0;
  for (const TraceOp& op : t.ops()) {
    if (const auto* m = std::get_if<MakeOp>(&op)) nets[m->net.value] = BaselineSTN();
    if (const auto* c = std::get_if<CopyOp>(&op)) {
      nets[c->net.value] = nets[c->src.value];
      edges += nets[c->net.value]->num_edges();
    }
    if (const auto* a = std::get_if<AddOp>(&op)) {
      const auto n = nets[a->net.value]->num_edges();
      nets[a->net.value]->add(a->x, a->y, a->bound);
      edges += nets[a->net.value]->num_edges() - n;
    }
  }
  CHECK(replay(t, EngineKind::kBaseline).peak_cells == edges);
}

TEST_CASE("verify: agreement, unsat traces and mutant detection") {
  const Trace unsat = parse_trace("make s0\nadd s0 a b -1\nadd s0 b a 0\ncheck s0 -> unsat\n");
  const VerifyReport v = verify(unsat);
  CHECK(v.ok);
  CHECK(v.checks == 1);
  CHECK(v.consistent_checks == 0);

  const Trace t = fctp(3, 5, 2, 0.0);
  CHECK(verify(t).ok);

  const VerifyReport half = verify_lockstep<OffByHalfModel, BaselineSTN>(t);
  CHECK_FALSE(half.ok);
  CHECK(half.message.find("model of") != std::string::npos);

  const VerifyReport forget = verify_lockstep<ForgetfulCopy, BaselineSTN>(t);
  CHECK_FALSE(forget.ok);
  REQUIRE(forget.divergence_op.has_value());
}

TEST_CASE("verify: flags a broken expectation even when engines agree") {
  const Trace t = parse_trace("make s0\nadd s0 a b -2\ncheck s0 -> sat\nmodel s0 b -> 1\n");
  const VerifyReport v = verify(t);
  CHECK_FALSE(v.ok);
  CHECK(v.divergence_op == 4);
}

TEST_CASE("bench: row arithmetic and CSV round trip") {
  BenchOptions options;
  options.repetitions = 3;
  const auto rows = bench(std::vector<Trace>{fctp(1, 3, 2)}, options);
  CHECK(rows.size() == 8);
  std::size_t medians = 0;
  for (const auto& r : rows) medians += r.median ? 1 : 0;
  CHECK(medians == 2);

  std::stringstream csv;
  write_bench_csv(rows, csv);
  CHECK(csv.str().rfind("# deltastn-bench csv v1\n", 0) == 0);
  const auto back = read_bench_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].median == rows[i].median);
    CHECK(back[i].result.peak_logical == rows[i].result.peak_logical);
    CHECK(back[i].result.status == rows[i].result.status);
    CHECK(back[i].result.ops_executed == rows[i].result.ops_executed);
  }
}

TEST_CASE("bench: unreadable and malformed files become parse_error rows") {
  const auto dir = temp_dir("bench");
  std::ofstream(dir / "bad.trace") << "make s0\ncopy s1 s9\n";
  std::ofstream(dir / "good.trace") << "make s0\ncheck s0 -> sat\n";
  BenchOptions options;
  options.jobs = 2;
  const auto rows = bench({dir / "bad.trace", dir / "good.trace", dir / "missing.trace"}, options);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].result.status == RunStatus::kParseError);
  CHECK(rows[0].result.detail.find("line 2") != std::string::npos);
  CHECK(rows[4].result.status == RunStatus::kOk);
  CHECK(rows[8].result.status == RunStatus::kParseError);
}

TEST_CASE("bench: malformed CSV is rejected") {
  std::stringstream missing("# nothing\n");
  CHECK_THROWS_AS((void)read_bench_csv(missing), std::runtime_error);
  std::stringstream short_row(
      "instance,engine,rep,status,wall_time_s,ops_executed,checks,sat,unsat,peak_cells,"
      "peak_entries,peak_logical,peak_rss_bytes,failed_op,detail\nx,delta,0,ok\n");
  CHECK_THROWS_AS((void)read_bench_csv(short_row), std::runtime_error);
}

TEST_CASE("cactus: sorted solved runs per engine and resource") {
  std::vector<BenchRow> rows;
  auto row = [](const std::string& name, EngineKind e, double time, RunStatus s) {
    BenchRow r;
    r.result.instance = name;
    r.result.engine = e;
    r.result.wall_time_s = time;
    r.result.peak_logical = static_cast<std::uint64_t>(time * 10);
    r.result.status = s;
    return r;
  };
  rows.push_back(row("i3", EngineKind::kDelta, 3, RunStatus::kOk));
  rows.push_back(row("i1", EngineKind::kDelta, 1, RunStatus::kOk));
  rows.push_back(row("i2", EngineKind::kDelta, 2, RunStatus::kOk));
  rows.push_back(row("i4", EngineKind::kDelta, 0.5, RunStatus::kTimeout));
  rows.push_back(row("i1", EngineKind::kBaseline, 5, RunStatus::kOk));

  const CactusData data = cactus_from_rows(rows);
  const CactusSeries& time = data.series.at("time").at("delta");
  CHECK(time == CactusSeries{{1, 1.0}, {2, 2.0}, {3, 3.0}});
  CHECK(data.series.at("memory").at("delta") == CactusSeries{{1, 10.0}, {2, 20.0}, {3, 30.0}});
  CHECK(data.series.at("time").at("baseline").size() == 1);

  const auto dir = temp_dir("cactus");
  const auto files = write_cactus(data, dir);
  CHECK(files.size() == 4);
  CHECK(std::filesystem::exists(dir / "cactus_time_delta.dat"));
  CHECK(std::filesystem::exists(dir / "cactus_memory_baseline.dat"));
  std::ifstream in(dir / "cactus_time_delta.dat");
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "# solved time\n1 1\n2 2\n3 3\n");
}
