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

#ifndef DELTASTN_REPLAY_HPP_
#define DELTASTN_REPLAY_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "deltastn/engine.hpp"
#include "deltastn/trace.hpp"

namespace deltastn {

enum class RunStatus { kOk, kTimeout, kMemout, kDivergence, kParseError };

[[nodiscard]] std::string_view status_name(RunStatus status);

struct ReplayLimits {
  double time_limit_s = 60.0;
  /// Logical memory units (cells or edges plus map entries). One unit is
  /// roughly 50 bytes, so the default is about 1 GB.
  std::uint64_t memory_limit = 20'000'000;
};

struct RunResult {
  std::string instance;
  EngineKind engine = EngineKind::kDelta;
  double wall_time_s = 0.0;
  std::size_t ops_executed = 0;
  std::size_t checks = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  /// Peak live neighbor cells (delta) or edges (baseline) created by the run.
  std::uint64_t peak_cells = 0;
  /// Peak time point entries summed over live networks.
  std::uint64_t peak_entries = 0;
  /// Peak of cells plus entries.
  std::uint64_t peak_logical = 0;
  std::optional<std::uint64_t> peak_rss_bytes;
  RunStatus status = RunStatus::kOk;
  /// 1-based index of the operation that failed, if any.
  std::optional<std::size_t> failed_op;
  std::string detail;
};

/// Per-thread live count of the structure an engine allocates per constraint.
template <class E>
std::int64_t live_constraint_units();

template <>
inline std::int64_t live_constraint_units<DeltaSTN>() {
  return static_cast<std::int64_t>(NeighborCell::counters().live());
}

template <>
inline std::int64_t live_constraint_units<BaselineSTN>() {
  return BaselineSTN::counters().live;
}

template <class E>
constexpr EngineKind engine_kind() {
  return std::is_same_v<E, DeltaSTN> ? EngineKind::kDelta : EngineKind::kBaseline;
}

/// Executes every operation against fresh engine instances, validating
/// inline expectations. Limits are enforced between operations.
template <StnEngine E>
RunResult replay(const Trace& trace, const ReplayLimits& limits = {}) {
  using Clock = std::chrono::steady_clock;
  RunResult r;
  r.instance = trace.source();
  r.engine = engine_kind<E>();

  const std::int64_t units_at_start = live_constraint_units<E>();
  std::uint64_t entries = 0;
  std::vector<std::optional<E>> nets(trace.net_names().size());

  auto fail = [&](RunStatus status, std::size_t op, std::string detail) {
    r.status = status;
    r.failed_op = op;
    r.detail = std::move(detail);
  };

  const auto start = Clock::now();
  const auto& ops = trace.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (std::chrono::duration<double>(Clock::now() - start).count() > limits.time_limit_s) {
      fail(RunStatus::kTimeout, i + 1, "time limit exceeded");
      break;
    }
    std::string error;
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, MakeOp>) {
            nets[op.net.value] = E::make();
          } else if constexpr (std::is_same_v<T, CopyOp>) {
            nets[op.net.value] = nets[op.src.value]->copy();
            entries += nets[op.net.value]->num_time_points();
          } else if constexpr (std::is_same_v<T, AddOp>) {
            E& net = *nets[op.net.value];
            const std::size_t before = net.num_time_points();
            net.add(op.x, op.y, op.bound);
            entries += net.num_time_points() - before;
          } else if constexpr (std::is_same_v<T, CheckOp>) {
            const bool sat = nets[op.net.value]->check();
            ++r.checks;
            ++(sat ? r.sat : r.unsat);
            if (op.expected && *op.expected != sat) {
              error = std::string("check expected ") + (*op.expected ? "sat" : "unsat") +
                      " but got " + (sat ? "sat" : "unsat");
            }
          } else if constexpr (std::is_same_v<T, ModelOp>) {
            try {
              const Bound v = nets[op.net.value]->model(op.x);
              if (op.expected && *op.expected != v) {
                error = "model of " + trace.tp_name(op.x) + " expected " +
                        op.expected->to_string() + " but got " + v.to_string();
              }
            } catch (const StnError& e) {
              error = "model of " + trace.tp_name(op.x) + ": " + e.what();
            }
          } else {
            entries -= nets[op.net.value]->num_time_points();
            nets[op.net.value].reset();
          }
        },
        ops[i]);
    r.ops_executed = i + 1;
    if (!error.empty()) {
      fail(RunStatus::kDivergence, i + 1, error);
      break;
    }
    const auto cells = static_cast<std::uint64_t>(live_constraint_units<E>() - units_at_start);
    r.peak_cells = std::max(r.peak_cells, cells);
    r.peak_entries = std::max(r.peak_entries, entries);
    r.peak_logical = std::max(r.peak_logical, cells + entries);
    if (cells + entries > limits.memory_limit) {
      fail(RunStatus::kMemout, i + 1, "memory limit exceeded");
      break;
    }
  }
  r.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

[[nodiscard]] RunResult replay(const Trace& trace, EngineKind engine, const ReplayLimits& limits = {});

/// Outcome of running two engines in lockstep over one trace.
struct VerifyReport {
  bool ok = true;
  std::optional<std::size_t> divergence_op;
  std::string message;
  std::size_t checks = 0;
  std::size_t consistent_checks = 0;
  std::size_t models_compared = 0;
  /// Instances whose check results went false -> true.
  std::size_t monotonicity_violations = 0;
  /// Structural audit failures (delta vs baseline only).
  std::size_t audit_violations = 0;
};

struct VerifyOptions {
  /// At every consistent check, audit the fixpoint, list ordering, model
  /// soundness and minimality of the delta engine.
  bool audit = true;
};

/// Replays `trace` on engines A and B side by side and stops at the first
/// disagreement in a verdict, a model value, an engine error or an inline
/// expectation. When consistent, every known point's model is compared.
template <StnEngine A, StnEngine B>
VerifyReport verify_lockstep(const Trace& trace, const VerifyOptions& options = {});

[[nodiscard]] VerifyReport verify(const Trace& trace, const VerifyOptions& options = {});

}  // namespace deltastn

#include "deltastn/verify_impl.hpp"

#endif  // DELTASTN_REPLAY_HPP_
