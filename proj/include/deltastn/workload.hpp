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

#ifndef DELTASTN_WORKLOAD_HPP_
#define DELTASTN_WORKLOAD_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "deltastn/bound.hpp"
#include "deltastn/trace.hpp"

namespace deltastn {

class WorkloadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape of a generated forward-chaining search trace.
///
/// The search tree has `branching` children per expanded node down to
/// `depth`. Each child is a copy of its parent followed by `adds_per_node`
/// constraints and a check; only consistent children are expanded. Events
/// are starts and ends of durative actions placed on a hidden witness
/// schedule, so every constraint except a deliberate contradiction is
/// satisfiable.
struct WorkloadSpec {
  std::uint64_t seed = 1;
  int depth = 3;
  int branching = 2;
  int adds_per_node = 2;
  /// Chance that an add introduces a new event instead of ordering old ones.
  double new_tp_prob = 0.5;
  /// Chance that an add negates an earlier constraint of the same path.
  double contradiction_prob = 0.0;
  /// Chance that an add repeats an earlier constraint, possibly weakened.
  double redundancy_prob = 0.1;
  /// Range for durations and separations.
  std::int64_t bound_min = 1;
  std::int64_t bound_max = 10;
  /// Every new event follows the latest one (total order) instead of a
  /// random earlier one (partial order).
  bool total_order = false;
  /// Constraints added to the root before its first check.
  int root_prefix = 0;
  /// Destroy each network once its subtree is exhausted. Without this every
  /// network stays alive, as in a best-first open list.
  bool emit_destroy = true;
  /// Emit model queries at consistent leaves.
  bool model_queries = true;
  std::size_t max_ops = 1'000'000;
};

/// Throws WorkloadError for out-of-range fields or when the tree could
/// exceed `max_ops`.
void validate(const WorkloadSpec& spec);

/// Upper bound on the number of operations `generate(spec)` emits.
[[nodiscard]] double max_trace_ops(const WorkloadSpec& spec);

/// Deterministic in `spec`. Check and model expectations come from a
/// baseline engine run alongside generation.
[[nodiscard]] Trace generate(const WorkloadSpec& spec);

enum class AdversarialKind {
  /// A cycle of n constraints summing to -1; only the final check is unsat.
  kNegCycle,
  /// n constraints on one pair whose bounds wander up and down.
  kSubsumptionChain,
  /// A path of n precedences with separation `step`; model(last) = n * step.
  kDeepChain,
};

struct AdversarialSpec {
  AdversarialKind kind = AdversarialKind::kNegCycle;
  int n = 1;
  std::uint64_t seed = 1;
  Bound step = Bound(1);
  /// Deep chain only: check every this many adds; 0 checks once at the end.
  int check_every = 0;
};

[[nodiscard]] Trace generate_adversarial(const AdversarialSpec& spec);

}  // namespace deltastn

#endif  // DELTASTN_WORKLOAD_HPP_
