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

#include "deltastn/workload.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <vector>

#include "deltastn/baseline_stn.hpp"
#include "deltastn/rng.hpp"

namespace deltastn {

namespace {

std::string tp_name(std::uint32_t k) { return "t" + std::to_string(k); }
std::string net_name(std::uint64_t k) { return "n" + std::to_string(k); }

struct Event {
  std::uint32_t tp;
  Bound time;  // witness schedule
};

struct OpenAction {
  std::size_t start;  // index into events
  Bound duration;
};

// x - y <= bound over event indices.
struct Constraint {
  std::size_t x;
  std::size_t y;
  Bound bound;
};

struct PathState {
  std::vector<Event> events;
  std::vector<OpenAction> open;
  std::deque<Constraint> pending;
  std::vector<Constraint> history;
  std::optional<std::size_t> latest;
  BaselineSTN oracle;
};

class FctpGenerator {
 public:
  explicit FctpGenerator(const WorkloadSpec& spec) : spec_(spec), rng_(spec.seed) {}

  Trace run() {
    PathState root;
    const std::string name = fresh_net();
    builder_.make(name);
    for (int i = 0; i < spec_.root_prefix; ++i) emit_add(name, root, /*allow_contradiction=*/false);
    const bool sat = emit_check(name, root);
    if (sat && spec_.depth > 0) {
      expand(name, root, 0);
    } else if (sat) {
      emit_models(name, root);
    }
    return std::move(builder_).finish();
  }

 private:
  void expand(const std::string& parent_name, const PathState& parent, int level) {
    for (int i = 0; i < spec_.branching; ++i) {
      PathState child = parent;
      const std::string name = fresh_net();
      builder_.copy(name, parent_name);
      for (int a = 0; a < spec_.adds_per_node; ++a) emit_add(name, child, true);
      const bool sat = emit_check(name, child);
      if (sat && level + 1 < spec_.depth) {
        expand(name, child, level + 1);
      } else if (sat) {
        emit_models(name, child);
      }
      if (spec_.emit_destroy) builder_.destroy(name);
    }
  }

  std::string fresh_net() { return net_name(next_net_++); }

  bool emit_check(const std::string& name, const PathState& s) {
    const bool sat = s.oracle.check();
    builder_.check(name, sat);
    return sat;
  }

  void emit_models(const std::string& name, const PathState& s) {
    if (!spec_.model_queries || s.events.empty()) return;
    std::vector<std::size_t> picks{*s.latest};
    if (s.events.size() > 1) picks.push_back(rng_.index(s.events.size()));
    for (std::size_t e : picks) {
      const TimePointId tp = TimePointId{s.events[e].tp};
      // Events whose constraints are still pending are unknown to the net.
      if (!s.oracle.contains(tp)) continue;
      builder_.model(name, tp_name(s.events[e].tp), s.oracle.model(tp));
    }
  }

  void emit_add(const std::string& name, PathState& s, bool allow_contradiction) {
    const Constraint c = next_constraint(s, allow_contradiction);
    const std::uint32_t x = s.events[c.x].tp;
    const std::uint32_t y = s.events[c.y].tp;
    builder_.add(name, tp_name(x), tp_name(y), c.bound);
    s.oracle.add(TimePointId{x}, TimePointId{y}, c.bound);
    s.history.push_back(c);
  }

  Constraint next_constraint(PathState& s, bool allow_contradiction) {
    if (allow_contradiction && !s.history.empty() && rng_.chance(spec_.contradiction_prob)) {
      // Together with x - y <= b this closes the cycle b + (-b - 1) = -1.
      const Constraint& c = s.history[rng_.index(s.history.size())];
      return Constraint{c.y, c.x, -c.bound - Bound(1)};
    }
    // Siblings inherit the same pending queue; deferring it lets them differ.
    if (!s.pending.empty() && rng_.chance(0.7)) return pop_pending(s);
    if (!s.history.empty() && rng_.chance(spec_.redundancy_prob)) {
      Constraint c = s.history[rng_.index(s.history.size())];
      c.bound += Bound(rng_.uniform(0, 2));
      return c;
    }
    if (s.events.size() < 2 || rng_.chance(spec_.new_tp_prob)) {
      new_event(s);
      return pop_pending(s);
    }
    // Order two existing events consistently with the witness.
    std::size_t i = rng_.index(s.events.size());
    std::size_t j = rng_.index(s.events.size() - 1);
    if (j >= i) ++j;
    if (s.events[j].time < s.events[i].time) std::swap(i, j);
    const Bound slack = s.events[j].time - s.events[i].time;
    const Bound gap = quarter_of(slack, rng_.uniform(0, 4));
    return Constraint{i, j, -gap};
  }

  static Constraint pop_pending(PathState& s) {
    Constraint c = s.pending.front();
    s.pending.pop_front();
    return c;
  }

  static Bound quarter_of(const Bound& b, std::int64_t quarters) {
    if (quarters == 0) return Bound(0);
    if (quarters == 4) return b;
    // Floors to an integer or a half so bounds stay small.
    Bound q = Bound(b.numerator() * quarters, b.denominator() * 4);
    const std::int64_t halves = (2 * q.numerator()) / q.denominator();
    return Bound(halves, 2);
  }

  Bound random_span() {
    Bound v(rng_.uniform(spec_.bound_min, spec_.bound_max));
    if (rng_.chance(0.25)) v += Bound(1, 2);
    return v;
  }

  void new_event(PathState& s) {
    std::optional<std::size_t> pred;
    if (spec_.total_order) {
      pred = s.latest;
    } else if (!s.events.empty() && !rng_.chance(0.2)) {
      pred = rng_.index(s.events.size());
    }
    const Bound gap = random_span();
    const std::size_t idx = s.events.size();
    Bound time = pred ? s.events[*pred].time + gap : gap;

    const bool ends_action = !s.open.empty() && rng_.chance(0.5);
    OpenAction action{};
    if (ends_action) {
      const std::size_t k = rng_.index(s.open.size());
      action = s.open[k];
      s.open.erase(s.open.begin() + static_cast<std::ptrdiff_t>(k));
      time = std::max(time, s.events[action.start].time + action.duration);
    }

    s.events.push_back(Event{next_tp_++, time});
    if (!s.latest || s.events[*s.latest].time <= time) s.latest = idx;
    if (pred) s.pending.push_back(Constraint{*pred, idx, -gap});

    if (ends_action) {
      push_duration(s, action.start, idx, action.duration);
    } else if (pred) {
      s.open.push_back(OpenAction{idx, random_span()});
    } else {
      // An unanchored action is placed whole: its end is created right away.
      const Bound duration = random_span();
      const std::size_t end = s.events.size();
      s.events.push_back(Event{next_tp_++, time + duration});
      if (s.events[*s.latest].time <= time + duration) s.latest = end;
      push_duration(s, idx, end, duration);
    }
  }

  // end - start >= duration, and end - start <= its witness span plus slack.
  void push_duration(PathState& s, std::size_t start, std::size_t end, const Bound& duration) {
    const Bound actual = s.events[end].time - s.events[start].time;
    const Bound slack(rng_.uniform(0, spec_.bound_min));
    s.pending.push_back(Constraint{start, end, -duration});
    s.pending.push_back(Constraint{end, start, actual + slack});
  }

  const WorkloadSpec& spec_;
  SplitMix64 rng_;
  TraceBuilder builder_{"fctp"};
  std::uint64_t next_net_ = 0;
  std::uint32_t next_tp_ = 0;
};

Trace negative_cycle(const AdversarialSpec& spec) {
  SplitMix64 rng(spec.seed);
  TraceBuilder b("negcycle");
  b.make("s0");
  const int n = spec.n;
  std::vector<std::int64_t> weights;
  std::int64_t sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    weights.push_back(rng.uniform(-5, 5));
    sum += weights.back();
  }
  weights.push_back(-1 - sum);
  for (int i = 0; i < n; ++i) {
    b.add("s0", "c" + std::to_string(i), "c" + std::to_string((i + 1) % n), Bound(weights[i]));
    // Any proper subset of the cycle is a path, hence consistent.
    b.check("s0", i + 1 < n);
  }
  b.destroy("s0");
  return std::move(b).finish();
}

Trace subsumption_chain(const AdversarialSpec& spec) {
  SplitMix64 rng(spec.seed);
  TraceBuilder b("subsumption");
  b.make("s0");
  std::int64_t current = rng.uniform(-10, 10);
  std::int64_t best = current;
  for (int i = 0; i < spec.n; ++i) {
    if (i > 0) current += rng.uniform(-3, 2);
    best = std::min(best, current);
    b.add("s0", "a", "b", Bound(current));
    b.check("s0", true);
  }
  // a - b <= best: b sits at max(0, -best), a stays at 0.
  b.model("s0", "a", Bound(0));
  b.model("s0", "b", Bound(std::max<std::int64_t>(0, -best)));
  b.destroy("s0");
  return std::move(b).finish();
}

Trace deep_chain(const AdversarialSpec& spec) {
  TraceBuilder b("chain");
  b.make("s0");
  bool checked = false;
  for (int i = 0; i < spec.n; ++i) {
    b.add("s0", "c" + std::to_string(i), "c" + std::to_string(i + 1), -spec.step);
    checked = spec.check_every > 0 && (i + 1) % spec.check_every == 0;
    if (checked) b.check("s0", true);
  }
  if (!checked) b.check("s0", true);
  Bound last(0);
  for (int i = 0; i < spec.n; ++i) last += spec.step;
  b.model("s0", "c" + std::to_string(spec.n), last);
  b.destroy("s0");
  return std::move(b).finish();
}

}  // namespace

double max_trace_ops(const WorkloadSpec& spec) {
  double nodes = 0;
  double level = 1;
  for (int d = 0; d <= spec.depth; ++d) {
    nodes += level;
    level *= spec.branching;
  }
  // copy or make, adds, check, up to two models, destroy
  const double per_node = 1.0 + spec.adds_per_node + 1.0 + 2.0 + 1.0;
  return nodes * per_node + spec.root_prefix;
}

void validate(const WorkloadSpec& spec) {
  auto probability = [](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw WorkloadError(std::string(what) + " must be in [0, 1]");
  };
  if (spec.depth < 0) throw WorkloadError("depth must be >= 0");
  if (spec.branching < 1) throw WorkloadError("branching must be >= 1");
  if (spec.adds_per_node < 0) throw WorkloadError("adds_per_node must be >= 0");
  if (spec.root_prefix < 0) throw WorkloadError("root_prefix must be >= 0");
  probability(spec.new_tp_prob, "new_tp_prob");
  probability(spec.contradiction_prob, "contradiction_prob");
  probability(spec.redundancy_prob, "redundancy_prob");
  if (spec.bound_min < 0 || spec.bound_min > spec.bound_max || spec.bound_max > 1'000'000) {
    throw WorkloadError("bound range must satisfy 0 <= min <= max <= 1000000");
  }
  if (max_trace_ops(spec) > static_cast<double>(spec.max_ops)) {
    throw WorkloadError("search tree may exceed the cap of " + std::to_string(spec.max_ops) +
                        " operations");
  }
}

Trace generate(const WorkloadSpec& spec) {
  validate(spec);
  return FctpGenerator(spec).run();
}

Trace generate_adversarial(const AdversarialSpec& spec) {
  if (spec.n < 1) throw WorkloadError("n must be >= 1");
  switch (spec.kind) {
    case AdversarialKind::kNegCycle: return negative_cycle(spec);
    case AdversarialKind::kSubsumptionChain: return subsumption_chain(spec);
    case AdversarialKind::kDeepChain: return deep_chain(spec);
  }
  throw WorkloadError("unknown adversarial kind");
}

}  // namespace deltastn
