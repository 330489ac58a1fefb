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

#ifndef DELTASTN_VERIFY_IMPL_HPP_
#define DELTASTN_VERIFY_IMPL_HPP_

// Template body of verify_lockstep; included from replay.hpp only.

#include <type_traits>

#include "deltastn/audit.hpp"

namespace deltastn {

namespace detail {

struct ModelOutcome {
  std::optional<Bound> value;
  std::optional<StnError::Code> error;

  friend bool operator==(const ModelOutcome&, const ModelOutcome&) = default;
};

template <class E>
ModelOutcome query_model(const E& net, TimePointId t) {
  try {
    return {net.model(t), std::nullopt};
  } catch (const StnError& e) {
    return {std::nullopt, e.code()};
  }
}

inline std::string describe(const ModelOutcome& m) {
  if (m.value) return m.value->to_string();
  return *m.error == StnError::Code::kNoModel ? "error(no model)" : "error(unknown time point)";
}

}  // namespace detail

template <StnEngine A, StnEngine B>
VerifyReport verify_lockstep(const Trace& trace, const VerifyOptions& options) {
  VerifyReport report;
  std::vector<std::optional<A>> left(trace.net_names().size());
  std::vector<std::optional<B>> right(trace.net_names().size());
  std::vector<std::optional<bool>> last_verdict(trace.net_names().size());

  auto diverge = [&](std::size_t op, std::string message) {
    report.ok = false;
    report.divergence_op = op;
    report.message = std::move(message);
  };

  const auto& ops = trace.ops();
  for (std::size_t i = 0; i < ops.size() && report.ok; ++i) {
    const std::size_t op_no = i + 1;
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          const std::uint32_t n = op.net.value;
          if constexpr (std::is_same_v<T, MakeOp>) {
            left[n] = A::make();
            right[n] = B::make();
            last_verdict[n].reset();
          } else if constexpr (std::is_same_v<T, CopyOp>) {
            left[n] = left[op.src.value]->copy();
            right[n] = right[op.src.value]->copy();
            // A copy continues its parent's history.
            last_verdict[n] = last_verdict[op.src.value];
          } else if constexpr (std::is_same_v<T, AddOp>) {
            left[n]->add(op.x, op.y, op.bound);
            right[n]->add(op.x, op.y, op.bound);
          } else if constexpr (std::is_same_v<T, CheckOp>) {
            const bool a = left[n]->check();
            const bool b = right[n]->check();
            ++report.checks;
            if (a != b) {
              diverge(op_no, std::string("verdicts differ: ") + (a ? "sat" : "unsat") + " vs " +
                                 (b ? "sat" : "unsat"));
              return;
            }
            if (last_verdict[n] == false && a) ++report.monotonicity_violations;
            last_verdict[n] = a;
            if (op.expected && *op.expected != a) {
              diverge(op_no, std::string("both engines report ") + (a ? "sat" : "unsat") +
                                 ", trace expects otherwise");
              return;
            }
            if (!a) return;
            ++report.consistent_checks;
            if (left[n]->num_time_points() != right[n]->num_time_points()) {
              diverge(op_no, "time point sets differ");
              return;
            }
            for (TimePointId t : right[n]->time_points()) {
              auto ma = detail::query_model(*left[n], t);
              auto mb = detail::query_model(*right[n], t);
              ++report.models_compared;
              if (!(ma.value == mb.value && ma.error == mb.error)) {
                diverge(op_no, "model of " + trace.tp_name(t) + " differs: " + detail::describe(ma) +
                                   " vs " + detail::describe(mb));
                return;
              }
            }
            if constexpr (std::is_same_v<A, DeltaSTN> && std::is_same_v<B, BaselineSTN>) {
              if (options.audit) {
                auto issues = audit_fixpoint(*left[n]);
                for (auto& s : audit_list_order(*left[n])) issues.push_back(std::move(s));
                for (auto& s : audit_model(*left[n], *right[n])) issues.push_back(std::move(s));
                report.audit_violations += issues.size();
                if (!issues.empty()) diverge(op_no, "audit: " + issues.front());
              }
            }
          } else if constexpr (std::is_same_v<T, ModelOp>) {
            auto ma = detail::query_model(*left[n], op.x);
            auto mb = detail::query_model(*right[n], op.x);
            ++report.models_compared;
            if (!(ma.value == mb.value && ma.error == mb.error)) {
              diverge(op_no, "model of " + trace.tp_name(op.x) + " differs: " + detail::describe(ma) +
                                 " vs " + detail::describe(mb));
            } else if (op.expected && ma.value != op.expected) {
              diverge(op_no, "model of " + trace.tp_name(op.x) + " is " + detail::describe(ma) +
                                 ", trace expects " + op.expected->to_string());
            }
          } else {
            left[n].reset();
            right[n].reset();
          }
        },
        ops[i]);
  }
  return report;
}

}  // namespace deltastn

#endif  // DELTASTN_VERIFY_IMPL_HPP_
