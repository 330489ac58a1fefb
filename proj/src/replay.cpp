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

#include "deltastn/replay.hpp"

namespace deltastn {

std::string_view engine_name(EngineKind kind) {
  return kind == EngineKind::kDelta ? "delta" : "baseline";
}

std::string_view status_name(RunStatus status) {
  switch (status) {
    case RunStatus::kOk: return "ok";
    case RunStatus::kTimeout: return "timeout";
    case RunStatus::kMemout: return "memout";
    case RunStatus::kDivergence: return "divergence";
    case RunStatus::kParseError: return "parse_error";
  }
  return "unknown";
}

RunResult replay(const Trace& trace, EngineKind engine, const ReplayLimits& limits) {
  return engine == EngineKind::kDelta ? replay<DeltaSTN>(trace, limits)
                                      : replay<BaselineSTN>(trace, limits);
}

VerifyReport verify(const Trace& trace, const VerifyOptions& options) {
  return verify_lockstep<DeltaSTN, BaselineSTN>(trace, options);
}

}  // namespace deltastn
