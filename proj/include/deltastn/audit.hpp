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

#ifndef DELTASTN_AUDIT_HPP_
#define DELTASTN_AUDIT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "deltastn/baseline_stn.hpp"
#include "deltastn/delta_stn.hpp"

namespace deltastn {

// Full-scan structural checks used by tests and by `verify`. Each returns
// a description of every violation found; empty means clean.

/// distances[y] <= distances[x] + b for every recorded cell, when consistent.
std::vector<std::string> audit_fixpoint(const DeltaSTN& stn);

/// For each list and each dst, the first bound seen is strictly below every
/// later bound for that dst.
std::vector<std::string> audit_list_order(const DeltaSTN& stn);

/// The delta model satisfies every edge of `constraints`, is non-negative,
/// and equals the baseline's shortest-path value at every point.
std::vector<std::string> audit_model(const DeltaSTN& stn, const BaselineSTN& constraints);

/// Number of cells reachable from the heads of `stn`.
std::size_t count_reachable_cells(const DeltaSTN& stn);

}  // namespace deltastn

#endif  // DELTASTN_AUDIT_HPP_
