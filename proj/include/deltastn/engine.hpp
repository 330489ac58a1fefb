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

#ifndef DELTASTN_ENGINE_HPP_
#define DELTASTN_ENGINE_HPP_

#include <concepts>
#include <cstddef>
#include <string_view>

#include "deltastn/baseline_stn.hpp"
#include "deltastn/bound.hpp"
#include "deltastn/delta_stn.hpp"
#include "deltastn/time_point.hpp"

namespace deltastn {

/// The five-operation interface a forward-chaining planner needs.
template <class E>
concept StnEngine = std::movable<E> && requires(E e, const E ce, TimePointId t, Bound b) {
  { E::make() } -> std::same_as<E>;
  { ce.copy() } -> std::same_as<E>;
  e.add(t, t, b);
  { ce.check() } -> std::convertible_to<bool>;
  { ce.model(t) } -> std::same_as<Bound>;
  { ce.num_time_points() } -> std::convertible_to<std::size_t>;
};

static_assert(StnEngine<DeltaSTN>);
static_assert(StnEngine<BaselineSTN>);

enum class EngineKind { kDelta, kBaseline };

[[nodiscard]] std::string_view engine_name(EngineKind kind);

}  // namespace deltastn

#endif  // DELTASTN_ENGINE_HPP_
