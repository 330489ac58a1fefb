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

#ifndef DELTASTN_TIME_POINT_HPP_
#define DELTASTN_TIME_POINT_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace deltastn {

/// Dense identifier of a temporal variable. The reference point z has no id.
struct TimePointId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(TimePointId, TimePointId) = default;
};

inline std::ostream& operator<<(std::ostream& os, TimePointId t) { return os << 't' << t.value; }

}  // namespace deltastn

template <>
struct std::hash<deltastn::TimePointId> {
  std::size_t operator()(deltastn::TimePointId t) const noexcept { return t.value; }
};

#endif  // DELTASTN_TIME_POINT_HPP_
