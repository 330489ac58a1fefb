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

#ifndef DELTASTN_BASELINE_STN_HPP_
#define DELTASTN_BASELINE_STN_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "deltastn/bound.hpp"
#include "deltastn/stn_error.hpp"
#include "deltastn/time_point.hpp"

namespace deltastn {

/// Per-thread count of edges held by live BaselineSTN instances.
struct EdgeCounters {
  std::int64_t live = 0;
};

/// Non-incremental reference network: every copy duplicates all edges and
/// every check after a mutation reruns Bellman-Ford from scratch.
///
/// Edges are kept in an ordered map keyed by (src, dst) of the inverted
/// distance graph, holding the tightest bound ever added for that pair.
class BaselineSTN {
 public:
  BaselineSTN() = default;
  BaselineSTN(const BaselineSTN& other);
  BaselineSTN(BaselineSTN&& other) noexcept;
  BaselineSTN& operator=(const BaselineSTN& other);
  BaselineSTN& operator=(BaselineSTN&& other) noexcept;
  ~BaselineSTN();

  [[nodiscard]] static BaselineSTN make() { return BaselineSTN(); }
  [[nodiscard]] BaselineSTN copy() const { return *this; }

  void add(TimePointId x, TimePointId y, const Bound& b);
  [[nodiscard]] bool check() const;
  /// Throws StnError when x is unknown or the network is inconsistent.
  [[nodiscard]] Bound model(TimePointId x) const;

  [[nodiscard]] std::size_t num_time_points() const { return time_points_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  [[nodiscard]] bool contains(TimePointId x) const { return time_points_.count(x) != 0; }
  [[nodiscard]] std::vector<TimePointId> time_points() const {
    return {time_points_.begin(), time_points_.end()};
  }
  /// Tightest recorded bound of x - y, if any.
  [[nodiscard]] std::optional<Bound> edge(TimePointId x, TimePointId y) const;
  [[nodiscard]] const std::map<std::pair<TimePointId, TimePointId>, Bound>& edges() const {
    return edges_;
  }

  static const EdgeCounters& counters();

 private:
  void run_bellman_ford() const;

  std::map<std::pair<TimePointId, TimePointId>, Bound> edges_;
  std::set<TimePointId> time_points_;
  mutable std::optional<bool> is_sat_cache_ = true;
  mutable std::map<TimePointId, Bound> distances_;
};

}  // namespace deltastn

#endif  // DELTASTN_BASELINE_STN_HPP_
