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

#include "deltastn/baseline_stn.hpp"

#include <algorithm>

namespace deltastn {

namespace {

thread_local EdgeCounters edge_counters;

}  // namespace

BaselineSTN::BaselineSTN(const BaselineSTN& other)
    : edges_(other.edges_),
      time_points_(other.time_points_),
      is_sat_cache_(other.is_sat_cache_),
      distances_(other.distances_) {
  edge_counters.live += static_cast<std::int64_t>(edges_.size());
}

BaselineSTN::BaselineSTN(BaselineSTN&& other) noexcept
    : edges_(std::move(other.edges_)),
      time_points_(std::move(other.time_points_)),
      is_sat_cache_(other.is_sat_cache_),
      distances_(std::move(other.distances_)) {
  other.edges_.clear();
}

BaselineSTN& BaselineSTN::operator=(const BaselineSTN& other) {
  if (this != &other) {
    BaselineSTN tmp(other);
    *this = std::move(tmp);
  }
  return *this;
}

BaselineSTN& BaselineSTN::operator=(BaselineSTN&& other) noexcept {
  if (this != &other) {
    edge_counters.live -= static_cast<std::int64_t>(edges_.size());
    edges_ = std::move(other.edges_);
    other.edges_.clear();
    time_points_ = std::move(other.time_points_);
    is_sat_cache_ = other.is_sat_cache_;
    distances_ = std::move(other.distances_);
  }
  return *this;
}

BaselineSTN::~BaselineSTN() { edge_counters.live -= static_cast<std::int64_t>(edges_.size()); }

const EdgeCounters& BaselineSTN::counters() { return edge_counters; }

void BaselineSTN::add(TimePointId x, TimePointId y, const Bound& b) {
  time_points_.insert(x);
  time_points_.insert(y);
  auto [it, inserted] = edges_.try_emplace({x, y}, b);
  if (inserted) {
    ++edge_counters.live;
  } else if (b < it->second) {
    it->second = b;
  } else {
    return;
  }
  if (is_sat_cache_ != false) is_sat_cache_.reset();
}

std::optional<Bound> BaselineSTN::edge(TimePointId x, TimePointId y) const {
  auto it = edges_.find({x, y});
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

bool BaselineSTN::check() const {
  if (!is_sat_cache_) run_bellman_ford();
  return *is_sat_cache_;
}

Bound BaselineSTN::model(TimePointId x) const {
  if (!check()) throw StnError(StnError::Code::kNoModel);
  auto it = distances_.find(x);
  if (it == distances_.end()) throw StnError(StnError::Code::kUnknownTimePoint);
  return -it->second;
}

void BaselineSTN::run_bellman_ford() const {
  // Dense indices over the sorted point set; the virtual source reaching
  // every point with weight 0 is folded into the all-zero start.
  const std::vector<TimePointId> points(time_points_.begin(), time_points_.end());
  auto index_of = [&](TimePointId t) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), t) -
                                    points.begin());
  };
  struct Arc {
    std::size_t src;
    std::size_t dst;
    Bound weight;
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges_.size());
  for (const auto& [key, bound] : edges_) {
    arcs.push_back(Arc{index_of(key.first), index_of(key.second), bound});
  }

  std::vector<Bound> dist(points.size(), Bound(0));
  bool changed = true;
  for (std::size_t round = 0; round + 1 < points.size() && changed; ++round) {
    changed = false;
    for (const Arc& a : arcs) {
      Bound relaxed = dist[a.src] + a.weight;
      if (relaxed < dist[a.dst]) {
        dist[a.dst] = relaxed;
        changed = true;
      }
    }
  }

  bool consistent = true;
  if (changed) {
    for (const Arc& a : arcs) {
      if (dist[a.src] + a.weight < dist[a.dst]) {
        consistent = false;
        break;
      }
    }
  }

  is_sat_cache_ = consistent;
  distances_.clear();
  if (consistent) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      distances_.emplace_hint(distances_.end(), points[i], dist[i]);
    }
  }
}

}  // namespace deltastn
