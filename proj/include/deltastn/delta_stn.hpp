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

#ifndef DELTASTN_DELTA_STN_HPP_
#define DELTASTN_DELTA_STN_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "deltastn/bound.hpp"
#include "deltastn/stn_error.hpp"
#include "deltastn/time_point.hpp"

namespace deltastn {

class NeighborCell;
using NeighborList = std::shared_ptr<const NeighborCell>;

/// Per-thread allocation accounting for neighbor cells. Counts are bumped
/// by the thread that constructs or destroys a cell.
struct CellCounters {
  std::uint64_t allocated = 0;
  std::uint64_t released = 0;

  [[nodiscard]] std::uint64_t live() const { return allocated - released; }
};

/// One immutable node of a persistent neighbor list. A cell <dst, bound>
/// stored under time point x records the constraint x - dst <= bound.
class NeighborCell {
 public:
  NeighborCell(TimePointId dst, Bound bound, NeighborList next);
  ~NeighborCell();

  NeighborCell(const NeighborCell&) = delete;
  NeighborCell& operator=(const NeighborCell&) = delete;

  [[nodiscard]] TimePointId dst() const { return dst_; }
  [[nodiscard]] const Bound& bound() const { return bound_; }
  [[nodiscard]] const NeighborCell* next() const { return next_.get(); }

  static const CellCounters& counters();

 private:
  TimePointId dst_;
  Bound bound_;
  // Only touched by the destructor, which unlinks long tails iteratively.
  NeighborList next_;
};

/// Incremental simple temporal network with structurally shared constraints.
///
/// Copies share every neighbor list with their source and own a private
/// copy of the distance table, so copying costs O(#time points) and never
/// duplicates constraints. Constraints cannot be retracted; once the network
/// becomes inconsistent it stays inconsistent and further adds are ignored.
///
/// Distances are kept on the inverted distance graph from the implicit zero
/// point: every known point starts at 0 and distances only decrease. While
/// consistent the table is a shortest-path fixpoint, and -distance is the
/// earliest-time (minimal makespan) model.
///
/// A single instance is not safe for concurrent mutation. Distinct instances
/// sharing lists may be used from different threads.
class DeltaSTN {
 public:
  /// Empty network, vacuously consistent.
  DeltaSTN() = default;

  [[nodiscard]] static DeltaSTN make() { return DeltaSTN(); }
  /// Shallow-copies the constraint heads and deep-copies distances.
  [[nodiscard]] DeltaSTN copy() const { return *this; }

  /// Records x - y <= b and propagates it incrementally.
  void add(TimePointId x, TimePointId y, const Bound& b);

  [[nodiscard]] bool check() const { return is_sat_; }

  /// Earliest consistent time of x. Throws StnError when x is unknown or
  /// the network is inconsistent.
  [[nodiscard]] Bound model(TimePointId x) const;

  /// True iff a constraint x - y <= b' with b' <= b is already recorded.
  /// Stops at the first cell for y: lists keep stricter bounds first.
  [[nodiscard]] bool is_subsumed(TimePointId x, TimePointId y, const Bound& b) const;

  [[nodiscard]] std::size_t num_time_points() const { return entries_.size(); }
  [[nodiscard]] bool contains(TimePointId x) const { return find(x) != npos; }
  [[nodiscard]] std::vector<TimePointId> time_points() const;
  /// Head of the neighbor list of x, or nullptr if x is unknown or has none.
  [[nodiscard]] const NeighborCell* neighbors(TimePointId x) const;
  [[nodiscard]] std::optional<Bound> distance(TimePointId x) const;

 private:
  struct Entry {
    TimePointId id;
    Bound distance;
    NeighborList head;
    bool queued = false;
  };

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[nodiscard]] std::size_t find(TimePointId x) const;
  std::size_t ensure(TimePointId x);
  bool inc_check(std::size_t x, std::size_t y, const Bound& b, const NeighborCell* added);

  // Sorted by id; one entry per known time point (constraints + distances).
  std::vector<Entry> entries_;
  bool is_sat_ = true;
};

}  // namespace deltastn

#endif  // DELTASTN_DELTA_STN_HPP_
