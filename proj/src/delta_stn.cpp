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

#include "deltastn/delta_stn.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace deltastn {

namespace {

thread_local CellCounters cell_counters;

}  // namespace

NeighborCell::NeighborCell(TimePointId dst, Bound bound, NeighborList next)
    : dst_(dst), bound_(bound), next_(std::move(next)) {
  ++cell_counters.allocated;
}

NeighborCell::~NeighborCell() {
  ++cell_counters.released;
  // Releasing a long uniquely-owned tail recursively could exhaust the stack.
  NeighborList tail = std::move(next_);
  while (tail && tail.use_count() == 1) {
    NeighborList rest = std::move(const_cast<NeighborCell&>(*tail).next_);
    tail = std::move(rest);
  }
}

const CellCounters& NeighborCell::counters() { return cell_counters; }

std::size_t DeltaSTN::find(TimePointId x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, TimePointId id) { return e.id < id; });
  if (it == entries_.end() || it->id != x) return npos;
  return static_cast<std::size_t>(it - entries_.begin());
}

std::size_t DeltaSTN::ensure(TimePointId x) {
  if (entries_.empty() || entries_.back().id < x) {
    entries_.push_back(Entry{x, Bound(0), nullptr});
    return entries_.size() - 1;
  }
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, TimePointId id) { return e.id < id; });
  if (it == entries_.end() || it->id != x) it = entries_.insert(it, Entry{x, Bound(0), nullptr});
  return static_cast<std::size_t>(it - entries_.begin());
}

void DeltaSTN::add(TimePointId x, TimePointId y, const Bound& b) {
  if (!is_sat_) return;
  ensure(x);
  ensure(y);
  // x - x <= b holds trivially for b >= 0.
  if (x == y && b >= Bound(0)) return;
  if (is_subsumed(x, y, b)) return;

  const std::size_t px = find(x);
  const std::size_t py = find(y);
  auto cell = std::make_shared<const NeighborCell>(y, b, entries_[px].head);
  const NeighborCell* added = cell.get();
  entries_[px].head = std::move(cell);
  is_sat_ = inc_check(px, py, b, added);
}

bool DeltaSTN::is_subsumed(TimePointId x, TimePointId y, const Bound& b) const {
  for (const NeighborCell* n = neighbors(x); n != nullptr; n = n->next()) {
    if (n->dst() == y) return n->bound() <= b;
  }
  return false;
}

bool DeltaSTN::inc_check(std::size_t x, std::size_t y, const Bound& b,
                         const NeighborCell* added) {
  Bound candidate = entries_[x].distance + b;
  if (!(candidate < entries_[y].distance)) return true;
  entries_[y].distance = candidate;

  std::deque<std::size_t> queue;
  queue.push_back(y);
  entries_[y].queued = true;
  auto clear_queue = [&] {
    for (std::size_t i : queue) entries_[i].queued = false;
  };

  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    entries_[c].queued = false;
    const Bound base = entries_[c].distance;
    for (const NeighborCell* n = entries_[c].head.get(); n != nullptr; n = n->next()) {
      Bound relaxed = base + n->bound();
      const std::size_t d = find(n->dst());
      if (relaxed < entries_[d].distance) {
        // The new edge improving again closes a negative cycle through it.
        if (n == added) {
          clear_queue();
          return false;
        }
        entries_[d].distance = relaxed;
        if (!entries_[d].queued) {
          entries_[d].queued = true;
          queue.push_back(d);
        }
      }
    }
  }
  return true;
}

Bound DeltaSTN::model(TimePointId x) const {
  if (!is_sat_) throw StnError(StnError::Code::kNoModel);
  const std::size_t i = find(x);
  if (i == npos) throw StnError(StnError::Code::kUnknownTimePoint);
  return -entries_[i].distance;
}

std::vector<TimePointId> DeltaSTN::time_points() const {
  std::vector<TimePointId> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.id);
  return out;
}

const NeighborCell* DeltaSTN::neighbors(TimePointId x) const {
  const std::size_t i = find(x);
  return i == npos ? nullptr : entries_[i].head.get();
}

std::optional<Bound> DeltaSTN::distance(TimePointId x) const {
  const std::size_t i = find(x);
  if (i == npos) return std::nullopt;
  return entries_[i].distance;
}

}  // namespace deltastn
