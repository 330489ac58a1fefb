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

#include "deltastn/audit.hpp"

#include <map>
#include <sstream>


namespace deltastn {

std::vector<std::string> audit_fixpoint(const DeltaSTN& stn) {
  std::vector<std::string> out;
  if (!stn.check()) return out;
  for (TimePointId x : stn.time_points()) {
    const Bound dx = *stn.distance(x);
    for (const NeighborCell* n = stn.neighbors(x); n != nullptr; n = n->next()) {
      auto dy = stn.distance(n->dst());
      if (!dy) {
        std::ostringstream os;
        os << "cell " << x << "->" << n->dst() << " points to an unknown time point";
        out.push_back(os.str());
      } else if (dx + n->bound() < *dy) {
        std::ostringstream os;
        os << "edge " << x << "->" << n->dst() << " weight " << n->bound() << " is not relaxed";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

std::vector<std::string> audit_list_order(const DeltaSTN& stn) {
  std::vector<std::string> out;
  for (TimePointId x : stn.time_points()) {
    std::map<TimePointId, Bound> first;
    for (const NeighborCell* n = stn.neighbors(x); n != nullptr; n = n->next()) {
      auto [it, inserted] = first.try_emplace(n->dst(), n->bound());
      if (!inserted && !(it->second < n->bound())) {
        std::ostringstream os;
        os << "list of " << x << ": bound " << n->bound() << " for " << n->dst()
           << " follows " << it->second;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

std::vector<std::string> audit_model(const DeltaSTN& stn, const BaselineSTN& constraints) {
  std::vector<std::string> out;
  if (!stn.check()) return out;
  for (const auto& [key, bound] : constraints.edges()) {
    if (!stn.contains(key.first) || !stn.contains(key.second)) {
      out.push_back("constraint over a point missing from the model");
      continue;
    }
    if (stn.model(key.first) - stn.model(key.second) > bound) {
      std::ostringstream os;
      os << "model violates " << key.first << " - " << key.second << " <= " << bound;
      out.push_back(os.str());
    }
  }
  const bool baseline_sat = constraints.check();
  for (TimePointId t : stn.time_points()) {
    const Bound v = stn.model(t);
    if (v < Bound(0)) {
      std::ostringstream os;
      os << "negative model value " << v << " at " << t;
      out.push_back(os.str());
    }
    if (!baseline_sat || !constraints.contains(t)) {
      out.push_back("baseline has no model value to compare against");
      continue;
    }
    if (constraints.model(t) != v) {
      std::ostringstream os;
      os << "model " << t << " = " << v << " but shortest path gives " << constraints.model(t);
      out.push_back(os.str());
    }
  }
  return out;
}

std::size_t count_reachable_cells(const DeltaSTN& stn) {
  std::size_t n = 0;
  for (TimePointId x : stn.time_points()) {
    for (const NeighborCell* c = stn.neighbors(x); c != nullptr; c = c->next()) ++n;
  }
  return n;
}

}  // namespace deltastn
