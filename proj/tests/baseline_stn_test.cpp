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
#include "deltastn/rng.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace deltastn;

namespace {
const TimePointId a{0}, b{1}, c{2}, x{10}, y{11};
}

TEST_CASE("baseline: empty network") {
  BaselineSTN s = BaselineSTN::make();
  CHECK(s.check());
  CHECK(s.num_edges() == 0);
  s.add(a, b, Bound(0));
  CHECK(s.check());
}

TEST_CASE("baseline: keeps the tightest bound per pair") {
  BaselineSTN s;
  s.add(x, y, Bound(5));
  s.add(x, y, Bound(7));
  CHECK(*s.edge(x, y) == Bound(5));
  s.add(x, y, Bound(3));
  CHECK(*s.edge(x, y) == Bound(3));
  CHECK(s.num_edges() == 1);
}

TEST_CASE("baseline: consistency and shortest-path model") {
  BaselineSTN s;
  s.add(x, y, Bound(-3));
  CHECK(s.check());
  CHECK(s.model(y) == Bound(3));
  CHECK(s.model(x) == Bound(0));
  s.add(y, x, Bound(2));
  CHECK_FALSE(s.check());
  s.add(a, b, Bound(100));
  CHECK_FALSE(s.check());
  CHECK_THROWS_AS((void)s.model(x), StnError);

  BaselineSTN chain;
  chain.add(a, b, Bound(-1));
  chain.add(b, c, Bound(-1));
  CHECK(chain.check());
  CHECK(chain.model(c) == Bound(2));
  CHECK_THROWS_AS((void)chain.model(x), StnError);
}

TEST_CASE("baseline: copies are deep and independent") {
  const auto live = BaselineSTN::counters().live;
  BaselineSTN parent;
  for (std::uint32_t i = 0; i < 50; ++i) parent.add(TimePointId{i}, TimePointId{i + 1}, Bound(-1));
  CHECK(BaselineSTN::counters().live - live == 50);
  {
    BaselineSTN child = parent.copy();
    CHECK(child.num_edges() == 50);
    CHECK(BaselineSTN::counters().live - live == 100);
    child.add(TimePointId{50}, TimePointId{0}, Bound(10));
    CHECK_FALSE(child.check());
    CHECK(parent.num_edges() == 50);
    CHECK(parent.check());
    CHECK(parent.model(TimePointId{50}) == Bound(50));
  }
  CHECK(BaselineSTN::counters().live - live == 50);

  BaselineSTN bad;
  bad.add(a, b, Bound(-1));
  bad.add(b, a, Bound(0));
  REQUIRE_FALSE(bad.check());
  CHECK_FALSE(bad.copy().check());
}

TEST_CASE("baseline: move and assignment keep the edge counter exact") {
  const auto live = BaselineSTN::counters().live;
  {
    BaselineSTN s;
    s.add(a, b, Bound(1));
    s.add(b, c, Bound(1));
    BaselineSTN moved = std::move(s);
    CHECK(BaselineSTN::counters().live - live == 2);
    BaselineSTN assigned;
    assigned.add(x, y, Bound(1));
    assigned = moved;
    CHECK(BaselineSTN::counters().live - live == 4);
    assigned = BaselineSTN();
    CHECK(BaselineSTN::counters().live - live == 2);
  }
  CHECK(BaselineSTN::counters().live == live);
}

TEST_CASE("baseline: negative self loop") {
  BaselineSTN s;
  s.add(a, a, Bound(0));
  CHECK(s.check());
  s.add(a, a, Bound(-1));
  CHECK_FALSE(s.check());
}

TEST_CASE("baseline: agrees with the reference on random networks") {
  SplitMix64 rng(99);
  for (int round = 0; round < 400; ++round) {
    BaselineSTN s;
    std::vector<testing::DiffConstraint> cs;
    const int points = static_cast<int>(rng.uniform(1, 8));
    const int adds = static_cast<int>(rng.uniform(1, 20));
    for (int i = 0; i < adds; ++i) {
      const TimePointId p{static_cast<std::uint32_t>(rng.uniform(0, points - 1))};
      const TimePointId q{static_cast<std::uint32_t>(rng.uniform(0, points - 1))};
      const Bound k(rng.uniform(-6, 8), rng.uniform(1, 3));
      s.add(p, q, k);
      cs.push_back({p, q, k});
      const auto ref = testing::floyd_warshall(cs);
      REQUIRE(s.check() == ref.consistent);
      if (!ref.consistent) break;
      for (const auto& [t, v] : ref.earliest) CHECK(s.model(t) == v);
    }
  }
}
