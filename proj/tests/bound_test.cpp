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

#include <limits>

#include "deltastn/bound.hpp"
#include "deltastn/rng.hpp"
#include "doctest.h"

using deltastn::Bound;
using deltastn::BoundOverflow;

TEST_CASE("bounds are kept in canonical form") {
  CHECK(Bound(2, 4) == Bound(1, 2));
  CHECK(Bound(3, -6).numerator() == -1);
  CHECK(Bound(3, -6).denominator() == 2);
  CHECK(Bound(0, -5) == Bound(0));
  CHECK(Bound(0, -5).denominator() == 1);
  CHECK_THROWS_AS(Bound(1, 0), std::invalid_argument);
}

TEST_CASE("exact addition and comparison") {
  CHECK(Bound(1, 3) + Bound(1, 6) == Bound(1, 2));
  CHECK(Bound(1, 10) + Bound(2, 10) == Bound(3, 10));
  CHECK(Bound(-3) + Bound(2) == Bound(-1));
  CHECK(Bound(1, 3) < Bound(1, 2));
  CHECK(Bound(-1, 2) < Bound(0));
  CHECK(-Bound(5, 7) == Bound(-5, 7));
  CHECK(Bound(7, 2).to_string() == "7/2");
  CHECK(Bound(-4).to_string() == "-4");
}

TEST_CASE("overflow is an error, never a wraparound") {
  const auto max = std::numeric_limits<std::int64_t>::max();
  const auto min = std::numeric_limits<std::int64_t>::min();
  CHECK_THROWS_AS(Bound(max) + Bound(1), BoundOverflow);
  CHECK_THROWS_AS(Bound(min) + Bound(-1), BoundOverflow);
  CHECK_THROWS_AS(-Bound(min), BoundOverflow);
  CHECK_THROWS_AS(Bound(1, max) + Bound(1, max - 1), BoundOverflow);
  // Large operands whose result fits are fine.
  CHECK(Bound(max - 1) + Bound(1) == Bound(max));
  CHECK(Bound(max, 2) < Bound(max, 1));
  CHECK(Bound(min) < Bound(max));
}

TEST_CASE("addition agrees with cross-multiplication on random operands") {
  deltastn::SplitMix64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t an = rng.uniform(-1000, 1000), ad = rng.uniform(1, 60);
    const std::int64_t bn = rng.uniform(-1000, 1000), bd = rng.uniform(1, 60);
    const Bound sum = Bound(an, ad) + Bound(bn, bd);
    CHECK(sum == Bound(an * bd + bn * ad, ad * bd));
    CHECK((Bound(an, ad) < Bound(bn, bd)) == (an * bd < bn * ad));
    CHECK((sum - Bound(bn, bd)) == Bound(an, ad));
  }
}
