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

#include <sstream>

#include "deltastn/trace.hpp"
#include "deltastn/workload.hpp"
#include "doctest.h"

using namespace deltastn;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    (void)parse_trace(text);
  } catch (const TraceError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse: basic operations") {
  const Trace t = parse_trace("make s0\nadd s0 a b -3\ncheck s0 -> sat");
  REQUIRE(t.size() == 3);
  const auto& add = std::get<AddOp>(t.ops()[1]);
  CHECK(add.bound == Bound(-3));
  CHECK(t.tp_name(add.x) == "a");
  CHECK(t.tp_name(add.y) == "b");
  CHECK(std::get<CheckOp>(t.ops()[2]).expected == true);
  CHECK(t.counts() == OpCounts{1, 0, 1, 1, 0, 0});
}

TEST_CASE("parse: every operation form") {
  const Trace t = parse_trace(
      "# header\n"
      "\n"
      "make s0\r\n"
      "  copy   s1\ts0\n"
      "add s1 x y 7/3\n"
      "check s1\n"
      "check s1 -> unsat\n"
      "model s1 y\n"
      "model s1 y -> -5/2\n"
      "destroy s0\n"
      "make s0\n");
  CHECK(t.counts() == OpCounts{2, 1, 1, 2, 2, 1});
  CHECK(std::get<CopyOp>(t.ops()[1]).src == NetId{0});
  CHECK(std::get<AddOp>(t.ops()[2]).bound == Bound(7, 3));
  CHECK_FALSE(std::get<CheckOp>(t.ops()[3]).expected.has_value());
  CHECK(std::get<CheckOp>(t.ops()[4]).expected == false);
  CHECK(std::get<ModelOp>(t.ops()[6]).expected == Bound(-5, 2));
  CHECK(t.net_names().size() == 2);
}

TEST_CASE("parse: rationals are exact") {
  CHECK(parse_bound("0.5") == Bound(1, 2));
  CHECK(parse_bound("0.1") == Bound(1, 10));
  CHECK(parse_bound("-0.25") == Bound(-1, 4));
  CHECK(parse_bound("-2.50") == Bound(-5, 2));
  CHECK(parse_bound("12") == Bound(12));
  CHECK(parse_bound("-4/6") == Bound(-2, 3));
  CHECK(parse_bound("3.000") == Bound(3));
  for (const char* bad : {"", "-", "1/0", "1/-2", "1.", ".5", "1.2.3", "1/2/3", "+1", "0x10",
                          "1e5", "99999999999999999999", "1.0000000000000000001"}) {
    CHECK_MESSAGE(!parse_bound(bad).has_value(), bad);
  }
  const Trace t = parse_trace("make s0\nadd s0 a b 0.5\n");
  CHECK(std::get<AddOp>(t.ops()[1]).bound == Bound(1, 2));
}

TEST_CASE("parse: errors carry the line number") {
  CHECK(error_line("copy s1 s9") == 1);
  CHECK(error_line("make s0\n\n# c\nadd s0 a b 1/0\n") == 4);
  CHECK(error_line("make s0\ndestroy s0\ncheck s0\n") == 3);
  CHECK(error_line("make s0\nmake s0\n") == 2);
  CHECK(error_line("make s0\nfrobnicate s0\n") == 2);
  CHECK(error_line("make s0\nadd s0 a b\n") == 2);
  CHECK(error_line("make s0\ncheck s0 -> maybe\n") == 2);
  CHECK(error_line("make s0\ncheck s0 sat\n") == 2);
  CHECK(error_line("make s0\nmodel s0 a ->\n") == 2);
  CHECK(error_line("make s$0\n") == 1);
  CHECK(error_line("make s0\nadd s0 a b x\n") == 2);
  try {
    (void)parse_trace("make s0\ncopy s1 nope\n");
  } catch (const TraceError& e) {
    CHECK(std::string(e.what()) == "line 2: unknown net 'nope'");
  }
}

TEST_CASE("write: canonical text") {
  TraceBuilder b;
  b.make("s0");
  b.add("s0", "a", "b", Bound(1, 2));
  b.check("s0", true);
  b.model("s0", "b", Bound(0));
  b.destroy("s0");
  const Trace t = std::move(b).finish();
  CHECK(write_trace(t) ==
        "# deltastn trace v1\nmake s0\nadd s0 a b 1/2\ncheck s0 -> sat\nmodel s0 b -> 0\n"
        "destroy s0\n");
  CHECK(write_trace(Trace{}) == "# deltastn trace v1\n");
  CHECK(parse_trace(write_trace(Trace{})) == Trace{});
}

TEST_CASE("round trip on generated traces") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    WorkloadSpec spec;
    spec.seed = seed;
    spec.depth = 3;
    spec.branching = 2;
    spec.contradiction_prob = 0.2;
    spec.total_order = seed % 2 == 0;
    const Trace t = generate(spec);
    const std::string text = write_trace(t);
    const Trace back = parse_trace(text);
    CHECK(back == t);
    CHECK(write_trace(back) == text);
  }
}

TEST_CASE("names follow the identifier rule") {
  CHECK(is_valid_name("a-b.c_9"));
  CHECK_FALSE(is_valid_name(""));
  CHECK_FALSE(is_valid_name("a b"));
  CHECK_FALSE(is_valid_name("x#"));
  TraceBuilder b;
  CHECK_THROWS_AS(b.make("bad name"), TraceError);
}
