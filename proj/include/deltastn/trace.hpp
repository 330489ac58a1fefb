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

#ifndef DELTASTN_TRACE_HPP_
#define DELTASTN_TRACE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "deltastn/bound.hpp"
#include "deltastn/time_point.hpp"

namespace deltastn {

/// Dense identifier of a network name in a trace.
struct NetId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(NetId, NetId) = default;
};

struct MakeOp {
  NetId net;
  friend bool operator==(const MakeOp&, const MakeOp&) = default;
};
struct CopyOp {
  NetId net;
  NetId src;
  friend bool operator==(const CopyOp&, const CopyOp&) = default;
};
struct AddOp {
  NetId net;
  TimePointId x;
  TimePointId y;
  Bound bound;
  friend bool operator==(const AddOp&, const AddOp&) = default;
};
struct CheckOp {
  NetId net;
  std::optional<bool> expected;
  friend bool operator==(const CheckOp&, const CheckOp&) = default;
};
struct ModelOp {
  NetId net;
  TimePointId x;
  std::optional<Bound> expected;
  friend bool operator==(const ModelOp&, const ModelOp&) = default;
};
struct DestroyOp {
  NetId net;
  friend bool operator==(const DestroyOp&, const DestroyOp&) = default;
};

using TraceOp = std::variant<MakeOp, CopyOp, AddOp, CheckOp, ModelOp, DestroyOp>;

/// Malformed trace text or an invalid operation sequence. `line()` is the
/// 1-based input line, or 0 when the error did not come from text.
class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t line, const std::string& message);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

struct OpCounts {
  std::size_t make = 0;
  std::size_t copy = 0;
  std::size_t add = 0;
  std::size_t check = 0;
  std::size_t model = 0;
  std::size_t destroy = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// A validated operation sequence with interned net and time point names.
/// Ids are dense and assigned in order of first appearance.
class Trace {
 public:
  [[nodiscard]] const std::vector<TraceOp>& ops() const { return ops_; }
  [[nodiscard]] std::size_t size() const { return ops_.size(); }
  [[nodiscard]] const std::vector<std::string>& net_names() const { return net_names_; }
  [[nodiscard]] const std::vector<std::string>& tp_names() const { return tp_names_; }
  [[nodiscard]] const std::string& net_name(NetId id) const { return net_names_.at(id.value); }
  [[nodiscard]] const std::string& tp_name(TimePointId id) const { return tp_names_.at(id.value); }
  [[nodiscard]] const std::string& source() const { return source_; }
  void set_source(std::string source) { source_ = std::move(source); }
  [[nodiscard]] OpCounts counts() const;

  /// Structural equality: operations and name tables. The source is metadata.
  friend bool operator==(const Trace& a, const Trace& b) {
    return a.ops_ == b.ops_ && a.net_names_ == b.net_names_ && a.tp_names_ == b.tp_names_;
  }

 private:
  friend class TraceBuilder;

  std::vector<TraceOp> ops_;
  std::vector<std::string> net_names_;
  std::vector<std::string> tp_names_;
  std::string source_;
};

/// Appends operations by name, interning and validating as it goes. Every
/// method throws TraceError (line 0) on an invalid name or a reference to a
/// net that is not live.
class TraceBuilder {
 public:
  explicit TraceBuilder(std::string source = {});

  NetId make(std::string_view net);
  NetId copy(std::string_view net, std::string_view src);
  void add(std::string_view net, std::string_view x, std::string_view y, const Bound& b);
  void check(std::string_view net, std::optional<bool> expected = std::nullopt);
  void model(std::string_view net, std::string_view x, std::optional<Bound> expected = std::nullopt);
  void destroy(std::string_view net);

  [[nodiscard]] std::size_t size() const { return trace_.ops_.size(); }
  [[nodiscard]] Trace finish() &&;

 private:
  NetId intern_net(std::string_view name);
  TimePointId intern_tp(std::string_view name);
  NetId live_net(std::string_view name) const;
  NetId fresh_net(std::string_view name);

  Trace trace_;
  std::unordered_map<std::string, NetId> nets_;
  std::unordered_map<std::string, TimePointId> tps_;
  std::vector<bool> live_;
};

/// True iff `name` matches [A-Za-z0-9_.-]+.
[[nodiscard]] bool is_valid_name(std::string_view name);

/// Parses INT, INT.DIGITS, or INT/POSINT into an exact bound. Returns
/// nullopt on malformed text, a zero denominator, or out-of-range values.
[[nodiscard]] std::optional<Bound> parse_bound(std::string_view text);

[[nodiscard]] Trace parse_trace(std::string_view text, std::string source = {});
[[nodiscard]] Trace parse_trace(std::istream& in, std::string source = {});

void write_trace(const Trace& trace, std::ostream& out);
[[nodiscard]] std::string write_trace(const Trace& trace);

}  // namespace deltastn

#endif  // DELTASTN_TRACE_HPP_
