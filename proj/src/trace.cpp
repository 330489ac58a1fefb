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

#include "deltastn/trace.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

namespace deltastn {

namespace {

constexpr std::string_view kHeader = "# deltastn trace v1";

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_digits(digits)) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string quoted(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x20 || u >= 0x7f) {
      static constexpr char kHex[] = "0123456789abcdef";
      out += "\\x";
      out += kHex[u >> 4];
      out += kHex[u & 0xf];
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

TraceError::TraceError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line),
      detail_(message) {}

OpCounts Trace::counts() const {
  OpCounts c;
  for (const TraceOp& op : ops_) {
    switch (op.index()) {
      case 0: ++c.make; break;
      case 1: ++c.copy; break;
      case 2: ++c.add; break;
      case 3: ++c.check; break;
      case 4: ++c.model; break;
      default: ++c.destroy; break;
    }
  }
  return c;
}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::optional<Bound> parse_bound(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!num || !is_digits(den_text)) return std::nullopt;
    auto den = parse_int(den_text);
    if (!den || *den == 0) return std::nullopt;
    return Bound(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_text = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    auto whole = parse_int(int_text);
    if (!whole || !is_digits(frac)) return std::nullopt;
    // 10^18 is the largest power of ten below 2^63.
    while (frac.size() > 1 && frac.back() == '0') frac.remove_suffix(1);
    if (frac.size() > 18) return std::nullopt;
    auto frac_value = parse_int(frac);
    if (!frac_value) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    try {
      Bound fraction(*frac_value, scale);
      return int_text.front() == '-' ? Bound(*whole) - fraction : Bound(*whole) + fraction;
    } catch (const BoundOverflow&) {
      return std::nullopt;
    }
  }
  auto value = parse_int(text);
  if (!value) return std::nullopt;
  return Bound(*value);
}

TraceBuilder::TraceBuilder(std::string source) { trace_.source_ = std::move(source); }

NetId TraceBuilder::intern_net(std::string_view name) {
  if (!is_valid_name(name)) throw TraceError(0, "invalid net name " + quoted(name));
  auto [it, inserted] = nets_.try_emplace(std::string(name), NetId{0});
  if (inserted) {
    it->second = NetId{static_cast<std::uint32_t>(trace_.net_names_.size())};
    trace_.net_names_.emplace_back(name);
    live_.push_back(false);
  }
  return it->second;
}

TimePointId TraceBuilder::intern_tp(std::string_view name) {
  if (!is_valid_name(name)) throw TraceError(0, "invalid time point name " + quoted(name));
  auto [it, inserted] = tps_.try_emplace(std::string(name), TimePointId{0});
  if (inserted) {
    it->second = TimePointId{static_cast<std::uint32_t>(trace_.tp_names_.size())};
    trace_.tp_names_.emplace_back(name);
  }
  return it->second;
}

NetId TraceBuilder::live_net(std::string_view name) const {
  if (!is_valid_name(name)) throw TraceError(0, "invalid net name " + quoted(name));
  auto it = nets_.find(std::string(name));
  if (it == nets_.end()) throw TraceError(0, "unknown net " + quoted(name));
  if (!live_[it->second.value]) throw TraceError(0, "net " + quoted(name) + " was destroyed");
  return it->second;
}

NetId TraceBuilder::fresh_net(std::string_view name) {
  if (!is_valid_name(name)) throw TraceError(0, "invalid net name " + quoted(name));
  auto it = nets_.find(std::string(name));
  if (it != nets_.end() && live_[it->second.value]) {
    throw TraceError(0, "net " + quoted(name) + " already exists");
  }
  NetId id = intern_net(name);
  live_[id.value] = true;
  return id;
}

NetId TraceBuilder::make(std::string_view net) {
  NetId id = fresh_net(net);
  trace_.ops_.emplace_back(MakeOp{id});
  return id;
}

NetId TraceBuilder::copy(std::string_view net, std::string_view src) {
  NetId source = live_net(src);
  NetId id = fresh_net(net);
  trace_.ops_.emplace_back(CopyOp{id, source});
  return id;
}

void TraceBuilder::add(std::string_view net, std::string_view x, std::string_view y,
                       const Bound& b) {
  NetId id = live_net(net);
  TimePointId tx = intern_tp(x);
  TimePointId ty = intern_tp(y);
  trace_.ops_.emplace_back(AddOp{id, tx, ty, b});
}

void TraceBuilder::check(std::string_view net, std::optional<bool> expected) {
  trace_.ops_.emplace_back(CheckOp{live_net(net), expected});
}

void TraceBuilder::model(std::string_view net, std::string_view x, std::optional<Bound> expected) {
  NetId id = live_net(net);
  trace_.ops_.emplace_back(ModelOp{id, intern_tp(x), expected});
}

void TraceBuilder::destroy(std::string_view net) {
  NetId id = live_net(net);
  live_[id.value] = false;
  trace_.ops_.emplace_back(DestroyOp{id});
}

Trace TraceBuilder::finish() && { return std::move(trace_); }

namespace {

void parse_line(TraceBuilder& builder, const std::vector<std::string_view>& tok) {
  const std::string_view verb = tok[0];
  auto arity = [&](std::size_t n) {
    if (tok.size() != n) {
      throw TraceError(0, "'" + std::string(verb) + "' expects " + std::to_string(n - 1) +
                              " operand(s)");
    }
  };
  auto rational = [&](std::string_view text) {
    auto b = parse_bound(text);
    if (!b) throw TraceError(0, "malformed rational " + quoted(text));
    return *b;
  };

  if (verb == "make") {
    arity(2);
    builder.make(tok[1]);
  } else if (verb == "copy") {
    arity(3);
    builder.copy(tok[1], tok[2]);
  } else if (verb == "add") {
    arity(5);
    builder.add(tok[1], tok[2], tok[3], rational(tok[4]));
  } else if (verb == "check") {
    if (tok.size() == 2) {
      builder.check(tok[1]);
      return;
    }
    if (tok.size() != 4 || tok[2] != "->") throw TraceError(0, "expected 'check NET [-> sat|unsat]'");
    if (tok[3] != "sat" && tok[3] != "unsat") {
      throw TraceError(0, "expected 'sat' or 'unsat', got " + quoted(tok[3]));
    }
    builder.check(tok[1], tok[3] == "sat");
  } else if (verb == "model") {
    if (tok.size() == 3) {
      builder.model(tok[1], tok[2]);
      return;
    }
    if (tok.size() != 5 || tok[3] != "->") throw TraceError(0, "expected 'model NET TP [-> RAT]'");
    builder.model(tok[1], tok[2], rational(tok[4]));
  } else if (verb == "destroy") {
    arity(2);
    builder.destroy(tok[1]);
  } else {
    throw TraceError(0, "unknown operation " + quoted(verb));
  }
}

}  // namespace

Trace parse_trace(std::string_view text, std::string source) {
  TraceBuilder builder(std::move(source));
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    std::vector<std::string_view> tokens = tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    try {
      parse_line(builder, tokens);
    } catch (const TraceError& e) {
      throw TraceError(line_no, e.detail());
    }
  }
  return std::move(builder).finish();
}

Trace parse_trace(std::istream& in, std::string source) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_trace(std::string_view(text), std::move(source));
}

void write_trace(const Trace& trace, std::ostream& out) {
  out << kHeader << '\n';
  for (const TraceOp& op : trace.ops()) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, MakeOp>) {
            out << "make " << trace.net_name(o.net);
          } else if constexpr (std::is_same_v<T, CopyOp>) {
            out << "copy " << trace.net_name(o.net) << ' ' << trace.net_name(o.src);
          } else if constexpr (std::is_same_v<T, AddOp>) {
            out << "add " << trace.net_name(o.net) << ' ' << trace.tp_name(o.x) << ' '
                << trace.tp_name(o.y) << ' ' << o.bound;
          } else if constexpr (std::is_same_v<T, CheckOp>) {
            out << "check " << trace.net_name(o.net);
            if (o.expected) out << " -> " << (*o.expected ? "sat" : "unsat");
          } else if constexpr (std::is_same_v<T, ModelOp>) {
            out << "model " << trace.net_name(o.net) << ' ' << trace.tp_name(o.x);
            if (o.expected) out << " -> " << *o.expected;
          } else {
            out << "destroy " << trace.net_name(o.net);
          }
        },
        op);
    out << '\n';
  }
}

std::string write_trace(const Trace& trace) {
  std::ostringstream os;
  write_trace(trace, os);
  return os.str();
}

}  // namespace deltastn
