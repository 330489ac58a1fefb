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

#include "deltastn/bound.hpp"

#include <limits>
#include <numeric>

namespace deltastn {

namespace {

__extension__ typedef __int128 Wide;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den (den > 0) and narrows back to 64 bits.
Bound narrow(Wide num, Wide den) {
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax) throw BoundOverflow();
  return Bound(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Bound::Bound(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > kMax || n < kMin || d > kMax) throw BoundOverflow();
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
}

Bound operator+(const Bound& a, const Bound& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t sum;
    if (__builtin_add_overflow(a.num_, b.num_, &sum)) throw BoundOverflow();
    return Bound(sum);
  }
  if (a.den_ == b.den_) return narrow(Wide{a.num_} + b.num_, a.den_);
  // |num| < 2^127 holds here: each product is below 2^126.
  return narrow(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Bound operator-(const Bound& a, const Bound& b) { return a + (-b); }

Bound Bound::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw BoundOverflow();
  Bound r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Bound::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Bound& b) { return os << b.to_string(); }

}  // namespace deltastn
