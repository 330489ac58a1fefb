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

#ifndef DELTASTN_BOUND_HPP_
#define DELTASTN_BOUND_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace deltastn {

/// Thrown when an exact bound computation does not fit in 64 bits.
class BoundOverflow : public std::overflow_error {
 public:
  BoundOverflow() : std::overflow_error("bound arithmetic overflow") {}
};

/// An exact rational constant, always kept in canonical form: the
/// denominator is positive and coprime with the numerator.
///
/// Numerator and denominator are 64-bit; every operation is checked and
/// throws BoundOverflow instead of wrapping. Comparisons never overflow.
class Bound {
 public:
  constexpr Bound() = default;
  constexpr Bound(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  /// Builds num/den and reduces it. Throws std::invalid_argument if den == 0.
  Bound(std::int64_t num, std::int64_t den);

  [[nodiscard]] constexpr std::int64_t numerator() const { return num_; }
  [[nodiscard]] constexpr std::int64_t denominator() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  friend Bound operator+(const Bound& a, const Bound& b);
  friend Bound operator-(const Bound& a, const Bound& b);
  Bound operator-() const;
  Bound& operator+=(const Bound& other) { return *this = *this + other; }

  friend constexpr bool operator==(const Bound&, const Bound&) = default;
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Bound& b);

}  // namespace deltastn

#endif  // DELTASTN_BOUND_HPP_
