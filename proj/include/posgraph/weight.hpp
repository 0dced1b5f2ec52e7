// Copyright 2026 The posgraph Authors
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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace posgraph {

/// An exact rational degree in [0, 1]: certainty weights, possibility
/// levels and conditional possibilities all use this type. Every operation
/// is exact; construction outside [0, 1] throws DomainError.
class Weight {
 public:
  Weight() = default;  // zero
  Weight(std::int64_t numerator, std::int64_t denominator);
  explicit Weight(mpq_class value);

  static Weight zero() { return Weight(); }
  static Weight one() { return Weight(1, 1); }

  /// Parses `p/q`, an integer, or a decimal such as `.4` or `0.75`.
  /// Decimals become exact fractions (".4" is 2/5).
  static Weight parse(std::string_view text);

  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Weight complement() const;  // 1 - w
  Weight operator*(const Weight& other) const;
  /// Exact quotient; the result must stay in [0, 1] (i.e. this <= divisor).
  Weight operator/(const Weight& divisor) const;

  /// Canonical `p/q` text; integers print bare ("0", "1").
  std::string str() const;
  /// Always `p/q`, including "0/1" and "1/1"; used by the file formats.
  std::string fraction() const;
  /// Decimal rendering rounded half-up to `digits` fractional digits.
  std::string decimal(int digits = 6) const;

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

inline const Weight& min(const Weight& a, const Weight& b) {
  return b < a ? b : a;
}
inline const Weight& max(const Weight& a, const Weight& b) {
  return a < b ? b : a;
}

}  // namespace posgraph
