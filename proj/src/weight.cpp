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

#include "posgraph/weight.hpp"

#include <cctype>
#include <utility>

#include "posgraph/error.hpp"

namespace posgraph {

namespace {

void check_unit_interval(const mpq_class& v) {
  if (sgn(v) < 0 || v > 1) {
    throw DomainError("weight " + v.get_str() + " is outside [0, 1]");
  }
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Weight::Weight(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("weight with zero denominator");
  mpz_class num;
  mpz_class den;
  // mpz_class has no int64 constructor on every platform; go through strings.
  num.set_str(std::to_string(numerator), 10);
  den.set_str(std::to_string(denominator), 10);
  value_ = mpq_class(num, den);
  value_.canonicalize();
  check_unit_interval(value_);
}

Weight::Weight(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  check_unit_interval(value_);
}

Weight Weight::parse(std::string_view text) {
  const auto bad = [&] {
    return DomainError("malformed weight '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();

  mpq_class q;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) {
      throw bad();
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw bad();
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    const auto dot = text.find('.');
    const auto whole = text.substr(0, dot);
    const auto frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac) || (whole.empty() && frac.empty())) {
      throw bad();
    }
    mpz_class num(whole.empty() ? std::string("0") : std::string(whole), 10);
    mpz_class scale = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      scale *= 10;
    }
    q = mpq_class(num, scale);
  }
  q.canonicalize();
  return Weight(q);
}

Weight Weight::complement() const { return Weight(mpq_class(1 - value_)); }

Weight Weight::operator*(const Weight& other) const {
  return Weight(mpq_class(value_ * other.value_));
}

Weight Weight::operator/(const Weight& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by a zero weight");
  return Weight(mpq_class(value_ / divisor.value_));
}

std::string Weight::str() const { return value_.get_str(); }

std::string Weight::fraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Weight::decimal(int digits) const {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round(v * scale) with ties away from zero; v >= 0.
  mpz_class scaled = (value_.get_num() * scale * 2 + value_.get_den()) /
                     (value_.get_den() * 2);
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

}  // namespace posgraph
