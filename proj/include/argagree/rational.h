// Copyright 2026 The argagree Authors
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

#ifndef ARGAGREE_RATIONAL_H_
#define ARGAGREE_RATIONAL_H_

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace argagree {

// Always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

// "n/d", or "n" when the denominator is 1.
std::string ToString(const Rational& value);

// Fixed-point rendering with `digits` decimals, rounded half away from zero.
std::string ToDecimal(const Rational& value, int digits);

double ToDouble(const Rational& value);

// A rational confined to [0,1].
class Degree {
 public:
  constexpr Degree() = default;
  explicit Degree(Rational value);
  Degree(std::int64_t numerator, std::int64_t denominator)
      : Degree(Rational(numerator, denominator)) {}

  static Degree Zero() { return Degree(); }
  static Degree One() { return Degree(Rational(1)); }

  const Rational& value() const { return value_; }
  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend bool operator<(const Degree& a, const Degree& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

 private:
  Rational value_{0};
};

inline std::string ToString(const Degree& d) { return ToString(d.value()); }

// |a - b|
Degree AbsDifference(const Degree& a, const Degree& b);

}  // namespace argagree

#endif  // ARGAGREE_RATIONAL_H_
