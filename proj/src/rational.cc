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

#include "argagree/rational.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "argagree/error.h"

namespace argagree {

std::string ToString(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::string ToDecimal(const Rational& value, int digits) {
  using boost::multiprecision::cpp_int;
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value.numerator() < 0;
  const cpp_int num = boost::multiprecision::abs(cpp_int(value.numerator()));
  const cpp_int den = value.denominator();
  const cpp_int scaled = (2 * num * scale + den) / (2 * den);
  const cpp_int whole = scaled / scale;
  cpp_int frac = scaled % scale;

  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string tail(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
      tail[static_cast<std::size_t>(i)] =
          static_cast<char>('0' + static_cast<int>(frac % 10));
      frac /= 10;
    }
    out += "." + tail;
  }
  return out;
}

double ToDouble(const Rational& value) {
  return static_cast<double>(value.numerator()) /
         static_cast<double>(value.denominator());
}

Degree::Degree(Rational value) : value_(value) {
  if (value_ < 0 || value_ > 1) {
    throw DomainError("degree.range",
                      "degree " + ToString(value_) + " outside [0,1]");
  }
}

Degree AbsDifference(const Degree& a, const Degree& b) {
  const Rational diff = a.value() - b.value();
  return Degree(diff < 0 ? -diff : diff);
}

}  // namespace argagree
