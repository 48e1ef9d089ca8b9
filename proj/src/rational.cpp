// Copyright 2026 The mldr Authors
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

#include "mldr/rational.hpp"

#include <limits>

#include "mldr/error.hpp"

namespace mldr {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  }
  if (denominator < 0) {
    value_ = Impl(-numerator, -denominator);
  } else {
    value_ = Impl(numerator, denominator);
  }
}

BigInt Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

BigInt Rational::floor() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) --quotient;
  return quotient;
}

std::int64_t Rational::floor_int64() const { return to_int64(floor()); }

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational division by zero");
  }
  return Rational(a.value_ / b.value_);
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kOverflow, "value " + value.str() +
                                          " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace mldr
