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

#include <doctest.h>

#include "mldr/error.hpp"
#include "mldr/rational.hpp"
#include "mldr/ring.hpp"
#include "oracle.hpp"

using namespace mldr;

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(BigInt(16), BigInt(12));
  CHECK(a.numerator() == 4);
  CHECK(a.denominator() == 3);
  CHECK(a.str() == "4/3");
  CHECK((a + Rational(BigInt(2), BigInt(3))).str() == "2");
  CHECK((a * Rational(3)).is_integer());
  CHECK((a / Rational(4)).str() == "1/3");
  CHECK(Rational(BigInt(3), BigInt(-6)).str() == "-1/2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rational floor is exact for both signs") {
  CHECK(Rational(BigInt(16), BigInt(3)).floor() == 5);
  CHECK(Rational(BigInt(-16), BigInt(3)).floor() == -6);
  CHECK(Rational(BigInt(-6), BigInt(3)).floor() == -2);
  CHECK(Rational(7).floor_int64() == 7);
  const BigInt huge = BigInt(1) << 80;
  CHECK_THROWS_AS(Rational(huge).floor_int64(), Error);
}

TEST_CASE("rational ordering") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("modulus validation") {
  CHECK(Modulus(3, 2).q() == 9);
  CHECK(Modulus::from_order(125).p() == 5);
  CHECK(Modulus::from_order(125).t() == 3);
  CHECK_THROWS_AS(Modulus(4, 1), Error);
  CHECK_THROWS_AS(Modulus(2, 0), Error);
  CHECK_THROWS_AS(Modulus::from_order(6), Error);
  CHECK_THROWS_AS(Modulus::from_order(1), Error);
  try {
    Modulus::from_order(12);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPrimePower);
  }
}

TEST_CASE("lee weight examples") {
  CHECK(lee_weight(3, 7) == 3);
  CHECK(lee_weight(0, 9) == 0);
  CHECK(lee_weight(3, 4) == 1);
  CHECK(lee_weight(Residue(Modulus(7, 1), 10)) == 3);
}

TEST_CASE("max and mean Lee weight") {
  CHECK(max_lee_weight(Modulus(2, 2)) == 2);
  CHECK(max_lee_weight(Modulus(7, 1)) == 3);
  CHECK(max_lee_weight(Modulus(3, 2)) == 4);
  CHECK(mean_nonzero_lee_weight(Modulus(2, 2)).str() == "4/3");
  CHECK(mean_nonzero_lee_weight(Modulus(5, 1)).str() == "3/2");
  CHECK(mean_nonzero_lee_weight(Modulus(37, 1)).str() == "19/2");
}

TEST_CASE("mean Lee weight matches summation for every q <= 64") {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    Modulus m(2, 1);
    try {
      m = Modulus::from_order(q);
    } catch (const Error&) {
      continue;
    }
    const auto [num, den] = oracle::mu(q);
    CAPTURE(q);
    CHECK(mean_nonzero_lee_weight(m) == Rational(BigInt(num), BigInt(den)));
    std::uint64_t largest = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
      largest = std::max(largest, oracle::lee(a, q));
      CHECK(lee_weight(a, q) == oracle::lee(a, q));
    }
    CHECK(max_lee_weight(m) == largest);
  }
}

TEST_CASE("residue operations") {
  const Modulus z4(2, 2);
  CHECK((Residue(z4, 3) + Residue(z4, 3)).value() == 2);
  CHECK((-Residue(z4, 1)).value() == 3);
  CHECK((Residue(z4, 3) * Residue(z4, 3)).value() == 1);
  CHECK_FALSE(Residue(z4, 2).is_unit());
  CHECK(Residue(z4, 3).is_unit());
  CHECK(Residue(Modulus(3, 2), 6).valuation() == 1);
  CHECK(Residue(z4, 0).valuation() == kInfiniteValuation);
  CHECK(Residue(Modulus(3, 2), 7).inverse().value() == 4);
  CHECK_THROWS_AS(Residue(z4, 2).inverse(), Error);
  try {
    (void)(Residue(z4, 1) + Residue(Modulus(2, 3), 1));
    FAIL("expected a modulus mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kModulusMismatch);
  }
}

TEST_CASE("property: lee weight symmetric and subadditive for q <= 64") {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    for (std::uint64_t a = 0; a < q; ++a) {
      REQUIRE(lee_weight(a, q) == lee_weight((q - a) % q, q));
      for (std::uint64_t b = 0; b < q; ++b) {
        REQUIRE(lee_weight((a + b) % q, q) <=
                lee_weight(a, q) + lee_weight(b, q));
      }
    }
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
