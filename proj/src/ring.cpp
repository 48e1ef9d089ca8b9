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

#include "mldr/ring.hpp"

#include "mldr/error.hpp"

namespace mldr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p, unsigned t) : p_(p), t_(t), q_(1) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(p) + " is not a prime");
  }
  if (t == 0) {
    throw Error(ErrorCode::kInvalidArgument, "exponent t must be at least 1");
  }
  for (unsigned i = 0; i < t; ++i) {
    if (q_ > kMaxOrder / p) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modulus " + std::to_string(p) + "^" + std::to_string(t) +
                      " is too large");
    }
    q_ *= p;
  }
}

Modulus Modulus::from_order(std::uint64_t q) {
  if (q < 2) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return Modulus(q, 1);
  unsigned t = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++t;
  }
  if (rest != 1) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  return Modulus(p, t);
}

std::uint64_t Modulus::power(unsigned e) const {
  if (e > t_) {
    throw Error(ErrorCode::kInvalidArgument, "exponent exceeds t");
  }
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p_;
  return r;
}

std::string Modulus::str() const {
  if (t_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(t_);
}

namespace {

void require_same(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) {
    throw Error(ErrorCode::kModulusMismatch,
                "residues over Z_" + std::to_string(a.modulus().q()) +
                    " and Z_" + std::to_string(b.modulus().q()));
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.modulus(), a.value() + b.value());
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.modulus(), a.value() + a.modulus().q() - b.value());
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.modulus(), a.value() * b.value());
}

Residue Residue::operator-() const {
  return Residue(modulus_, modulus_.q() - value_);
}

unsigned Residue::valuation() const noexcept {
  return mldr::valuation(value_, modulus_);
}

Residue Residue::inverse() const {
  return Residue(modulus_, inverse_mod(value_, modulus_.q()));
}

std::uint64_t lee_weight(const Residue& a) {
  return lee_weight(a.value(), a.modulus().q());
}

std::uint64_t max_lee_weight(const Modulus& m) { return m.q() / 2; }

Rational mean_nonzero_lee_weight(const Modulus& m) {
  const BigInt q = m.q();
  if (m.q() % 2 == 0) return Rational(q * q, 4 * (q - 1));
  return Rational(q + 1, 4);
}

unsigned valuation(std::uint64_t value, const Modulus& m) noexcept {
  if (value == 0) return kInfiniteValuation;
  unsigned v = 0;
  while (value % m.p() == 0) {
    value /= m.p();
    ++v;
  }
  return v;
}

std::uint64_t inverse_mod(std::uint64_t unit, std::uint64_t q) {
  // Extended Euclid on signed 64-bit values; q < 2^31 so nothing overflows.
  std::int64_t old_r = static_cast<std::int64_t>(unit % q);
  std::int64_t r = static_cast<std::int64_t>(q);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(unit) + " is not a unit modulo " +
                    std::to_string(q));
  }
  const auto sq = static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(((old_s % sq) + sq) % sq);
}

}  // namespace mldr
