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

#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "mldr/rational.hpp"

namespace mldr {

// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

// The ring descriptor q = p^t for a prime p.
class Modulus {
 public:
  // Largest supported order; keeps every product of two residues in 64 bits.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  // Throws Error(kNotPrimePower) when p is not prime, and
  // Error(kInvalidArgument) when t == 0 or p^t exceeds kMaxOrder.
  Modulus(std::uint64_t p, unsigned t);

  // Factors q as p^t; throws Error(kNotPrimePower) otherwise.
  static Modulus from_order(std::uint64_t q);

  std::uint64_t p() const noexcept { return p_; }
  unsigned t() const noexcept { return t_; }
  std::uint64_t q() const noexcept { return q_; }

  // p^e for 0 <= e <= t.
  std::uint64_t power(unsigned e) const;

  // Z_p, the residue field of this ring.
  Modulus residue_field() const { return Modulus(p_, 1); }

  std::string str() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t p_;
  unsigned t_;
  std::uint64_t q_;
};

// p-adic valuation reported for zero.
inline constexpr unsigned kInfiniteValuation =
    std::numeric_limits<unsigned>::max();

// An element of Z_q carrying its modulus. The value is kept in [0, q).
class Residue {
 public:
  Residue(const Modulus& m, std::uint64_t value)
      : modulus_(m), value_(value % m.q()) {}

  const Modulus& modulus() const noexcept { return modulus_; }
  std::uint64_t value() const noexcept { return value_; }

  // All binary operations throw Error(kModulusMismatch) on mixed moduli.
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const;

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % modulus_.p() != 0; }

  // Largest v with p^v | value; kInfiniteValuation for zero.
  unsigned valuation() const noexcept;

  // Multiplicative inverse; throws Error(kInvalidArgument) for non-units.
  Residue inverse() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Modulus modulus_;
  std::uint64_t value_;
};

// min(a, q - a) for a in [0, q).
inline std::uint64_t lee_weight(std::uint64_t value, std::uint64_t q) noexcept {
  return value <= q - value ? value : q - value;
}

std::uint64_t lee_weight(const Residue& a);

// M_L(q) = floor(q/2).
std::uint64_t max_lee_weight(const Modulus& m);

// Average Lee weight over the q - 1 nonzero residues:
// q^2 / (4(q-1)) for even q, (q+1)/4 for odd q.
Rational mean_nonzero_lee_weight(const Modulus& m);

// p-adic valuation of a raw value in [0, q).
unsigned valuation(std::uint64_t value, const Modulus& m) noexcept;

// Inverse of a unit modulo q (raw values).
std::uint64_t inverse_mod(std::uint64_t unit, std::uint64_t q);

}  // namespace mldr
