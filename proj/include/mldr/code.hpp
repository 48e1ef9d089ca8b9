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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mldr/rational.hpp"
#include "mldr/ring.hpp"

namespace mldr {

// A vector of Z_q^n, entries in [0, q).
using Word = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultCodewordBudget = 10'000'000;

class GeneratorMatrix {
 public:
  // Throws Error(kInvalidArgument) on empty shape, size mismatch or an entry
  // outside [0, q).
  GeneratorMatrix(const Modulus& m, std::size_t rows, std::size_t cols,
                  std::span<const std::uint64_t> entries);
  GeneratorMatrix(const Modulus& m,
                  std::initializer_list<std::initializer_list<std::uint64_t>>
                      rows);
  GeneratorMatrix(const Modulus& m, const std::vector<Word>& rows);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t value(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Residue at(std::size_t r, std::size_t c) const {
    return Residue(modulus_, value(r, c));
  }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<std::uint32_t>& data() const noexcept { return data_; }

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const GeneratorMatrix&,
                         const GeneratorMatrix&) = default;

 private:
  Modulus modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// (k_1, ..., k_t): the code is isomorphic to the product of
// (Z_{p^{t-i+1}})^{k_i}.
class RankProfile {
 public:
  explicit RankProfile(std::vector<std::size_t> k);

  const std::vector<std::size_t>& k() const noexcept { return k_; }
  unsigned t() const noexcept { return static_cast<unsigned>(k_.size()); }

  std::size_t rank() const;
  std::size_t free_rank() const { return k_.front(); }
  // log_p |C| = sum_i k_i (t - i + 1).
  std::size_t size_exponent() const;
  // log_{p^t} |C| = size_exponent / t.
  Rational kappa() const;

  std::string str() const;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  std::vector<std::size_t> k_;
};

// Block upper-triangular generator: the rows of level i carry p^{i-1} on
// their own pivot column, zero on the pivots of earlier levels and
// multiples of p^{i-1} elsewhere. Column j of `matrix` is column
// column_permutation[j] of the input.
struct SystematicForm {
  GeneratorMatrix matrix;
  std::vector<std::size_t> column_permutation;
  RankProfile profile;
  // p-adic valuation of each row's pivot (nondecreasing).
  std::vector<unsigned> row_valuations;
};

// Pivot rule: at each step take the entry of least valuation in the
// remaining submatrix, ties to the leftmost column and then the lowest row.
// Throws Error(kRankZero) for the zero matrix.
SystematicForm systematic_form(const GeneratorMatrix& g);

// Canonical generator of the row span (Howell form): echelon rows with
// pivots p^v, entries above a pivot reduced below it, and closed under
// annihilators so that every span element with leading zeros is a
// combination of the rows starting at or after its leading column.
// Returns an empty vector for the zero module.
std::vector<Word> howell_form(const GeneratorMatrix& g);

// Flattened Howell form prefixed by its row count.
std::vector<std::uint32_t> canonical_key(const GeneratorMatrix& g);

class LinearCode {
 public:
  // Throws Error(kRankZero) when the generators span the zero module.
  explicit LinearCode(GeneratorMatrix generators);

  const Modulus& modulus() const noexcept { return generators_.modulus(); }
  std::size_t length() const noexcept { return generators_.cols(); }
  const GeneratorMatrix& generators() const noexcept { return generators_; }
  const SystematicForm& systematic() const noexcept { return systematic_; }
  const RankProfile& profile() const noexcept { return systematic_.profile; }

  std::size_t rank() const { return profile().rank(); }
  std::size_t free_rank() const { return profile().free_rank(); }
  Rational kappa() const { return profile().kappa(); }
  bool is_free() const { return rank() == free_rank(); }
  // |C| = p^{size_exponent}.
  BigInt cardinality() const;

  // Independent generators in the original coordinates together with their
  // additive orders p^{t-v}; every codeword is a unique combination
  // sum a_i b_i with 0 <= a_i < order_i.
  const std::vector<Word>& basis() const noexcept { return basis_; }
  const std::vector<std::uint64_t>& basis_orders() const noexcept {
    return basis_orders_;
  }

  // Flattened Howell form; equal keys iff equal codes (same modulus/length).
  const std::vector<std::uint32_t>& canonical_key() const noexcept {
    return key_;
  }

  bool contains(std::span<const std::uint32_t> word) const;

 private:
  GeneratorMatrix generators_;
  SystematicForm systematic_;
  std::vector<Word> basis_;
  std::vector<std::uint64_t> basis_orders_;
  std::vector<Word> howell_;
  std::vector<std::uint32_t> key_;
};

bool same_code(const LinearCode& a, const LinearCode& b);

// Visits every codeword exactly once, zero first. Throws BudgetExceeded
// when |C| exceeds the budget.
class CodewordStream {
 public:
  explicit CodewordStream(const LinearCode& code,
                          std::uint64_t budget = kDefaultCodewordBudget);

  // Advances to the next codeword; false once all |C| have been produced.
  bool next();
  std::span<const std::uint32_t> current() const noexcept { return word_; }
  std::uint64_t total() const noexcept { return total_; }

 private:
  const LinearCode* code_;
  std::uint64_t q_;
  std::uint64_t total_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::uint64_t> digits_;
  Word word_;
};

template <class Visitor>
void for_each_codeword(const LinearCode& code, Visitor&& visit,
                       std::uint64_t budget = kDefaultCodewordBudget) {
  CodewordStream stream(code, budget);
  while (stream.next()) visit(stream.current());
}

std::uint64_t hamming_weight(std::span<const std::uint32_t> word);
std::uint64_t lee_weight(std::span<const std::uint32_t> word, std::uint64_t q);

std::uint64_t min_hamming(const LinearCode& code,
                          std::uint64_t budget = kDefaultCodewordBudget);
std::uint64_t min_lee(const LinearCode& code,
                      std::uint64_t budget = kDefaultCodewordBudget);

// Minimum Lee weight, abandoning the scan as soon as a nonzero codeword of
// weight below `abandon_below` turns up (the returned value is then that
// weight, which is still an upper bound on the true minimum).
std::uint64_t min_lee_abandoning(const LinearCode& code,
                                 std::uint64_t abandon_below,
                                 std::uint64_t budget = kDefaultCodewordBudget);

// S(C) = C ∩ <p^{t-1}>^n, as a code over Z_{p^t}.
LinearCode socle(const LinearCode& code);
// The socle with every entry divided by p^{t-1}, as a code over Z_p.
LinearCode socle_over_residue_field(const LinearCode& code);

struct CodeSummary {
  std::uint64_t min_hamming = 0;
  std::uint64_t min_lee = 0;
  // n - K + 1 - d_H
  std::int64_t defect = 0;
  bool is_free = false;
  bool is_mds_socle = false;
  bool is_mdr = false;
};

CodeSummary summarize(const LinearCode& code,
                      std::uint64_t budget = kDefaultCodewordBudget);

std::int64_t singleton_defect(const LinearCode& code,
                              std::uint64_t budget = kDefaultCodewordBudget);
bool is_mdr(const LinearCode& code,
            std::uint64_t budget = kDefaultCodewordBudget);
bool is_mds_socle(const LinearCode& code,
                  std::uint64_t budget = kDefaultCodewordBudget);
inline bool is_free(const LinearCode& code) { return code.is_free(); }

// Code file: first line "p t n", then one generator row per line with n
// integers in [0, p^t). Blank lines and lines starting with '#' are
// skipped. Throws ParseError with the offending line number.
GeneratorMatrix parse_code_file(std::string_view text);
GeneratorMatrix load_code_file(const std::string& path);
std::string format_code_file(const GeneratorMatrix& g);

}  // namespace mldr
