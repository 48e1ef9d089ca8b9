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

#include "mldr/code.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "mldr/error.hpp"

namespace mldr {

namespace {

using Row = std::vector<std::uint64_t>;

// row_a -= c * row_b (mod q)
void sub_multiple(Row& a, const Row& b, std::uint64_t c, std::uint64_t q) {
  c %= q;
  if (c == 0) return;
  const std::uint64_t neg = q - c;
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j] = (a[j] + neg * b[j]) % q;
  }
}

void scale(Row& a, std::uint64_t c, std::uint64_t q) {
  for (auto& x : a) x = (x * c) % q;
}

bool all_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; });
}

std::vector<Row> to_rows(const GeneratorMatrix& g) {
  std::vector<Row> rows(g.rows(), Row(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) rows[i][j] = g.value(i, j);
  }
  return rows;
}

Word to_word(const Row& r) { return Word(r.begin(), r.end()); }

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorMatrix

GeneratorMatrix::GeneratorMatrix(const Modulus& m, std::size_t rows,
                                 std::size_t cols,
                                 std::span<const std::uint64_t> entries)
    : modulus_(m), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator matrix needs at least one row and one column");
  }
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries.size()));
  }
  data_.reserve(entries.size());
  for (auto e : entries) {
    if (e >= m.q()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entry out of range: " + std::to_string(e) + " not in [0, " +
                      std::to_string(m.q()) + ")");
    }
    data_.push_back(static_cast<std::uint32_t>(e));
  }
}

namespace {

std::vector<std::uint64_t> flatten(
    std::initializer_list<std::initializer_list<std::uint64_t>> rows,
    std::size_t& cols) {
  std::vector<std::uint64_t> out;
  cols = rows.size() ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged generator rows");
    }
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<std::uint64_t> flatten(const std::vector<Word>& rows,
                                   std::size_t& cols) {
  std::vector<std::uint64_t> out;
  cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged generator rows");
    }
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(
    const Modulus& m,
    std::initializer_list<std::initializer_list<std::uint64_t>> rows)
    : modulus_(m), rows_(0), cols_(0) {
  std::size_t cols = 0;
  const auto flat = flatten(rows, cols);
  *this = GeneratorMatrix(m, rows.size(), cols, flat);
}

GeneratorMatrix::GeneratorMatrix(const Modulus& m,
                                 const std::vector<Word>& rows)
    : modulus_(m), rows_(0), cols_(0) {
  std::size_t cols = 0;
  const auto flat = flatten(rows, cols);
  *this = GeneratorMatrix(m, rows.size(), cols, flat);
}

bool GeneratorMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint32_t x) { return x == 0; });
}

std::string GeneratorMatrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      out << (j ? "," : "") << value(i, j);
    }
    out << "]";
  }
  out << "] mod " << modulus_.q();
  return out.str();
}

// ---------------------------------------------------------------------------
// RankProfile

RankProfile::RankProfile(std::vector<std::size_t> k) : k_(std::move(k)) {
  if (k_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "rank profile needs t >= 1");
  }
}

std::size_t RankProfile::rank() const {
  return std::accumulate(k_.begin(), k_.end(), std::size_t{0});
}

std::size_t RankProfile::size_exponent() const {
  std::size_t e = 0;
  const std::size_t t = k_.size();
  for (std::size_t i = 0; i < t; ++i) e += k_[i] * (t - i);
  return e;
}

Rational RankProfile::kappa() const {
  return Rational(BigInt(size_exponent()), BigInt(k_.size()));
}

std::string RankProfile::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < k_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(k_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Systematic form

SystematicForm systematic_form(const GeneratorMatrix& g) {
  const Modulus& m = g.modulus();
  const std::uint64_t q = m.q();
  const std::size_t n = g.cols();
  auto rows = to_rows(g);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<unsigned> valuations;

  std::size_t r = 0;
  while (r < rows.size() && r < n) {
    unsigned best_v = kInfiniteValuation;
    std::size_t best_row = 0;
    std::size_t best_col = 0;
    for (std::size_t c = r; c < n && best_v > 0; ++c) {
      for (std::size_t i = r; i < rows.size(); ++i) {
        const unsigned v = valuation(rows[i][c], m);
        if (v < best_v) {
          best_v = v;
          best_row = i;
          best_col = c;
        }
      }
    }
    if (best_v == kInfiniteValuation) break;

    std::swap(rows[r], rows[best_row]);
    if (best_col != r) {
      for (auto& row : rows) std::swap(row[r], row[best_col]);
      std::swap(perm[r], perm[best_col]);
    }
    const std::uint64_t pv = m.power(best_v);
    const std::uint64_t unit = (rows[r][r] / pv) % q;
    scale(rows[r], inverse_mod(unit, q), q);

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][r] == 0) continue;
      // Below: the entry is a multiple of p^v and is cleared exactly.
      // Above: the entry is reduced into [0, p^v).
      sub_multiple(rows[i], rows[r], rows[i][r] / pv, q);
    }
    valuations.push_back(best_v);
    ++r;
  }
  if (valuations.empty()) {
    throw Error(ErrorCode::kRankZero, "rank zero: generator matrix is zero");
  }
  rows.resize(valuations.size());

  std::vector<std::size_t> k(m.t(), 0);
  for (unsigned v : valuations) ++k[v];

  std::vector<std::uint64_t> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return SystematicForm{GeneratorMatrix(m, rows.size(), n, flat),
                        std::move(perm), RankProfile(std::move(k)),
                        std::move(valuations)};
}

// ---------------------------------------------------------------------------
// Howell form

std::vector<Word> howell_form(const GeneratorMatrix& g) {
  const Modulus& m = g.modulus();
  const std::uint64_t q = m.q();
  const std::size_t n = g.cols();
  std::vector<Row> pending;
  for (auto& row : to_rows(g)) {
    if (!all_zero(row)) pending.push_back(std::move(row));
  }

  std::vector<Row> result;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::uint64_t> pivot_vals;
  for (std::size_t c = 0; c < n && !pending.empty(); ++c) {
    unsigned best_v = kInfiniteValuation;
    std::size_t best = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const unsigned v = valuation(pending[i][c], m);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best_v == kInfiniteValuation) continue;

    Row pivot = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const std::uint64_t pv = m.power(best_v);
    scale(pivot, inverse_mod((pivot[c] / pv) % q, q), q);

    std::vector<Row> next;
    next.reserve(pending.size() + 1);
    for (auto& row : pending) {
      if (row[c] != 0) sub_multiple(row, pivot, row[c] / pv, q);
      if (!all_zero(row)) next.push_back(std::move(row));
    }
    // The annihilator multiple vanishes at column c and must stay in the
    // span that later columns see.
    Row annihilated = pivot;
    scale(annihilated, q / pv, q);
    if (!all_zero(annihilated)) next.push_back(std::move(annihilated));
    pending = std::move(next);

    result.push_back(std::move(pivot));
    pivot_cols.push_back(c);
    pivot_vals.push_back(pv);
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t c = pivot_cols[i];
    for (std::size_t j = 0; j < i; ++j) {
      sub_multiple(result[j], result[i], result[j][c] / pivot_vals[i], q);
    }
  }

  std::vector<Word> out;
  out.reserve(result.size());
  for (const auto& row : result) out.push_back(to_word(row));
  return out;
}

std::vector<std::uint32_t> canonical_key(const GeneratorMatrix& g) {
  const auto rows = howell_form(g);
  std::vector<std::uint32_t> key;
  key.reserve(1 + rows.size() * g.cols());
  key.push_back(static_cast<std::uint32_t>(rows.size()));
  for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
  return key;
}

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(GeneratorMatrix generators)
    : generators_(std::move(generators)),
      systematic_(systematic_form(generators_)) {
  const Modulus& m = modulus();
  const std::size_t n = length();
  const auto& s = systematic_.matrix;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    Word w(n);
    for (std::size_t j = 0; j < n; ++j) {
      w[systematic_.column_permutation[j]] = s.value(i, j);
    }
    basis_.push_back(std::move(w));
    basis_orders_.push_back(m.power(m.t() - systematic_.row_valuations[i]));
  }
  howell_ = howell_form(generators_);
  key_.push_back(static_cast<std::uint32_t>(howell_.size()));
  for (const auto& row : howell_) {
    key_.insert(key_.end(), row.begin(), row.end());
  }
}

BigInt LinearCode::cardinality() const {
  BigInt size = 1;
  for (std::size_t i = 0; i < profile().size_exponent(); ++i) {
    size *= modulus().p();
  }
  return size;
}

bool LinearCode::contains(std::span<const std::uint32_t> word) const {
  const Modulus& m = modulus();
  const std::uint64_t q = m.q();
  if (word.size() != length()) return false;
  Row w(word.begin(), word.end());
  for (auto& x : w) {
    if (x >= q) return false;
  }
  for (const auto& h : howell_) {
    const auto lead = std::find_if(h.begin(), h.end(),
                                   [](std::uint32_t x) { return x != 0; });
    const auto c = static_cast<std::size_t>(lead - h.begin());
    const std::uint64_t pv = *lead;
    if (w[c] % pv != 0) return false;
    sub_multiple(w, Row(h.begin(), h.end()), w[c] / pv, q);
  }
  return all_zero(w);
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  return a.modulus() == b.modulus() && a.length() == b.length() &&
         a.canonical_key() == b.canonical_key();
}

// ---------------------------------------------------------------------------
// Enumeration and distances

CodewordStream::CodewordStream(const LinearCode& code, std::uint64_t budget)
    : code_(&code),
      q_(code.modulus().q()),
      total_(1),
      digits_(code.basis().size(), 0),
      word_(code.length(), 0) {
  const BigInt size = code.cardinality();
  if (size > budget) {
    throw BudgetExceeded("code has " + size.str() +
                             " codewords, above the enumeration budget of " +
                             std::to_string(budget),
                         size.str());
  }
  total_ = static_cast<std::uint64_t>(size);
}

bool CodewordStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  const auto& basis = code_->basis();
  const auto& orders = code_->basis_orders();
  // Mixed-radix odometer. Adding b_i once more when digit i wraps is the
  // same as subtracting (order_i - 1) b_i, because order_i b_i = 0.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Word& b = basis[i];
    for (std::size_t j = 0; j < word_.size(); ++j) {
      std::uint64_t x = std::uint64_t{word_[j]} + b[j];
      if (x >= q_) x -= q_;
      word_[j] = static_cast<std::uint32_t>(x);
    }
    if (++digits_[i] < orders[i]) return true;
    digits_[i] = 0;
  }
  done_ = true;
  return false;
}

std::uint64_t hamming_weight(std::span<const std::uint32_t> word) {
  return static_cast<std::uint64_t>(
      std::count_if(word.begin(), word.end(),
                    [](std::uint32_t x) { return x != 0; }));
}

std::uint64_t lee_weight(std::span<const std::uint32_t> word,
                         std::uint64_t q) {
  std::uint64_t w = 0;
  for (auto x : word) w += lee_weight(std::uint64_t{x}, q);
  return w;
}

std::uint64_t min_hamming(const LinearCode& code, std::uint64_t budget) {
  std::uint64_t best = code.length();
  CodewordStream stream(code, budget);
  stream.next();  // zero
  while (stream.next()) best = std::min(best, hamming_weight(stream.current()));
  return best;
}

std::uint64_t min_lee(const LinearCode& code, std::uint64_t budget) {
  return min_lee_abandoning(code, 0, budget);
}

std::uint64_t min_lee_abandoning(const LinearCode& code,
                                 std::uint64_t abandon_below,
                                 std::uint64_t budget) {
  const std::uint64_t q = code.modulus().q();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  CodewordStream stream(code, budget);
  stream.next();
  while (stream.next()) {
    best = std::min(best, lee_weight(stream.current(), q));
    if (best < abandon_below) break;
  }
  return best;
}

LinearCode socle(const LinearCode& code) {
  const Modulus& m = code.modulus();
  const std::uint64_t q = m.q();
  std::vector<Word> rows;
  for (std::size_t i = 0; i < code.basis().size(); ++i) {
    // order p^{t-v}: multiplying by p^{t-v-1} lands in <p^{t-1}>
    const std::uint64_t factor = code.basis_orders()[i] / m.p();
    Word w = code.basis()[i];
    for (auto& x : w) x = static_cast<std::uint32_t>((x * factor) % q);
    rows.push_back(std::move(w));
  }
  return LinearCode(GeneratorMatrix(m, rows));
}

LinearCode socle_over_residue_field(const LinearCode& code) {
  const Modulus& m = code.modulus();
  const LinearCode s = socle(code);
  const std::uint64_t scale_down = m.power(m.t() - 1);
  std::vector<Word> rows;
  for (const auto& b : s.basis()) {
    Word w = b;
    for (auto& x : w) x = static_cast<std::uint32_t>(x / scale_down);
    rows.push_back(std::move(w));
  }
  return LinearCode(GeneratorMatrix(m.residue_field(), rows));
}

CodeSummary summarize(const LinearCode& code, std::uint64_t budget) {
  CodeSummary s;
  const std::uint64_t q = code.modulus().q();
  s.min_hamming = code.length();
  s.min_lee = std::numeric_limits<std::uint64_t>::max();
  CodewordStream stream(code, budget);
  stream.next();
  while (stream.next()) {
    s.min_hamming = std::min(s.min_hamming, hamming_weight(stream.current()));
    s.min_lee = std::min(s.min_lee, lee_weight(stream.current(), q));
  }
  const auto n = static_cast<std::int64_t>(code.length());
  const auto k = static_cast<std::int64_t>(code.rank());
  s.defect = n - k + 1 - static_cast<std::int64_t>(s.min_hamming);
  s.is_free = code.is_free();
  s.is_mdr = s.defect == 0;
  const LinearCode field_socle = socle_over_residue_field(code);
  s.is_mds_socle =
      static_cast<std::int64_t>(min_hamming(field_socle, budget)) == n - k + 1;
  return s;
}

std::int64_t singleton_defect(const LinearCode& code, std::uint64_t budget) {
  return static_cast<std::int64_t>(code.length()) -
         static_cast<std::int64_t>(code.rank()) + 1 -
         static_cast<std::int64_t>(min_hamming(code, budget));
}

bool is_mdr(const LinearCode& code, std::uint64_t budget) {
  return singleton_defect(code, budget) == 0;
}

bool is_mds_socle(const LinearCode& code, std::uint64_t budget) {
  const LinearCode field_socle = socle_over_residue_field(code);
  return min_hamming(field_socle, budget) ==
         code.length() - code.rank() + 1;
}

// ---------------------------------------------------------------------------
// Code files

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 18 ||
      !std::all_of(tok.begin(), tok.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  return std::stoull(tok);
}

}  // namespace

GeneratorMatrix parse_code_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::optional<Modulus> modulus;
  std::vector<std::uint64_t> entries;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!have_header) {
      if (toks.size() != 3) {
        throw ParseError(line_no, "header must be 'p t n'");
      }
      const auto p = parse_uint(toks[0], line_no);
      const auto t = parse_uint(toks[1], line_no);
      n = parse_uint(toks[2], line_no);
      if (t == 0 || t > 64) throw ParseError(line_no, "t must be in [1, 64]");
      if (n == 0) throw ParseError(line_no, "n must be positive");
      try {
        modulus.emplace(p, static_cast<unsigned>(t));
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      have_header = true;
      continue;
    }
    if (toks.size() != n) {
      throw ParseError(line_no, "expected " + std::to_string(n) +
                                    " entries, found " +
                                    std::to_string(toks.size()));
    }
    for (const auto& tok : toks) {
      const auto v = parse_uint(tok, line_no);
      if (v >= modulus->q()) {
        throw ParseError(line_no, "entry out of range: " + tok +
                                      " not in [0, " +
                                      std::to_string(modulus->q()) + ")");
      }
      entries.push_back(v);
    }
    ++rows;
  }
  if (!have_header) throw ParseError(line_no, "missing header 'p t n'");
  if (rows == 0) throw ParseError(line_no, "no generator rows");
  return GeneratorMatrix(*modulus, rows, n, entries);
}

GeneratorMatrix load_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_file(buf.str());
}

std::string format_code_file(const GeneratorMatrix& g) {
  std::ostringstream out;
  out << g.modulus().p() << ' ' << g.modulus().t() << ' ' << g.cols() << '\n';
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      out << (j ? " " : "") << g.value(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mldr
