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

#include <set>

#include "mldr/code.hpp"
#include "mldr/error.hpp"
#include "oracle.hpp"

using namespace mldr;

namespace {

oracle::Span words_of(const LinearCode& c) {
  oracle::Span s;
  for_each_codeword(c, [&](std::span<const std::uint32_t> w) {
    s.insert(oracle::Vec(w.begin(), w.end()));
  });
  return s;
}

std::vector<oracle::Vec> rows_of(const GeneratorMatrix& g) {
  std::vector<oracle::Vec> out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out.emplace_back(g.row(r).begin(), g.row(r).end());
  }
  return out;
}

}  // namespace

TEST_CASE("rank profile of a mixed code over Z_4") {
  const LinearCode c(GeneratorMatrix(Modulus(2, 2), {{2, 0}, {0, 1}}));
  CHECK(c.profile().k() == std::vector<std::size_t>{1, 1});
  CHECK(c.rank() == 2);
  CHECK(c.free_rank() == 1);
  CHECK(c.kappa().str() == "3/2");
  CHECK(c.cardinality() == 8);
  CHECK_FALSE(c.is_free());
}

TEST_CASE("dependent rows collapse") {
  const LinearCode c(GeneratorMatrix(Modulus(2, 2), {{1, 1}, {2, 2}}));
  CHECK(c.profile().k() == std::vector<std::size_t>{1, 0});
  CHECK(c.is_free());
  CHECK(c.cardinality() == 4);
}

TEST_CASE("zero generator is rejected") {
  try {
    LinearCode c(GeneratorMatrix(Modulus(3, 1), {{0, 0, 0}}));
    FAIL("expected rank-zero error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRankZero);
  }
  CHECK_THROWS_AS(GeneratorMatrix(Modulus(3, 1), {{0, 3}}), Error);
  CHECK_THROWS_AS(GeneratorMatrix(Modulus(3, 1), {{0, 1}, {1}}), Error);
}

TEST_CASE("distances agree with the brute-force span") {
  const std::vector<GeneratorMatrix> gens = {
      GeneratorMatrix(Modulus(5, 1), {{0, 1, 2, 2, 1}, {2, 1, 4, 1, 4}}),
      GeneratorMatrix(Modulus(2, 3), {{1, 3, 2}, {0, 4, 4}}),
      GeneratorMatrix(Modulus(3, 2), {{3, 6, 1}, {0, 3, 3}}),
      GeneratorMatrix(Modulus(3, 1), {{1, 0, 1}, {0, 1, 1}}),
  };
  for (const auto& g : gens) {
    CAPTURE(g.str());
    const LinearCode c(g);
    const auto q = g.modulus().q();
    const auto ref = oracle::span(rows_of(g), q, g.cols());
    CHECK(words_of(c) == ref);
    CHECK(c.cardinality() == ref.size());
    CHECK(min_lee(c) == oracle::min_lee(ref, q));
    CHECK(min_hamming(c) == oracle::min_hamming(ref));
    CHECK(c.rank() == oracle::rank(ref, g.modulus().p(), q));
  }
}

TEST_CASE("worked example over Z_5") {
  const LinearCode c(
      GeneratorMatrix(Modulus(5, 1), {{0, 1, 2, 2, 1}, {2, 1, 4, 1, 4}}));
  const auto s = summarize(c);
  CHECK(s.min_hamming == 4);
  CHECK(s.min_lee == 5);
  CHECK(s.defect == 0);
  CHECK(s.is_mdr);
  CHECK(s.is_mds_socle);
}

TEST_CASE("defect of a degenerate code") {
  const LinearCode c(GeneratorMatrix(Modulus(5, 1), {{1, 1, 0}, {0, 0, 1}}));
  CHECK(singleton_defect(c) == 1);
  CHECK_FALSE(is_mdr(c));
}

TEST_CASE("systematic identity-plus-ones code over Z_3") {
  const LinearCode c(
      GeneratorMatrix(Modulus(3, 1), {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
  CHECK(min_lee(c) == 2);
  CHECK(min_hamming(c) == 2);
}

TEST_CASE("socle keeps length, rank and Hamming distance") {
  const LinearCode c(GeneratorMatrix(Modulus(2, 2), {{1, 1, 1}, {0, 2, 0}}));
  const LinearCode s = socle(c);
  CHECK(s.length() == 3);
  CHECK(s.rank() == c.rank());
  CHECK(min_hamming(s) == min_hamming(c));
  for_each_codeword(s, [&](std::span<const std::uint32_t> w) {
    for (auto x : w) CHECK(x % 2 == 0);
    CHECK(c.contains(w));
  });
  const LinearCode r = socle_over_residue_field(c);
  CHECK(r.modulus() == Modulus(2, 1));
  CHECK(r.rank() == 2);
  CHECK(min_hamming(r) == min_hamming(c));
}

TEST_CASE("systematic form valuations follow the profile") {
  const GeneratorMatrix g(Modulus(2, 3), {{2, 4, 6, 2}, {4, 0, 4, 4}, {1, 1, 1, 1}});
  const LinearCode c(g);
  const auto& sf = c.systematic();
  CHECK(std::is_sorted(sf.row_valuations.begin(), sf.row_valuations.end()));
  std::vector<std::size_t> counts(3, 0);
  for (auto v : sf.row_valuations) ++counts.at(v);
  CHECK(counts == c.profile().k());
  const LinearCode again(sf.matrix);
  std::vector<std::size_t> perm = sf.column_permutation;
  CHECK(perm.size() == 4);
  CHECK(again.cardinality() == c.cardinality());
}

TEST_CASE("canonical key identifies codes") {
  const Modulus z4(2, 2);
  const LinearCode a(GeneratorMatrix(z4, {{1, 1, 0}, {0, 2, 2}}));
  const LinearCode b(GeneratorMatrix(z4, {{1, 3, 2}, {3, 3, 0}, {0, 2, 2}}));
  const LinearCode c(GeneratorMatrix(z4, {{1, 1, 0}, {0, 0, 2}}));
  CHECK(words_of(a) == words_of(b));
  CHECK(same_code(a, b));
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK_FALSE(same_code(a, c));
}

TEST_CASE("property: canonical key equality matches codeword sets") {
  // All codes of length 2 over Z_4 generated by at most two rows.
  const Modulus z4(2, 2);
  const auto codes = oracle::all_codes(2, 4, 2, 2);
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto& [s, K] : codes) {
    std::vector<oracle::Vec> rows(s.begin(), s.end());
    const LinearCode c(GeneratorMatrix(z4, rows));
    CHECK(words_of(c) == s);
    CHECK(c.rank() == K);
    keys.insert(c.canonical_key());
  }
  CHECK(keys.size() == codes.size());
}

TEST_CASE("codeword stream honours the budget") {
  const LinearCode c(GeneratorMatrix(Modulus(3, 1), {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
  CHECK_THROWS_AS(CodewordStream(c, 26), BudgetExceeded);
  CodewordStream s(c, 27);
  std::uint64_t n = 0;
  while (s.next()) ++n;
  CHECK(n == 27);
  CHECK(s.total() == 27);
}

TEST_CASE("code file round trip and errors") {
  const GeneratorMatrix g(Modulus(2, 3), {{1, 3, 2}, {0, 4, 4}});
  const std::string text = format_code_file(g);
  CHECK(parse_code_file(text) == g);
  CHECK_THROWS_AS(parse_code_file("6 1 2\n1 2\n"), Error);
  try {
    parse_code_file("5 1 2\n1 2\n1 x\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
