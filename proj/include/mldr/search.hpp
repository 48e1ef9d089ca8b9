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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mldr/bounds.hpp"
#include "mldr/code.hpp"

namespace mldr {

struct SearchBudget {
  // Largest |C| that is enumerated when measuring a single code.
  std::uint64_t codeword_budget = 1'000'000;
  // Largest number of distinct codes an enumeration may produce.
  std::uint64_t total_code_budget = 10'000'000;
  unsigned workers = 1;
};

struct SweepSpec {
  std::size_t n;
  std::size_t K;
  Modulus m;
  SearchBudget budget;
};

// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p);

struct EnumerationStats {
  std::uint64_t codes = 0;
  // Generator matrices built before deduplication.
  std::uint64_t candidates = 0;
};

// Calls `visit` once for every distinct rank-K submodule of (Z_{p^t})^n.
// Over Z_p the codes are the reduced row-echelon matrices, one per pivot
// set and free-entry assignment, and their count is checked against the
// Gaussian binomial. Over Z_{p^t}, t > 1, systematic-form generators are
// built for every rank profile and pivot placement and deduplicated by
// canonical key. Throws BudgetExceeded, whose progress() names the last
// pivot placement reached, once the code budget would be exceeded.
EnumerationStats enumerate_codes(
    const SweepSpec& spec, const std::function<void(const LinearCode&)>& visit);

std::vector<LinearCode> collect_codes(const SweepSpec& spec);

enum class PhiVerdict {
  kExact,
  // Budget ran out; phi is the best minimum Lee distance seen, a lower
  // bound on the true value.
  kLowerBound,
};

struct PhiRecord {
  RankParams params;
  PhiVerdict verdict;
  std::uint64_t phi = 0;
  // A code attaining phi; ties go to the least canonical key.
  std::optional<LinearCode> witness;
  std::uint64_t codes_examined = 0;
  std::string note;
};

// Phi(n, K, p^t) by exhaustive search. Deterministic for any worker count.
PhiRecord phi_oracle(const RankParams& params, const SearchBudget& budget = {});

enum class MldrVerdict { kProven, kByBound, kNotMldr, kUnknown };

std::string_view verdict_name(MldrVerdict v);

struct Certificate {
  MldrVerdict verdict;
  std::uint64_t min_lee = 0;
  BoundResult best;
  std::optional<PhiRecord> oracle;
  std::string evidence;
};

struct CertifyOptions {
  SearchBudget budget;
  bool allow_oracle = true;
};

// MLDR-by-bound when d_L meets the best rank-level bound. When the best
// bound is the exact n = K identity, or when d_L is below every bound, the
// oracle decides (MLDR-proven / not-MLDR); without a completed oracle run
// the verdict falls back to by-bound for n = K and to unknown otherwise.
Certificate certify_mldr(const LinearCode& code,
                         const CertifyOptions& options = {});

struct ConstantWeightStructure {
  bool constant_weight = false;
  // Common Lee weight when constant_weight.
  std::uint64_t weight = 0;
  // Up to coordinate order and sign, the generator's nonzero coordinates
  // are m copies of the shortest constant-weight generator
  // ((1, ..., (p-1)/2) over Z_p, (1, ..., 2^t - 1) over Z_{2^t}).
  bool replication = false;
  std::uint64_t multiplicity = 0;
};

// For rank-1 codes over Z_p or Z_{2^t}; throws Error(kInapplicable)
// otherwise.
ConstantWeightStructure constant_lee_weight_structure(
    const LinearCode& code, std::uint64_t budget = kDefaultCodewordBudget);

}  // namespace mldr
