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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mldr/code.hpp"
#include "mldr/search.hpp"

namespace mldr {

// Per-code predicates checked by property_sweep().
enum class Property {
  kSoundness,       // d_L <= every applicable rank- and code-level bound
  kSocle,           // socle has rank K and the same d_H
  kSocleResidue,    // socle over Z_p is a k-dim code with the same d_H
  kSocleLee,        // d_L(C) <= d_L(socle)
  kSingleton,       // 1 <= d_H <= n - K + 1 and d_H <= d_L
  kSize,            // |C| codewords, all distinct members of C
  kKappa,           // K/t <= kappa <= K
  kSystematic,      // systematic generator spans C, valuations match profile
  kLeeImpliesMdr,   // d_L > p^{t-1} mu_p (n-K) implies MDR
  kMdrIffMdsSocle,  // MDR exactly when the socle is MDS
  kDefectRange,     // t = 1, K >= 2: n within the defect length range
  kShortCode,       // t = 1, p > 2: d_L = d_H mu_p implies (p-1)/2 | d_H
  kWood,            // rank 1: constant Lee weight iff replication structure
};

inline constexpr std::size_t kPropertyCount = 13;

std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);
std::vector<Property> all_properties();

// Whether `p` says anything about `code` (e.g. kShortCode needs t = 1).
bool property_applies(Property p, const LinearCode& code);

// Returns a description of the violation, or nullopt when the property
// holds or does not apply. `summary` must be summarize(code).
std::optional<std::string> check_property(Property p, const LinearCode& code,
                                          const CodeSummary& summary,
                                          std::uint64_t budget);

struct Violation {
  Property property;
  std::string code;    // code file text of the offending generator
  std::string detail;
};

struct SweepReport {
  std::uint64_t codes = 0;
  // Number of codes each property was evaluated on, by Property index.
  std::vector<std::uint64_t> checked;
  std::vector<Violation> violations;
};

// Runs every property in `props` over each code enumerated for `spec`.
// Propagates BudgetExceeded from the enumeration.
SweepReport property_sweep(const SweepSpec& spec,
                           const std::vector<Property>& props);

// Merges `other` into `into`.
void accumulate(SweepReport& into, const SweepReport& other);

}  // namespace mldr
