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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mldr/code.hpp"
#include "mldr/rational.hpp"
#include "mldr/ring.hpp"

namespace mldr {

// Declaration order is the tie-break order of best_bound(): the new bounds
// come first, then the established ones.
enum class BoundId {
  kMainThmD,
  kMainThmC,
  kMainThmB,
  kMainThmA,
  kEvenPrimePower,
  kRank1Bound,
  kMDSConditionBound,
  kDefectFloorBound,
  kAsMDSBound,
  kByrneWeger,
  kBariffiWeger,
  kChiangWolf,
  kAHIntegralType,
  kAHIntegralTypeMLDR,
  kAHType,
  kAHTypeMLDR,
  kShiromotoYoshida,
  kWynerGraham,
  kWynerGrahamMLDR,
};

inline constexpr std::size_t kBoundCount = 19;

std::string_view bound_name(BoundId id);
std::optional<BoundId> bound_from_name(std::string_view name);

// Column order of the published comparison table.
inline constexpr std::array<BoundId, 7> kTable2Columns = {
    BoundId::kWynerGrahamMLDR, BoundId::kAHIntegralTypeMLDR,
    BoundId::kAHTypeMLDR,      BoundId::kByrneWeger,
    BoundId::kMainThmA,        BoundId::kMainThmB,
    BoundId::kMainThmC,
};

struct BoundResult {
  BoundId id;
  bool applicable = false;
  // Present iff applicable.
  std::optional<Rational> value;
  std::optional<std::int64_t> floor_value;
  std::string condition_note;

  static BoundResult make(BoundId id, const Rational& value,
                          std::string note);
  static BoundResult inapplicable(BoundId id, std::string note);
};

// (n, K, p^t) with 1 <= K <= n.
struct RankParams {
  RankParams(std::size_t n, std::size_t K, const Modulus& m);
  static RankParams of(const LinearCode& code);

  std::size_t n;
  std::size_t K;
  Modulus m;

  std::string str() const;
};

// --- Established bounds -----------------------------------------------------

// n * mu_q * (q-1)/q * |C|/(|C|-1)
BoundResult wyner_graham(const LinearCode& code);
// n * mu_q * (q-1)/q * p^K/(p^K-1)
BoundResult wyner_graham_mldr(const RankParams& params);
// floor(q/2) (n - K + 1)
BoundResult shiromoto_yoshida(const RankParams& params);
// floor(q/2) (n - floor(kappa)), for q > 3 and kappa < n, except at
// q = 5, n = 2 where it is false.
BoundResult ah_type(const LinearCode& code);
// floor(q/2) (n - floor(K/t)), for q > 3 and floor(K/t) < n, except at
// q = 5, n = 2.
BoundResult ah_type_mldr(const RankParams& params);
// mu_q (n - k_1 + 1) with the code's free rank, for k_1 >= 1.
BoundResult chiang_wolf(const LinearCode& code);
// mu_p (n - K + 1); the rank-level form, only for t = 1 where every code
// is free.
BoundResult chiang_wolf_mldr(const RankParams& params);
// mu_q (n - kappa + 1), for integral kappa.
BoundResult ah_integral_type(const LinearCode& code);
// mu_q (n - floor(K/t) + 1), for K >= t.
BoundResult ah_integral_type_mldr(const RankParams& params);
// p^{t-1} floor(p/2) (n - K + 1)
BoundResult bariffi_weger(const RankParams& params);
// p^{t-1} mu_p (n - K + 1)
BoundResult byrne_weger(const RankParams& params);

// --- New bounds -------------------------------------------------------------

// floor(d_H mu_p) for codes over Z_p; inapplicable for t > 1.
BoundResult as_mds_bound(const LinearCode& code,
                         std::uint64_t budget = kDefaultCodewordBudget);
// floor(mu_p (n - K)) over Z_p when no MDS code of that length exists.
BoundResult mds_condition_bound(const RankParams& params);
// mu_p (n-K+1 - floor((n-K+1)/(p+1))) over Z_p, K >= 2.
BoundResult defect_floor_bound(const RankParams& params);
// p^{t-1} (floor(mu_p (n-K+1) (p-1)/p) + 1) when 3 <= K+1 <= n <= p+1.
BoundResult mds_refined_bound(const RankParams& params);

BoundResult main_thm_a(const RankParams& params);
BoundResult main_thm_b(const RankParams& params);
BoundResult main_thm_d(const RankParams& params);
BoundResult even_prime_power(const RankParams& params);
BoundResult rank1_bound(const RankParams& params);

// A, B, C, D, EvenPrimePower, Rank1Bound in that order.
std::vector<BoundResult> main_thm_bounds(const RankParams& params);

// Every bound on Phi(n, K, p^t), in BoundId order.
std::vector<BoundResult> rank_level_bounds(const RankParams& params);

// Bounds that use the code's own kappa, free rank or defect, in BoundId
// order. Computing the defect enumerates the code.
std::vector<BoundResult> code_level_bounds(
    const LinearCode& code, std::uint64_t budget = kDefaultCodewordBudget);

// The applicable rank-level bound with the least floor (ties by BoundId
// order); its note names the winner.
BoundResult best_bound(const RankParams& params);

// Longest linear MDS code of dimension k over F_p: max{k+1, p+1}.
std::uint64_t mds_max_length(std::uint64_t k, std::uint64_t p);

// [k + defect, (defect+1)(q+1) + k - 2], valid for k >= 2.
std::pair<std::uint64_t, std::uint64_t> defect_length_range(
    std::uint64_t k, std::uint64_t defect, std::uint64_t q);

// For t = 1, p > 2: d_L = d_H mu_p implies (p-1)/2 divides d_H.
// Throws Error(kInapplicable) outside that range.
bool lee_equals_mu_d_divisibility(
    const LinearCode& code, std::uint64_t budget = kDefaultCodewordBudget);

}  // namespace mldr
