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

#include "mldr/bounds.hpp"

#include <algorithm>

#include "mldr/error.hpp"

namespace mldr {

namespace {

constexpr std::array<std::string_view, kBoundCount> kNames = {
    "MainThmD",          "MainThmC",           "MainThmB",
    "MainThmA",          "EvenPrimePower",     "Rank1Bound",
    "MDSConditionBound", "DefectFloorBound",   "AsMDSBound",
    "ByrneWeger",        "BariffiWeger",       "ChiangWolf",
    "AHIntegralType",    "AHIntegralTypeMLDR", "AHType",
    "AHTypeMLDR",        "ShiromotoYoshida",   "WynerGraham",
    "WynerGrahamMLDR",
};

Rational integer(std::uint64_t v) { return Rational(BigInt(v)); }

BigInt power(std::uint64_t base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

Rational mu(std::uint64_t p) { return mean_nonzero_lee_weight(Modulus(p, 1)); }

// p^{t-1}
Rational lift(const Modulus& m) { return integer(m.power(m.t() - 1)); }

Rational floor_of(const Rational& r) { return Rational(r.floor()); }

}  // namespace

std::string_view bound_name(BoundId id) {
  return kNames.at(static_cast<std::size_t>(id));
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<BoundId>(i);
  }
  return std::nullopt;
}

BoundResult BoundResult::make(BoundId id, const Rational& value,
                              std::string note) {
  return BoundResult{id, true, value, value.floor_int64(), std::move(note)};
}

BoundResult BoundResult::inapplicable(BoundId id, std::string note) {
  return BoundResult{id, false, std::nullopt, std::nullopt, std::move(note)};
}

RankParams::RankParams(std::size_t n_, std::size_t K_, const Modulus& m_)
    : n(n_), K(K_), m(m_) {
  if (n == 0 || K == 0 || K > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "rank parameters need 1 <= K <= n (got n=" + std::to_string(n) +
                    ", K=" + std::to_string(K) + ")");
  }
}

RankParams RankParams::of(const LinearCode& code) {
  return RankParams(code.length(), code.rank(), code.modulus());
}

std::string RankParams::str() const {
  return "(" + std::to_string(n) + "," + std::to_string(K) + "," +
         std::to_string(m.q()) + ")";
}

// --- Established bounds -----------------------------------------------------

BoundResult wyner_graham(const LinearCode& code) {
  const Modulus& m = code.modulus();
  const BigInt size = code.cardinality();
  const Rational value = integer(code.length()) *
                         mean_nonzero_lee_weight(m) *
                         Rational(BigInt(m.q() - 1), BigInt(m.q())) *
                         Rational(size, size - 1);
  return BoundResult::make(BoundId::kWynerGraham, value, "any nonzero code");
}

BoundResult wyner_graham_mldr(const RankParams& params) {
  const Modulus& m = params.m;
  const BigInt pk = power(m.p(), params.K);
  const Rational value = integer(params.n) * mean_nonzero_lee_weight(m) *
                         Rational(BigInt(m.q() - 1), BigInt(m.q())) *
                         Rational(pk, pk - 1);
  return BoundResult::make(BoundId::kWynerGrahamMLDR, value, "|C| >= p^K");
}

BoundResult shiromoto_yoshida(const RankParams& params) {
  const Rational value =
      integer(max_lee_weight(params.m)) * integer(params.n - params.K + 1);
  return BoundResult::make(BoundId::kShiromotoYoshida, value, "always");
}

namespace {
// The stated form fails for q = 5, n = 2: <(1,2)> has d_L = 3 > 2.
bool ah_exception(std::uint64_t q, std::size_t n) { return q == 5 && n == 2; }
}  // namespace

BoundResult ah_type(const LinearCode& code) {
  const Modulus& m = code.modulus();
  const Rational kappa = code.kappa();
  if (m.q() <= 3 || !(kappa < integer(code.length()))) {
    return BoundResult::inapplicable(BoundId::kAHType,
                                     "requires q > 3 and kappa < n");
  }
  if (ah_exception(m.q(), code.length())) {
    return BoundResult::inapplicable(BoundId::kAHType,
                                     "excluded at q = 5, n = 2");
  }
  const Rational value = integer(max_lee_weight(m)) *
                         (integer(code.length()) - floor_of(kappa));
  return BoundResult::make(BoundId::kAHType, value, "q > 3, kappa < n");
}

BoundResult ah_type_mldr(const RankParams& params) {
  const Modulus& m = params.m;
  const std::size_t type_floor = params.K / m.t();
  if (m.q() <= 3 || type_floor >= params.n) {
    return BoundResult::inapplicable(BoundId::kAHTypeMLDR,
                                     "requires q > 3 and floor(K/t) < n");
  }
  if (ah_exception(m.q(), params.n)) {
    return BoundResult::inapplicable(BoundId::kAHTypeMLDR,
                                     "excluded at q = 5, n = 2");
  }
  const Rational value =
      integer(max_lee_weight(m)) * integer(params.n - type_floor);
  return BoundResult::make(BoundId::kAHTypeMLDR, value,
                           "q > 3, floor(K/t) < n");
}

// Needs a free generator: <(2,2,2)> over Z_4 has k_1 = 0 and d_L = 6 > 16/3.
BoundResult chiang_wolf(const LinearCode& code) {
  if (code.free_rank() == 0) {
    return BoundResult::inapplicable(BoundId::kChiangWolf,
                                     "requires free rank k_1 >= 1");
  }
  const Rational value = mean_nonzero_lee_weight(code.modulus()) *
                         integer(code.length() - code.free_rank() + 1);
  return BoundResult::make(BoundId::kChiangWolf, value, "free rank k_1");
}

BoundResult chiang_wolf_mldr(const RankParams& params) {
  if (params.m.t() != 1) {
    return BoundResult::inapplicable(BoundId::kChiangWolf,
                                     "rank-level form requires t = 1");
  }
  const Rational value = mu(params.m.p()) * integer(params.n - params.K + 1);
  return BoundResult::make(BoundId::kChiangWolf, value, "t = 1, k_1 = K");
}

BoundResult ah_integral_type(const LinearCode& code) {
  const Rational kappa = code.kappa();
  if (!kappa.is_integer()) {
    return BoundResult::inapplicable(BoundId::kAHIntegralType,
                                     "requires integral kappa");
  }
  const Rational value = mean_nonzero_lee_weight(code.modulus()) *
                         (integer(code.length()) - kappa + integer(1));
  return BoundResult::make(BoundId::kAHIntegralType, value, "integral kappa");
}

// Every code of rank K >= t has a subcode of integral type floor(K/t) >= 1,
// which carries the code-level bound over. For K < t no such subcode exists
// and the bound fails (<(4,4)> over Z_8 has d_L = 8 > 48/7).
BoundResult ah_integral_type_mldr(const RankParams& params) {
  const Modulus& m = params.m;
  if (params.K < m.t()) {
    return BoundResult::inapplicable(BoundId::kAHIntegralTypeMLDR,
                                     "requires K >= t");
  }
  const Rational value = mean_nonzero_lee_weight(m) *
                         integer(params.n - params.K / m.t() + 1);
  return BoundResult::make(BoundId::kAHIntegralTypeMLDR, value, "K >= t");
}

BoundResult bariffi_weger(const RankParams& params) {
  const Modulus& m = params.m;
  const Rational value = lift(m) * integer(m.p() / 2) *
                         integer(params.n - params.K + 1);
  return BoundResult::make(BoundId::kBariffiWeger, value, "always");
}

BoundResult byrne_weger(const RankParams& params) {
  const Modulus& m = params.m;
  const Rational value =
      lift(m) * mu(m.p()) * integer(params.n - params.K + 1);
  return BoundResult::make(BoundId::kByrneWeger, value, "always");
}

// --- New bounds -------------------------------------------------------------

BoundResult as_mds_bound(const LinearCode& code, std::uint64_t budget) {
  const Modulus& m = code.modulus();
  if (m.t() != 1) {
    return BoundResult::inapplicable(BoundId::kAsMDSBound, "requires t = 1");
  }
  const std::uint64_t d = min_hamming(code, budget);
  const std::int64_t s = static_cast<std::int64_t>(code.length()) -
                         static_cast<std::int64_t>(code.rank()) + 1 -
                         static_cast<std::int64_t>(d);
  const Rational value = floor_of(integer(d) * mu(m.p()));
  return BoundResult::make(BoundId::kAsMDSBound, value,
                           "t = 1, defect s = " + std::to_string(s));
}

namespace {

// Conditions under which no MDS code of length n and rank K >= 2 exists
// over F_p: n > p + 1 with K <= p, or n > K + 1 with K >= p.
bool beyond_mds_length(const RankParams& params) {
  const std::uint64_t p = params.m.p();
  const std::uint64_t n = params.n;
  const std::uint64_t K = params.K;
  if (K < 2) return false;
  return (K >= p && n > K + 1) || (K <= p && n > p + 1);
}

bool short_mds_range(const RankParams& params) {
  return params.K >= 2 && params.n >= params.K + 1 &&
         params.n <= params.m.p() + 1;
}

Rational defect_floor_value(const RankParams& params) {
  const std::uint64_t p = params.m.p();
  const std::uint64_t d = params.n - params.K + 1;
  return mu(p) * integer(d - d / (p + 1));
}

}  // namespace

BoundResult mds_condition_bound(const RankParams& params) {
  if (params.m.t() != 1) {
    return BoundResult::inapplicable(BoundId::kMDSConditionBound,
                                     "requires t = 1");
  }
  if (!beyond_mds_length(params)) {
    return BoundResult::inapplicable(
        BoundId::kMDSConditionBound,
        "requires K >= 2 and (n > p+1, K <= p) or (n > K+1, K >= p)");
  }
  const Rational value =
      floor_of(mu(params.m.p()) * integer(params.n - params.K));
  return BoundResult::make(BoundId::kMDSConditionBound, value,
                           "no MDS code of this length");
}

BoundResult defect_floor_bound(const RankParams& params) {
  if (params.m.t() != 1 || params.K < 2) {
    return BoundResult::inapplicable(BoundId::kDefectFloorBound,
                                     "requires t = 1 and K >= 2");
  }
  return BoundResult::make(BoundId::kDefectFloorBound,
                           defect_floor_value(params), "t = 1, K >= 2");
}

BoundResult mds_refined_bound(const RankParams& params) {
  if (!short_mds_range(params)) {
    return BoundResult::inapplicable(BoundId::kMainThmC,
                                     "requires 3 <= K+1 <= n <= p+1");
  }
  const std::uint64_t p = params.m.p();
  const Rational inner = mu(p) * integer(params.n - params.K + 1) *
                         Rational(BigInt(p - 1), BigInt(p));
  const Rational value = lift(params.m) * (floor_of(inner) + integer(1));
  return BoundResult::make(BoundId::kMainThmC, value, "3 <= K+1 <= n <= p+1");
}

BoundResult main_thm_a(const RankParams& params) {
  if (params.K < 2) {
    return BoundResult::inapplicable(BoundId::kMainThmA, "requires K >= 2");
  }
  const Rational value = lift(params.m) * floor_of(defect_floor_value(params));
  return BoundResult::make(BoundId::kMainThmA, value, "K >= 2, n >= K");
}

BoundResult main_thm_b(const RankParams& params) {
  if (!beyond_mds_length(params)) {
    return BoundResult::inapplicable(
        BoundId::kMainThmB,
        "requires (K >= p, n > K+1) or (2 <= K <= p, n > p+1)");
  }
  const Rational value = lift(params.m) *
                         floor_of(mu(params.m.p()) *
                                  integer(params.n - params.K));
  return BoundResult::make(BoundId::kMainThmB, value,
                           "socle cannot be MDS at this length");
}

BoundResult main_thm_d(const RankParams& params) {
  if (params.n != params.K) {
    return BoundResult::inapplicable(BoundId::kMainThmD, "requires n = K");
  }
  return BoundResult::make(BoundId::kMainThmD, lift(params.m),
                           "n = K, exact value");
}

BoundResult even_prime_power(const RankParams& params) {
  if (params.m.p() != 2 || params.K < 2 || params.n <= params.K + 1) {
    return BoundResult::inapplicable(BoundId::kEvenPrimePower,
                                     "requires p = 2, K >= 2, n > K+1");
  }
  const Rational value = lift(params.m) * integer(params.n - params.K);
  return BoundResult::make(BoundId::kEvenPrimePower, value,
                           "p = 2, K >= 2, n > K+1");
}

BoundResult rank1_bound(const RankParams& params) {
  if (params.K != 1) {
    return BoundResult::inapplicable(BoundId::kRank1Bound, "requires K = 1");
  }
  const Rational value =
      lift(params.m) * floor_of(integer(params.n) * mu(params.m.p()));
  return BoundResult::make(BoundId::kRank1Bound, value, "K = 1");
}

std::vector<BoundResult> main_thm_bounds(const RankParams& params) {
  return {main_thm_a(params),        main_thm_b(params),
          mds_refined_bound(params), main_thm_d(params),
          even_prime_power(params),  rank1_bound(params)};
}

std::vector<BoundResult> rank_level_bounds(const RankParams& params) {
  return {
      main_thm_d(params),           mds_refined_bound(params),
      main_thm_b(params),           main_thm_a(params),
      even_prime_power(params),     rank1_bound(params),
      mds_condition_bound(params),  defect_floor_bound(params),
      byrne_weger(params),          bariffi_weger(params),
      chiang_wolf_mldr(params),     ah_integral_type_mldr(params),
      ah_type_mldr(params),         shiromoto_yoshida(params),
      wyner_graham_mldr(params),
  };
}

std::vector<BoundResult> code_level_bounds(const LinearCode& code,
                                           std::uint64_t budget) {
  return {as_mds_bound(code, budget), chiang_wolf(code),
          ah_integral_type(code), ah_type(code), wyner_graham(code)};
}

BoundResult best_bound(const RankParams& params) {
  std::optional<BoundResult> best;
  for (auto& r : rank_level_bounds(params)) {
    if (!r.applicable) continue;
    if (!best || *r.floor_value < *best->floor_value) best = std::move(r);
  }
  // Shiromoto-Yoshida always applies, so best is engaged.
  best->condition_note = "best: " + std::string(bound_name(best->id)) + " (" +
                         best->condition_note + ")";
  return *best;
}

std::uint64_t mds_max_length(std::uint64_t k, std::uint64_t p) {
  return k <= p ? p + 1 : k + 1;
}

std::pair<std::uint64_t, std::uint64_t> defect_length_range(
    std::uint64_t k, std::uint64_t defect, std::uint64_t q) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "defect length range needs k >= 2");
  }
  return {k + defect, (defect + 1) * (q + 1) + k - 2};
}

bool lee_equals_mu_d_divisibility(const LinearCode& code,
                                  std::uint64_t budget) {
  const Modulus& m = code.modulus();
  if (m.t() != 1 || m.p() == 2) {
    throw Error(ErrorCode::kInapplicable,
                "divisibility predicate needs t = 1 and p > 2");
  }
  const CodeSummary s = summarize(code, budget);
  const Rational mean = integer(s.min_hamming) * mu(m.p());
  if (!(integer(s.min_lee) == mean)) return true;
  return s.min_hamming % ((m.p() - 1) / 2) == 0;
}

}  // namespace mldr
