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

#include "mldr/properties.hpp"

#include <array>
#include <set>
#include <sstream>

#include "mldr/bounds.hpp"
#include "mldr/error.hpp"

namespace mldr {

namespace {

constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "soundness",   "socle",           "socle-residue", "socle-lee",
    "singleton",   "size",
    "kappa",       "systematic",      "lee-implies-mdr",
    "mdr-iff-mds-socle", "defect-range", "short-code", "wood",
};

Rational integer(std::uint64_t v) { return Rational(BigInt(v)); }

std::optional<std::string> fail(std::string msg) { return msg; }

std::optional<std::string> soundness(const LinearCode& code,
                                     const CodeSummary& s,
                                     std::uint64_t budget) {
  const auto d = static_cast<std::int64_t>(s.min_lee);
  std::vector<BoundResult> all = rank_level_bounds(RankParams::of(code));
  for (auto& b : code_level_bounds(code, budget)) all.push_back(std::move(b));
  for (const auto& b : all) {
    if (b.applicable && *b.floor_value < d) {
      return fail("d_L = " + std::to_string(d) + " exceeds " +
                  std::string(bound_name(b.id)) + " = " + b.value->str());
    }
  }
  return std::nullopt;
}

std::optional<std::string> socle_check(const LinearCode& code,
                                       const CodeSummary& s,
                                       std::uint64_t budget, bool residue) {
  const LinearCode so =
      residue ? socle_over_residue_field(code) : socle(code);
  if (so.rank() != code.rank()) {
    return fail("socle rank " + std::to_string(so.rank()) + " != " +
                std::to_string(code.rank()));
  }
  const std::uint64_t d = min_hamming(so, budget);
  if (d != s.min_hamming) {
    return fail("socle d_H " + std::to_string(d) + " != " +
                std::to_string(s.min_hamming));
  }
  return std::nullopt;
}

std::optional<std::string> size_check(const LinearCode& code,
                                      std::uint64_t budget) {
  std::set<Word> seen;
  bool outside = false;
  for_each_codeword(
      code,
      [&](std::span<const std::uint32_t> w) {
        outside = outside || !code.contains(w);
        seen.emplace(w.begin(), w.end());
      },
      budget);
  if (outside) return fail("enumerated word not in the code");
  if (BigInt(seen.size()) != code.cardinality()) {
    return fail(std::to_string(seen.size()) + " distinct codewords, |C| = " +
                code.cardinality().str());
  }
  return std::nullopt;
}

std::optional<std::string> kappa_check(const LinearCode& code) {
  const Rational k = code.kappa();
  const Rational K = integer(code.rank());
  if (k < K / integer(code.modulus().t()) || k > K) {
    return fail("kappa " + k.str() + " outside [K/t, K]");
  }
  return std::nullopt;
}

std::optional<std::string> systematic_check(const LinearCode& code) {
  const SystematicForm& sf = code.systematic();
  const GeneratorMatrix& g = sf.matrix;
  const Modulus& m = code.modulus();
  const std::size_t n = g.cols();
  std::vector<unsigned> counts(m.t(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const unsigned v = sf.row_valuations[r];
    if (r > 0 && v < sf.row_valuations[r - 1]) {
      return fail("row valuations decrease");
    }
    ++counts.at(v);
    if (g.value(r, r) != m.power(v)) return fail("pivot is not p^v");
    for (std::size_t c = 0; c < n; ++c) {
      if (g.value(r, c) % m.power(v) != 0) return fail("row not divisible");
    }
    for (std::size_t below = r + 1; below < g.rows(); ++below) {
      if (g.value(below, r) != 0) return fail("nonzero below pivot");
    }
  }
  for (unsigned i = 0; i < m.t(); ++i) {
    if (counts[i] != code.profile().k()[i]) {
      return fail("valuation counts disagree with profile");
    }
  }
  std::vector<Word> rows(g.rows(), Word(n));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[r][sf.column_permutation[j]] = g.value(r, j);
    }
  }
  if (!same_code(LinearCode(GeneratorMatrix(m, rows)), code)) {
    return fail("systematic form spans a different code");
  }
  return std::nullopt;
}

Rational mu(std::uint64_t p) { return mean_nonzero_lee_weight(Modulus(p, 1)); }

}  // namespace

std::string_view property_name(Property p) {
  return kNames.at(static_cast<std::size_t>(p));
}

std::optional<Property> property_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Property>(i);
  }
  return std::nullopt;
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    out.push_back(static_cast<Property>(i));
  }
  return out;
}

bool property_applies(Property p, const LinearCode& code) {
  const Modulus& m = code.modulus();
  switch (p) {
    case Property::kDefectRange:
      return m.t() == 1 && code.rank() >= 2;
    case Property::kShortCode:
      return m.t() == 1 && m.p() > 2;
    case Property::kWood:
      return code.rank() == 1 && (m.t() == 1 || m.p() == 2);
    default:
      return true;
  }
}

std::optional<std::string> check_property(Property p, const LinearCode& code,
                                          const CodeSummary& s,
                                          std::uint64_t budget) {
  if (!property_applies(p, code)) return std::nullopt;
  const Modulus& m = code.modulus();
  const std::size_t n = code.length();
  const std::size_t K = code.rank();
  switch (p) {
    case Property::kSoundness:
      return soundness(code, s, budget);
    case Property::kSocle:
      return socle_check(code, s, budget, false);
    case Property::kSocleResidue:
      return socle_check(code, s, budget, true);
    case Property::kSocleLee: {
      const std::uint64_t d = min_lee(socle(code), budget);
      if (s.min_lee > d) {
        return fail("d_L = " + std::to_string(s.min_lee) + " > socle d_L " +
                    std::to_string(d));
      }
      return std::nullopt;
    }
    case Property::kSingleton:
      if (s.min_hamming < 1 || s.min_hamming > n - K + 1 ||
          s.min_lee < s.min_hamming) {
        return fail("d_H = " + std::to_string(s.min_hamming) + ", d_L = " +
                    std::to_string(s.min_lee));
      }
      return std::nullopt;
    case Property::kSize:
      return size_check(code, budget);
    case Property::kKappa:
      return kappa_check(code);
    case Property::kSystematic:
      return systematic_check(code);
    case Property::kLeeImpliesMdr: {
      const Rational limit =
          integer(m.power(m.t() - 1)) * mu(m.p()) * integer(n - K);
      if (integer(s.min_lee) > limit && !s.is_mdr) {
        return fail("d_L = " + std::to_string(s.min_lee) + " > " +
                    limit.str() + " but the code is not MDR");
      }
      return std::nullopt;
    }
    case Property::kMdrIffMdsSocle:
      if (s.is_mdr != s.is_mds_socle) {
        return fail(std::string("MDR ") + (s.is_mdr ? "yes" : "no") +
                    ", MDS socle " + (s.is_mds_socle ? "yes" : "no"));
      }
      return std::nullopt;
    case Property::kDefectRange: {
      const auto [lo, hi] = defect_length_range(
          K, static_cast<std::uint64_t>(s.defect), m.q());
      if (n < lo || n > hi) {
        std::ostringstream out;
        out << "n = " << n << " outside [" << lo << ", " << hi
            << "] for defect " << s.defect;
        return out.str();
      }
      return std::nullopt;
    }
    case Property::kShortCode:
      if (integer(s.min_lee) == integer(s.min_hamming) * mu(m.p()) &&
          s.min_hamming % ((m.p() - 1) / 2) != 0) {
        return fail("d_L = d_H mu_p with d_H = " +
                    std::to_string(s.min_hamming));
      }
      return std::nullopt;
    case Property::kWood: {
      const ConstantWeightStructure w =
          constant_lee_weight_structure(code, budget);
      if (w.constant_weight != w.replication) {
        return fail(std::string("constant weight ") +
                    (w.constant_weight ? "yes" : "no") + ", replication " +
                    (w.replication ? "yes" : "no"));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

SweepReport property_sweep(const SweepSpec& spec,
                           const std::vector<Property>& props) {
  SweepReport report;
  report.checked.assign(kPropertyCount, 0);
  const std::uint64_t budget = spec.budget.codeword_budget;
  enumerate_codes(spec, [&](const LinearCode& code) {
    ++report.codes;
    const CodeSummary s = summarize(code, budget);
    for (Property p : props) {
      if (!property_applies(p, code)) continue;
      ++report.checked[static_cast<std::size_t>(p)];
      if (auto v = check_property(p, code, s, budget)) {
        report.violations.push_back(
            {p, format_code_file(code.generators()), *v});
      }
    }
  });
  return report;
}

void accumulate(SweepReport& into, const SweepReport& other) {
  into.codes += other.codes;
  into.checked.resize(kPropertyCount, 0);
  for (std::size_t i = 0; i < other.checked.size(); ++i) {
    into.checked[i] += other.checked[i];
  }
  into.violations.insert(into.violations.end(), other.violations.begin(),
                         other.violations.end());
}

}  // namespace mldr
