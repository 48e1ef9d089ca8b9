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

#include "mldr/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "mldr/error.hpp"

namespace mldr {

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p) {
  if (k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  BigInt pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;  // p^n
  BigInt pi = 1;
  BigInt pni = pn;
  for (std::size_t i = 0; i < k; ++i) {
    num *= pni - 1;          // p^{n-i} - 1
    pi *= p;
    den *= pi - 1;           // p^{i+1} - 1
    pni /= p;
  }
  return num / den;
}

namespace {

// Advances `idx` (strictly increasing, values < n) to the next
// combination in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

// Mixed-radix counter; false after the last assignment.
bool advance(std::vector<std::uint64_t>& digits,
             const std::vector<std::uint64_t>& radix) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

std::string describe(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

class Enumerator {
 public:
  Enumerator(const SweepSpec& spec,
             const std::function<void(const LinearCode&)>& visit)
      : spec_(spec), visit_(visit) {}

  EnumerationStats run() {
    if (spec_.K == 0 || spec_.K > spec_.n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "enumeration needs 1 <= K <= n");
    }
    if (spec_.m.t() == 1) {
      field();
      const BigInt expected = gaussian_binomial(spec_.n, spec_.K, spec_.m.p());
      if (BigInt(stats_.codes) != expected) {
        throw Error(ErrorCode::kInternal,
                    "enumerated " + std::to_string(stats_.codes) +
                        " subspaces, expected " + expected.str());
      }
    } else {
      std::vector<std::size_t> profile(spec_.m.t(), 0);
      compositions(profile, 0, spec_.K);
    }
    return stats_;
  }

 private:
  void emit(const GeneratorMatrix& g) {
    if (stats_.codes >= spec_.budget.total_code_budget) {
      throw BudgetExceeded(
          "code enumeration budget of " +
              std::to_string(spec_.budget.total_code_budget) + " exhausted",
          "more than " + std::to_string(spec_.budget.total_code_budget),
          progress_ + ", " + std::to_string(stats_.codes) + " codes visited");
    }
    ++stats_.codes;
    visit_(LinearCode(g));
  }

  // Reduced row-echelon generators over Z_p.
  void field() {
    const std::size_t n = spec_.n;
    const std::size_t k = spec_.K;
    const std::uint64_t p = spec_.m.p();
    auto pivots = first_combination(k);
    do {
      progress_ = "pivots " + describe(pivots);
      std::vector<bool> is_pivot(n, false);
      for (auto c : pivots) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = pivots[i] + 1; c < n; ++c) {
          if (!is_pivot[c]) slots.emplace_back(i, c);
        }
      }
      std::vector<std::uint64_t> digits(slots.size(), 0);
      const std::vector<std::uint64_t> radix(slots.size(), p);
      std::vector<std::uint64_t> entries(k * n);
      do {
        std::fill(entries.begin(), entries.end(), 0);
        for (std::size_t i = 0; i < k; ++i) entries[i * n + pivots[i]] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          entries[slots[s].first * n + slots[s].second] = digits[s];
        }
        ++stats_.candidates;
        emit(GeneratorMatrix(spec_.m, k, n, entries));
      } while (advance(digits, radix));
    } while (next_combination(pivots, n));
  }

  void compositions(std::vector<std::size_t>& profile, std::size_t level,
                    std::size_t remaining) {
    if (level + 1 == profile.size()) {
      profile[level] = remaining;
      std::vector<int> level_of(spec_.n, -1);
      place(profile, 0, level_of);
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      profile[level] = k;
      compositions(profile, level + 1, remaining - k);
    }
  }

  // Chooses the pivot columns of each level in turn.
  void place(const std::vector<std::size_t>& profile, std::size_t level,
             std::vector<int>& level_of) {
    if (level == profile.size()) {
      fill(level_of);
      return;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < spec_.n; ++c) {
      if (level_of[c] < 0) free_cols.push_back(c);
    }
    const std::size_t k = profile[level];
    if (k > free_cols.size()) return;
    auto pick = first_combination(k);
    do {
      for (auto i : pick) level_of[free_cols[i]] = static_cast<int>(level);
      place(profile, level + 1, level_of);
      for (auto i : pick) level_of[free_cols[i]] = -1;
    } while (k > 0 && next_combination(pick, free_cols.size()));
  }

  // Enumerates the free entries of the systematic generator with the given
  // pivot levels. A row of level v (valuation v) carries p^v a in every
  // non-pivot column, a < p^{t-v}, and at the pivot of a deeper level w it
  // is reduced modulo p^w, so a < p^{w-v}.
  void fill(const std::vector<int>& level_of) {
    const Modulus& m = spec_.m;
    const std::size_t n = spec_.n;
    const unsigned t = m.t();
    std::vector<std::pair<std::size_t, unsigned>> rows;  // (pivot col, level)
    for (unsigned v = 0; v < t; ++v) {
      for (std::size_t c = 0; c < n; ++c) {
        if (level_of[c] == static_cast<int>(v)) rows.emplace_back(c, v);
      }
    }
    std::vector<std::size_t> pivot_cols;
    for (const auto& r : rows) pivot_cols.push_back(r.first);
    progress_ = "pivots " + describe(pivot_cols);

    struct Slot {
      std::size_t index;
      std::uint64_t scale;
    };
    std::vector<Slot> slots;
    std::vector<std::uint64_t> radix;
    std::vector<std::uint64_t> base(rows.size() * n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto [pivot, v] = rows[i];
      base[i * n + pivot] = m.power(v);
      for (std::size_t c = 0; c < n; ++c) {
        if (c == pivot) continue;
        const int w = level_of[c];
        std::uint64_t r = 0;
        if (w < 0) {
          r = m.power(t - v);
        } else if (static_cast<unsigned>(w) > v) {
          r = m.power(static_cast<unsigned>(w) - v);
        }
        if (r > 1) {
          slots.push_back({i * n + c, m.power(v)});
          radix.push_back(r);
        }
      }
    }
    std::vector<std::uint64_t> digits(slots.size(), 0);
    std::vector<std::uint64_t> entries(base.size());
    do {
      entries = base;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        entries[slots[s].index] = digits[s] * slots[s].scale;
      }
      ++stats_.candidates;
      GeneratorMatrix g(m, rows.size(), n, entries);
      if (seen_.insert(canonical_key(g)).second) emit(g);
    } while (advance(digits, radix));
  }

  const SweepSpec& spec_;
  const std::function<void(const LinearCode&)>& visit_;
  EnumerationStats stats_;
  std::set<std::vector<std::uint32_t>> seen_;
  std::string progress_;
};

}  // namespace

EnumerationStats enumerate_codes(
    const SweepSpec& spec,
    const std::function<void(const LinearCode&)>& visit) {
  return Enumerator(spec, visit).run();
}

std::vector<LinearCode> collect_codes(const SweepSpec& spec) {
  std::vector<LinearCode> codes;
  enumerate_codes(spec, [&](const LinearCode& c) { codes.push_back(c); });
  return codes;
}

// ---------------------------------------------------------------------------
// Phi oracle

namespace {

struct Best {
  std::uint64_t phi = 0;
  std::optional<std::size_t> witness;
  bool incomplete = false;
};

bool better(std::uint64_t d, std::size_t idx, const Best& b,
            const std::vector<LinearCode>& codes) {
  if (!b.witness || d > b.phi) return true;
  return d == b.phi &&
         codes[idx].canonical_key() < codes[*b.witness].canonical_key();
}

Best scan(const std::vector<LinearCode>& codes, std::size_t begin,
          std::size_t end, std::uint64_t codeword_budget) {
  Best best;
  for (std::size_t i = begin; i < end; ++i) {
    if (codes[i].cardinality() > codeword_budget) {
      best.incomplete = true;
      continue;
    }
    // A code whose running minimum falls below the incumbent can neither
    // beat it nor tie it.
    const std::uint64_t d =
        min_lee_abandoning(codes[i], best.phi, codeword_budget);
    if (d >= best.phi && better(d, i, best, codes)) {
      best.phi = d;
      best.witness = i;
    }
  }
  return best;
}

}  // namespace

PhiRecord phi_oracle(const RankParams& params, const SearchBudget& budget) {
  SweepSpec spec{params.n, params.K, params.m, budget};
  std::vector<LinearCode> codes;
  bool truncated = false;
  std::string note;
  try {
    enumerate_codes(spec, [&](const LinearCode& c) { codes.push_back(c); });
  } catch (const BudgetExceeded& e) {
    truncated = true;
    note = std::string(e.what()) + " (" + e.progress() + ")";
  }

  const unsigned workers = std::max<unsigned>(
      1, std::min<unsigned>(budget.workers,
                            static_cast<unsigned>(std::max<std::size_t>(
                                1, codes.size()))));
  std::vector<Best> partial(workers);
  const std::size_t chunk = (codes.size() + workers - 1) / workers;
  if (workers == 1) {
    partial[0] = scan(codes, 0, codes.size(), budget.codeword_budget);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(codes.size(), w * chunk);
      const std::size_t end = std::min(codes.size(), begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        partial[w] = scan(codes, begin, end, budget.codeword_budget);
      });
    }
    for (auto& th : threads) th.join();
  }

  Best merged;
  for (const auto& b : partial) {
    merged.incomplete = merged.incomplete || b.incomplete;
    if (b.witness && better(b.phi, *b.witness, merged, codes)) {
      merged.phi = b.phi;
      merged.witness = b.witness;
    }
  }
  if (merged.incomplete) {
    truncated = true;
    if (!note.empty()) note += "; ";
    note += "some codes exceed the codeword budget of " +
            std::to_string(budget.codeword_budget);
  }

  PhiRecord record{params, truncated ? PhiVerdict::kLowerBound
                                     : PhiVerdict::kExact,
                   merged.phi, std::nullopt, codes.size(), note};
  if (merged.witness) record.witness = codes[*merged.witness];
  return record;
}

// ---------------------------------------------------------------------------
// Certification

std::string_view verdict_name(MldrVerdict v) {
  switch (v) {
    case MldrVerdict::kProven:
      return "MLDR-proven";
    case MldrVerdict::kByBound:
      return "MLDR-by-bound";
    case MldrVerdict::kNotMldr:
      return "not-MLDR";
    case MldrVerdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

Certificate certify_mldr(const LinearCode& code,
                         const CertifyOptions& options) {
  const RankParams params = RankParams::of(code);
  const std::uint64_t d =
      min_lee(code, std::max(options.budget.codeword_budget,
                             std::uint64_t{1}));
  Certificate cert{MldrVerdict::kUnknown, d, best_bound(params), std::nullopt,
                   ""};
  const auto bound = static_cast<std::uint64_t>(*cert.best.floor_value);
  const bool meets_bound = d == bound;
  const bool exact_identity = cert.best.id == BoundId::kMainThmD;

  std::ostringstream ev;
  ev << "d_L = " << d << ", best bound " << bound << " via "
     << bound_name(cert.best.id);

  if (meets_bound && !exact_identity) {
    cert.verdict = MldrVerdict::kByBound;
    cert.evidence = ev.str();
    return cert;
  }
  if (options.allow_oracle) {
    PhiRecord rec = phi_oracle(params, options.budget);
    if (rec.verdict == PhiVerdict::kExact) {
      ev << "; oracle Phi" << params.str() << " = " << rec.phi << " over "
         << rec.codes_examined << " codes";
      cert.verdict =
          d == rec.phi ? MldrVerdict::kProven : MldrVerdict::kNotMldr;
      cert.oracle = std::move(rec);
      cert.evidence = ev.str();
      return cert;
    }
    ev << "; oracle incomplete, Phi >= " << rec.phi;
    if (rec.phi > d) {
      cert.verdict = MldrVerdict::kNotMldr;
      cert.oracle = std::move(rec);
      cert.evidence = ev.str();
      return cert;
    }
    cert.oracle = std::move(rec);
  }
  cert.verdict = meets_bound ? MldrVerdict::kByBound : MldrVerdict::kUnknown;
  cert.evidence = ev.str();
  return cert;
}

// ---------------------------------------------------------------------------
// Constant Lee weight structure

ConstantWeightStructure constant_lee_weight_structure(const LinearCode& code,
                                                      std::uint64_t budget) {
  const Modulus& m = code.modulus();
  if (code.rank() != 1) {
    throw Error(ErrorCode::kInapplicable,
                "constant-weight structure needs a rank-1 code");
  }
  if (m.t() != 1 && m.p() != 2) {
    throw Error(ErrorCode::kInapplicable,
                "constant-weight structure needs Z_p or Z_{2^t}");
  }
  ConstantWeightStructure out;
  std::optional<std::uint64_t> weight;
  bool constant = true;
  CodewordStream stream(code, budget);
  stream.next();
  while (stream.next()) {
    const std::uint64_t w = lee_weight(stream.current(), m.q());
    if (!weight) {
      weight = w;
    } else if (*weight != w) {
      constant = false;
      break;
    }
  }
  out.constant_weight = constant;
  out.weight = constant ? *weight : 0;

  // Reduce the generator to a unit-led vector over Z_{p^{t-v}}.
  const Word& g = code.basis().front();
  unsigned v = m.t();
  for (auto x : g) v = std::min(v, valuation(x, m));
  const std::uint64_t divisor = m.power(v);
  const std::uint64_t q = m.q() / divisor;

  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto x : g) {
    if (x != 0) ++counts[lee_weight(std::uint64_t{x} / divisor, q)];
  }
  // Lee weights of the shortest constant-weight generator.
  std::map<std::uint64_t, std::uint64_t> base;
  if (m.p() == 2) {
    for (std::uint64_t a = 1; a < q; ++a) ++base[lee_weight(a, q)];
  } else {
    for (std::uint64_t a = 1; a <= (m.p() - 1) / 2; ++a) ++base[a];
  }
  const auto first = counts.find(base.begin()->first);
  if (first != counts.end() && counts.size() == base.size() &&
      first->second % base.begin()->second == 0) {
    const std::uint64_t mult = first->second / base.begin()->second;
    bool ok = mult > 0;
    for (const auto& [w, c] : base) {
      const auto it = counts.find(w);
      ok = ok && it != counts.end() && it->second == mult * c;
    }
    out.replication = ok;
    out.multiplicity = ok ? mult : 0;
  }
  return out;
}

}  // namespace mldr
