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

#include "mldr/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mldr/bounds.hpp"
#include "mldr/error.hpp"
#include "mldr/properties.hpp"
#include "mldr/report.hpp"

namespace mldr {

std::size_t CheckResult::failures() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.pass ? 0 : 1;
  return n;
}

namespace {

// Collects failure messages, keeping only the first few in the detail.
class Tally {
 public:
  void fail(const std::string& msg) {
    if (failures_++ < 5) witnesses_ += (witnesses_.empty() ? "" : "; ") + msg;
  }
  void count(std::uint64_t n = 1) { checked_ += n; }
  CheckLine line(std::string name) const {
    if (failures_ == 0) {
      return {std::move(name), true, std::to_string(checked_) + " checked"};
    }
    return {std::move(name), false,
            std::to_string(failures_) + " of " + std::to_string(checked_) +
                " failed: " + witnesses_};
  }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t failures_ = 0;
  std::string witnesses_;
};

std::vector<Modulus> small_moduli(std::uint64_t max_q) {
  std::vector<Modulus> out;
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    try {
      out.push_back(Modulus::from_order(q));
    } catch (const Error&) {
    }
  }
  return out;
}

std::string triple(std::size_t n, std::size_t K, std::uint64_t q) {
  return "(" + std::to_string(n) + "," + std::to_string(K) + "," +
         std::to_string(q) + ")";
}

// ---- ring -------------------------------------------------------------------

void ring_suite(CheckResult& out) {
  Tally arith, lee, mu, inv, val, triangle, maxw;
  for (const Modulus& m : small_moduli(64)) {
    const std::uint64_t q = m.q();
    Rational total = 0;
    std::uint64_t largest = 0;
    for (std::uint64_t a = 0; a < q; ++a) {
      const Residue ra(m, a);
      for (std::uint64_t b = 0; b < q; ++b) {
        const Residue rb(m, b);
        arith.count();
        if ((ra + rb).value() != (a + b) % q ||
            (ra * rb).value() != (a * b) % q ||
            ((ra - rb) + rb).value() != a) {
          arith.fail("Z_" + std::to_string(q) + " at " + std::to_string(a) +
                     "," + std::to_string(b));
        }
        triangle.count();
        if (lee_weight((a + b) % q, q) > lee_weight(a, q) + lee_weight(b, q)) {
          triangle.fail("Z_" + std::to_string(q) + " at " + std::to_string(a) +
                        "," + std::to_string(b));
        }
      }
      const std::uint64_t w = lee_weight(a, q);
      lee.count();
      if (w != lee_weight(q - a == q ? 0 : q - a, q) || w > max_lee_weight(m) ||
          (w == 0) != (a == 0)) {
        lee.fail("Z_" + std::to_string(q) + " at " + std::to_string(a));
      }
      total = total + Rational(BigInt(w));
      largest = std::max(largest, w);
      val.count();
      if (a != 0) {
        const unsigned v = valuation(a, m);
        if (a % m.power(v) != 0 || (v < m.t() && a % m.power(v + 1) == 0) ||
            v != ra.valuation()) {
          val.fail("v(" + std::to_string(a) + ") in Z_" + std::to_string(q));
        }
      }
      if (ra.is_unit()) {
        inv.count();
        if ((ra * ra.inverse()).value() != 1) {
          inv.fail(std::to_string(a) + "^-1 in Z_" + std::to_string(q));
        }
      }
    }
    maxw.count();
    if (largest != max_lee_weight(m)) maxw.fail("M_L(" + std::to_string(q) + ")");
    mu.count();
    if (!(total / Rational(BigInt(q - 1)) == mean_nonzero_lee_weight(m))) {
      mu.fail("mu_" + std::to_string(q));
    }
  }
  out.lines.push_back(arith.line("ring: residue arithmetic, q <= 64"));
  out.lines.push_back(lee.line("ring: Lee weight symmetry and range"));
  out.lines.push_back(triangle.line("ring: Lee weight triangle inequality"));
  out.lines.push_back(maxw.line("ring: largest Lee weight is floor(q/2)"));
  out.lines.push_back(mu.line("ring: mu_q equals the mean nonzero Lee weight"));
  out.lines.push_back(inv.line("ring: unit inverses"));
  out.lines.push_back(val.line("ring: p-adic valuation"));
}

// ---- code -------------------------------------------------------------------

std::set<Word> codeword_set(const LinearCode& c) {
  std::set<Word> s;
  for_each_codeword(c, [&](std::span<const std::uint32_t> w) {
    s.emplace(w.begin(), w.end());
  });
  return s;
}

void code_suite(CheckResult& out, const SearchBudget& budget) {
  // Canonical keys separate exactly the distinct codeword sets.
  Tally identity;
  const std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>
      grid = {{2, 1, 4}, {2, 2, 4}, {3, 1, 4}, {3, 2, 4}, {3, 3, 4},
              {2, 1, 8}, {2, 2, 8}, {3, 2, 8}, {2, 1, 9}, {3, 2, 9},
              {3, 1, 3}, {3, 2, 3}, {4, 2, 2}};
  for (const auto& [n, K, q] : grid) {
    SweepSpec spec{n, K, Modulus::from_order(q), budget};
    std::set<std::set<Word>> sets;
    std::set<std::vector<std::uint32_t>> keys;
    std::uint64_t count = 0;
    enumerate_codes(spec, [&](const LinearCode& c) {
      ++count;
      sets.insert(codeword_set(c));
      keys.insert(c.canonical_key());
    });
    identity.count(count);
    if (sets.size() != count || keys.size() != count) {
      identity.fail(triple(n, K, q) + ": " + std::to_string(count) +
                    " codes, " + std::to_string(sets.size()) +
                    " distinct codeword sets");
    }
  }
  out.lines.push_back(
      identity.line("code: canonical key agrees with codeword-set identity"));

  // Every submodule of Z_4^2 and Z_8^2 spanned by at most two rows is found
  // exactly once, with the right rank.
  Tally brute;
  for (std::uint64_t q : {4, 8, 9}) {
    const Modulus m = Modulus::from_order(q);
    std::map<std::set<Word>, std::size_t> spans;
    for (std::uint64_t a = 0; a < q * q; ++a) {
      for (std::uint64_t b = 0; b < q * q; ++b) {
        const std::vector<std::uint64_t> e = {a % q, a / q, b % q, b / q};
        GeneratorMatrix g(m, 2, 2, e);
        if (g.is_zero()) continue;
        LinearCode c(g);
        spans.emplace(codeword_set(c), c.rank());
      }
    }
    std::map<std::size_t, std::size_t> by_rank;
    for (const auto& [set, rank] : spans) ++by_rank[rank];
    for (std::size_t K = 1; K <= 2; ++K) {
      SweepSpec spec{2, K, m, budget};
      const auto stats = enumerate_codes(spec, [](const LinearCode&) {});
      brute.count();
      if (stats.codes != by_rank[K]) {
        brute.fail(triple(2, K, q) + ": enumerated " +
                   std::to_string(stats.codes) + ", spans " +
                   std::to_string(by_rank[K]));
      }
    }
  }
  out.lines.push_back(
      brute.line("code: enumeration matches brute-force span dedup, n = 2"));

  Tally gauss;
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        SweepSpec spec{n, k, Modulus(p, 1), budget};
        const auto stats = enumerate_codes(spec, [](const LinearCode&) {});
        gauss.count();
        if (BigInt(stats.codes) != gaussian_binomial(n, k, p)) {
          gauss.fail(triple(n, k, p));
        }
      }
    }
  }
  out.lines.push_back(gauss.line("code: t = 1 counts equal Gaussian binomials"));

  Tally round;
  for (const auto& [n, K, q] : grid) {
    SweepSpec spec{n, K, Modulus::from_order(q), budget};
    enumerate_codes(spec, [&](const LinearCode& c) {
      round.count();
      const GeneratorMatrix back =
          parse_code_file(format_code_file(c.generators()));
      if (!(back == c.generators())) round.fail(c.generators().str());
    });
  }
  out.lines.push_back(round.line("code: code file round trip"));
}

// ---- bounds -----------------------------------------------------------------

void bounds_suite(CheckResult& out) {
  const GoldenDiff t2 = compare_table2(table2());
  out.lines.push_back({"bounds: comparison table matches reference", t2.ok(),
                       t2.ok() ? std::to_string(t2.compared) + " cells"
                               : t2.mismatches.front()});
  for (int id = 1; id <= kFigureCount; ++id) {
    const FigureSpec spec = figure_spec(id);
    const GoldenDiff d = compare_figure(spec, figure_values(spec));
    out.lines.push_back({"bounds: figure " + std::to_string(id) + " " +
                             spec.title + " matches reference",
                         d.ok(),
                         d.ok() ? std::to_string(d.compared) + " points"
                                : d.mismatches.front()});
  }

  Tally b_le_a, c_lt_bw;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const Modulus m(p, 1);
    for (std::size_t n = 1; n <= 20; ++n) {
      for (std::size_t K = 1; K <= n; ++K) {
        const RankParams P(n, K, m);
        const BoundResult a = main_thm_a(P);
        const BoundResult b = main_thm_b(P);
        if (a.applicable && b.applicable && n - K + 1 < p + 1) {
          b_le_a.count();
          if (*b.floor_value > *a.floor_value) b_le_a.fail(P.str());
        }
        const BoundResult c = mds_refined_bound(P);
        if (c.applicable && n > K + 5) {
          c_lt_bw.count();
          if (!(*c.value < *byrne_weger(P).value)) c_lt_bw.fail(P.str());
        }
      }
    }
  }
  out.lines.push_back(b_le_a.line(
      "bounds: (B) <= (A) when n-K+1 < p+1, p <= 13, n <= 20"));
  out.lines.push_back(
      c_lt_bw.line("bounds: (C) < Byrne-Weger when n > K+5, p <= 13"));

  // Bounds defined as p^{t-1} times their prime-field value.
  Tally lifting;
  const std::vector<BoundResult (*)(const RankParams&)> lifted = {
      main_thm_a, main_thm_b, mds_refined_bound, main_thm_d, rank1_bound,
      byrne_weger, bariffi_weger};
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned t = 2; t <= 4; ++t) {
      const Modulus m(p, t);
      for (std::size_t n = 1; n <= 14; ++n) {
        for (std::size_t K = 1; K <= n; ++K) {
          for (auto f : lifted) {
            const BoundResult hi = f(RankParams(n, K, m));
            const BoundResult lo = f(RankParams(n, K, Modulus(p, 1)));
            lifting.count();
            if (hi.applicable != lo.applicable ||
                (hi.applicable &&
                 !(*hi.value ==
                   Rational(BigInt(m.power(t - 1))) * *lo.value))) {
              lifting.fail(std::string(bound_name(hi.id)) + " " +
                           triple(n, K, m.q()));
            }
          }
        }
      }
    }
  }
  out.lines.push_back(
      lifting.line("bounds: lifted bounds equal p^{t-1} x prime-field value"));

  Tally mono;
  for (const Modulus& m : small_moduli(64)) {
    for (std::size_t K = 1; K <= 10; ++K) {
      std::int64_t prev = 0;
      for (std::size_t n = K; n <= 40; ++n) {
        const std::int64_t v = *best_bound(RankParams(n, K, m)).floor_value;
        mono.count();
        if (v < prev) mono.fail(triple(n, K, m.q()));
        prev = v;
      }
    }
  }
  out.lines.push_back(
      mono.line("bounds: best bound nondecreasing in n, q <= 64, K <= 10"));
}

// ---- sweeps -----------------------------------------------------------------

struct Grid {
  std::uint64_t q;
  std::size_t max_n;
};

void sweeps_suite(CheckResult& out, const SearchBudget& budget) {
  const std::vector<Grid> grids = {{2, 6}, {3, 5}, {5, 5},
                                   {4, 4}, {8, 4}, {9, 4}};
  SweepReport total;
  total.checked.assign(kPropertyCount, 0);
  for (const auto& g : grids) {
    for (std::size_t n = 1; n <= g.max_n; ++n) {
      for (std::size_t K = 1; K <= n; ++K) {
        SweepSpec spec{n, K, Modulus::from_order(g.q), budget};
        accumulate(total, property_sweep(spec, all_properties()));
      }
    }
  }
  for (Property p : all_properties()) {
    std::vector<const Violation*> v;
    for (const auto& x : total.violations) {
      if (x.property == p) v.push_back(&x);
    }
    const auto checked = total.checked[static_cast<std::size_t>(p)];
    std::string detail = std::to_string(checked) + " codes checked";
    if (!v.empty()) {
      std::string gen = v.front()->code;
      for (auto& ch : gen) ch = ch == '\n' ? ';' : ch;
      detail = std::to_string(v.size()) + " of " + std::to_string(checked) +
               " violated; first: " + v.front()->detail + " [" + gen + "]";
    }
    out.lines.push_back({"sweeps: property " + std::string(property_name(p)) +
                             " (q in {2,3,5,4,8,9})",
                         v.empty(), detail});
  }

  // Oracle grid.
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::uint64_t>
      phi;
  auto oracle = [&](std::size_t n, std::size_t K, std::uint64_t q) {
    const auto key = std::make_tuple(n, K, q);
    auto it = phi.find(key);
    if (it != phi.end()) return it->second;
    const PhiRecord r =
        phi_oracle(RankParams(n, K, Modulus::from_order(q)), budget);
    if (r.verdict != PhiVerdict::kExact) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle incomplete at " + triple(n, K, q));
    }
    return phi[key] = r.phi;
  };

  Tally ident;
  auto expect = [&](std::size_t n, std::size_t K, std::uint64_t q,
                    std::uint64_t want) {
    ident.count();
    const auto got = oracle(n, K, q);
    if (got != want) {
      ident.fail("Phi" + triple(n, K, q) + " = " + std::to_string(got) +
                 ", expected " + std::to_string(want));
    }
  };
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::size_t k = 1; k <= 3; ++k) expect(k, k, p, 1);
  }
  for (std::uint64_t p : {2, 3}) {
    for (std::size_t k = 1; k <= 3; ++k) expect(k + 1, k, p, 2);
  }
  for (std::size_t K = 1; K <= 2; ++K) {
    expect(K, K, 4, 2);
    expect(K, K, 9, 3);
  }
  expect(5, 2, 5, 5);
  out.lines.push_back(ident.line("sweeps: oracle identities"));

  Tally mono;
  const std::vector<Grid> oracle_grids = {{2, 5}, {3, 4}, {5, 3}, {4, 3}};
  for (const auto& g : oracle_grids) {
    for (std::size_t n = 1; n <= g.max_n; ++n) {
      for (std::size_t K = 1; K <= n; ++K) {
        const auto v = oracle(n, K, g.q);
        if (n < g.max_n) {
          mono.count();
          if (v > oracle(n + 1, K, g.q)) mono.fail("n at " + triple(n, K, g.q));
        }
        if (K < n) {
          mono.count();
          if (v < oracle(n, K + 1, g.q)) mono.fail("K at " + triple(n, K, g.q));
        }
      }
    }
  }
  out.lines.push_back(
      mono.line("sweeps: oracle nondecreasing in n, nonincreasing in K"));

  Tally parts;
  for (std::uint64_t p : {5, 7}) {
    for (std::size_t k = 1; k + 1 <= 4; ++k) {
      const auto v = oracle(k + 1, k, p);
      parts.count();
      if (2 * k < p - 1) {
        // v <= 2 + (p-3)/(2k)
        if (2 * k * v > 4 * k + (p - 3)) parts.fail("Phi" + triple(k + 1, k, p));
      } else if (v != 2) {
        parts.fail("Phi" + triple(k + 1, k, p) + " != 2");
      }
    }
    const Rational mu_p = mean_nonzero_lee_weight(Modulus(p, 1));
    for (std::size_t n = 1; n <= 6; ++n) {
      const Rational bound = Rational(BigInt(n)) * mu_p;
      const Rational v(BigInt(oracle(n, 1, p)));
      parts.count();
      if (v > bound || (v == bound && n % ((p - 1) / 2) != 0)) {
        parts.fail("Phi" + triple(n, 1, p) + " vs n mu_p");
      }
    }
  }
  out.lines.push_back(
      parts.line("sweeps: short-code and rank-1 oracle facts, p in {5,7}"));

  Tally lift;
  for (const auto& [q, p, max_n] :
       std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t>>{
           {4, 2, 3}, {8, 2, 3}, {9, 3, 3}}) {
    const std::uint64_t scale = q / p;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t K = 1; K <= n; ++K) {
        lift.count();
        if (oracle(n, K, q) > scale * oracle(n, K, p)) {
          lift.fail("Phi" + triple(n, K, q));
        }
      }
    }
  }
  out.lines.push_back(lift.line(
      "sweeps: oracle Phi(n,K,p^t) <= p^{t-1} Phi(n,K,p)"));

  Tally bound_sound;
  for (const auto& [key, v] : phi) {
    const auto& [n, K, q] = key;
    const BoundResult b = best_bound(RankParams(n, K, Modulus::from_order(q)));
    bound_sound.count();
    if (static_cast<std::int64_t>(v) > *b.floor_value) {
      bound_sound.fail("Phi" + triple(n, K, q) + " = " + std::to_string(v) +
                       " > " + b.condition_note + " = " +
                       std::to_string(*b.floor_value));
    }
  }
  out.lines.push_back(
      bound_sound.line("sweeps: oracle values within the best bound"));

  Tally rank1;
  for (std::uint64_t p : {5, 7}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      SweepSpec spec{n, 1, Modulus(p, 1), budget};
      const SweepReport r =
          property_sweep(spec, {Property::kShortCode, Property::kWood});
      rank1.count(r.codes);
      for (const auto& v : r.violations) {
        rank1.fail(std::string(property_name(v.property)) + ": " + v.detail);
      }
    }
  }
  out.lines.push_back(rank1.line(
      "sweeps: short-code and replication structure on rank-1 codes over "
      "Z_5, Z_7, n <= 6"));
}

}  // namespace

std::vector<std::string_view> suite_names() {
  return {"ring", "code", "bounds", "sweeps", "all"};
}

CheckResult run_suite(std::string_view suite, const SearchBudget& budget) {
  CheckResult out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "ring") {
    known = true;
    ring_suite(out);
  }
  if (all || suite == "code") {
    known = true;
    code_suite(out, budget);
  }
  if (all || suite == "bounds") {
    known = true;
    bounds_suite(out);
  }
  if (all || suite == "sweeps") {
    known = true;
    sweeps_suite(out, budget);
  }
  if (!known) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown suite '" + std::string(suite) +
                    "' (expected ring, code, bounds, sweeps or all)");
  }
  return out;
}

}  // namespace mldr
