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

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond plain integer types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;
using Span = std::set<Vec>;

inline std::uint64_t lee(std::uint64_t a, std::uint64_t q) {
  a %= q;
  return std::min(a, q - a);
}

inline std::uint64_t lee(const Vec& v, std::uint64_t q) {
  std::uint64_t w = 0;
  for (auto x : v) w += lee(x, q);
  return w;
}

inline std::uint64_t hamming(const Vec& v) {
  return static_cast<std::uint64_t>(
      std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

// Mean nonzero Lee weight as a reduced fraction, by summation.
inline std::pair<std::uint64_t, std::uint64_t> mu(std::uint64_t q) {
  std::uint64_t sum = 0;
  for (std::uint64_t a = 1; a < q; ++a) sum += lee(a, q);
  const std::uint64_t g = std::gcd(sum, q - 1);
  return {sum / g, (q - 1) / g};
}

// Closure of the rows under addition (hence under Z_q-scaling).
inline Span span(const std::vector<Vec>& rows, std::uint64_t q,
                 std::size_t n) {
  Span s{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier) {
      for (const auto& r : rows) {
        Vec w(n);
        for (std::size_t i = 0; i < n; ++i) {
          w[i] = static_cast<std::uint32_t>((v[i] + r[i]) % q);
        }
        if (s.insert(w).second) next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return s;
}

inline std::uint64_t min_lee(const Span& s, std::uint64_t q) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& v : s) {
    const auto w = lee(v, q);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

inline std::uint64_t min_hamming(const Span& s) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& v : s) {
    const auto w = hamming(v);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

// Rank of a p-group code: |C / pC| = p^K.
inline std::size_t rank(const Span& s, std::uint64_t p, std::uint64_t q) {
  Span scaled;
  for (const auto& v : s) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      w[i] = static_cast<std::uint32_t>(v[i] * p % q);
    }
    scaled.insert(w);
  }
  std::size_t ratio = s.size() / scaled.size();
  std::size_t K = 0;
  while (ratio > 1) {
    ratio /= p;
    ++K;
  }
  return K;
}

// Every distinct submodule of (Z_q)^n generated by at most `max_rows`
// vectors, keyed by codeword set, with its rank. Feasible for q^(n*rows)
// up to a few million.
inline std::map<Span, std::size_t> all_codes(std::uint64_t p, std::uint64_t q,
                                             std::size_t n,
                                             std::size_t max_rows) {
  std::vector<Vec> vectors;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t x = 0; x < total; ++x) {
    Vec v(n);
    std::uint64_t y = x;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint32_t>(y % q);
      y /= q;
    }
    vectors.push_back(v);
  }
  std::map<Span, std::size_t> out;
  std::vector<std::size_t> idx(max_rows, 0);
  while (true) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(vectors[i]);
    Span s = span(rows, q, n);
    if (s.size() > 1 && !out.count(s)) {
      const std::size_t K = rank(s, p, q);
      out.emplace(std::move(s), K);
    }
    std::size_t k = 0;
    while (k < max_rows && ++idx[k] == vectors.size()) idx[k++] = 0;
    if (k == max_rows) break;
  }
  return out;
}

// Phi(n, K, q) over all codes generated by at most K rows.
inline std::uint64_t phi(std::uint64_t p, std::uint64_t q, std::size_t n,
                         std::size_t K) {
  std::uint64_t best = 0;
  for (const auto& [s, rank] : all_codes(p, q, n, K)) {
    if (rank == K) best = std::max(best, min_lee(s, q));
  }
  return best;
}

// [n choose k]_p by the q-Pascal recurrence.
inline std::uint64_t gaussian(std::uint64_t n, std::uint64_t k,
                              std::uint64_t p) {
  if (k == 0 || k == n) return 1;
  if (k > n) return 0;
  std::uint64_t pk = 1;
  for (std::uint64_t i = 0; i < k; ++i) pk *= p;
  return gaussian(n - 1, k - 1, p) + pk * gaussian(n - 1, k, p);
}

}  // namespace oracle
