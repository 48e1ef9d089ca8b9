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

#include "mldr/properties.hpp"

using namespace mldr;

namespace {

SweepReport sweep(std::size_t n, std::size_t K, std::uint64_t q,
                  std::vector<Property> props = all_properties()) {
  SweepSpec spec{n, K, Modulus::from_order(q), SearchBudget{}};
  return property_sweep(spec, props);
}

std::string describe(const SweepReport& r) {
  std::string out;
  for (const auto& v : r.violations) {
    out += std::string(property_name(v.property)) + ": " + v.detail + "\n" +
           v.code;
  }
  return out;
}

}  // namespace

TEST_CASE("property names round trip") {
  CHECK(all_properties().size() == kPropertyCount);
  for (auto p : all_properties()) {
    CHECK(property_from_name(property_name(p)) == p);
  }
  CHECK_FALSE(property_from_name("bogus"));
}

TEST_CASE("applicability gates") {
  const LinearCode field(GeneratorMatrix(Modulus(5, 1), {{1, 2, 3}}));
  const LinearCode ring(GeneratorMatrix(Modulus(2, 2), {{1, 2, 3}, {0, 2, 2}}));
  CHECK(property_applies(Property::kShortCode, field));
  CHECK_FALSE(property_applies(Property::kShortCode, ring));
  CHECK(property_applies(Property::kWood, field));
  CHECK_FALSE(property_applies(Property::kWood, ring));
  CHECK_FALSE(property_applies(Property::kDefectRange, field));
  CHECK(property_applies(Property::kSoundness, ring));
}

TEST_CASE("check_property flags a forged summary") {
  const LinearCode c(GeneratorMatrix(Modulus(5, 1), {{1, 1, 0}, {0, 0, 1}}));
  CodeSummary s = summarize(c);
  CHECK_FALSE(check_property(Property::kSingleton, c, s, 1000));
  s.min_hamming = 5;
  CHECK(check_property(Property::kSingleton, c, s, 1000).has_value());
}

TEST_CASE("sweeps are clean on small parameters") {
  struct Case {
    std::size_t n, K;
    std::uint64_t q;
  };
  for (const Case c : {Case{4, 2, 2}, Case{5, 3, 2}, Case{4, 2, 3},
                       Case{3, 1, 5}, Case{3, 2, 4}, Case{3, 2, 8},
                       Case{2, 2, 9}, Case{4, 1, 7}}) {
    CAPTURE(c.n);
    CAPTURE(c.K);
    CAPTURE(c.q);
    const auto r = sweep(c.n, c.K, c.q);
    CHECK(r.codes > 0);
    CHECK_MESSAGE(r.violations.empty(), describe(r));
    CHECK(r.checked.size() == kPropertyCount);
  }
}

TEST_CASE("accumulate merges counts") {
  auto a = sweep(3, 1, 2, {Property::kSize});
  const auto b = sweep(3, 2, 2, {Property::kSize});
  const auto before = a.codes;
  accumulate(a, b);
  CHECK(a.codes == before + b.codes);
  CHECK(a.checked[static_cast<std::size_t>(Property::kSize)] == a.codes);
}
