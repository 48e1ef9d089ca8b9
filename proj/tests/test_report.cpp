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

#include <sstream>

#include "mldr/report.hpp"

using namespace mldr;

namespace {

std::vector<std::optional<std::int64_t>> row_of(std::size_t n, std::size_t K,
                                                std::uint64_t q) {
  const auto r = table2_row(RankParams(n, K, Modulus::from_order(q)));
  return {r.cells.begin(), r.cells.end()};
}

using Cells = std::vector<std::optional<std::int64_t>>;
constexpr std::nullopt_t X = std::nullopt;

std::int64_t figure_y(int id, BoundId series, std::int64_t x) {
  const auto spec = figure_spec(id);
  for (const auto& v : figure_values(spec)) {
    if (v.series == series && v.x == x) return v.y;
  }
  FAIL("point not plotted");
  return -1;
}

}  // namespace

TEST_CASE("table rows") {
  CHECK(row_of(4, 2, 4) == Cells{5, 5, 6, 6, 4, 4, X});
  CHECK(row_of(12, 3, 11) == Cells{32, 30, 45, 30, 30, X, 28});
  CHECK(row_of(6, 3, 125) == Cells{189, 189, 310, 150, 150, X, 125});
  CHECK(row_of(4, 3, 4) == Cells{4, 5, 6, 4, 4, X, X});
}

TEST_CASE("table matches the embedded reference") {
  const auto rows = table2();
  CHECK(rows.size() == 18);
  const auto diff = compare_table2(rows);
  CHECK(diff.compared == 18 * 7);
  CHECK_MESSAGE(diff.ok(), diff.mismatches.front());
  const auto csv = render_table2(rows, Format::kCsv);
  CHECK(csv == golden_table2());
  const auto md = render_table2(rows, Format::kMarkdown);
  CHECK(md.find("| (4, 2, 4) |") != std::string::npos);
}

TEST_CASE("figure anchors") {
  CHECK(figure_y(1, BoundId::kWynerGrahamMLDR, 15) == 25);
  CHECK(figure_y(1, BoundId::kMainThmB, 34) == 62);
  CHECK(figure_y(2, BoundId::kMainThmC, 24) == 195);
  CHECK(figure_y(4, BoundId::kMainThmB, 25) == 22);
  CHECK(figure_y(6, BoundId::kMainThmA, 4) == 32);
  CHECK(figure_y(10, BoundId::kMainThmB, 15) == 182);
}

TEST_CASE("every figure matches the embedded reference") {
  std::size_t points = 0;
  for (int id = 1; id <= kFigureCount; ++id) {
    CAPTURE(id);
    const auto spec = figure_spec(id);
    const auto values = figure_values(spec);
    const auto diff = compare_figure(spec, values);
    CHECK(diff.ok());
    CHECK(diff.compared > 0);
    points += diff.compared;
    CHECK(render_figure(spec, values, Format::kCsv) == golden_figure(id));
  }
  CHECK(points == 690);
  CHECK_THROWS(figure_spec(0));
  CHECK_THROWS(figure_spec(kFigureCount + 1));
}

TEST_CASE("a perturbed value is reported") {
  auto rows = table2();
  rows[0].cells[0] = *rows[0].cells[0] + 1;
  CHECK(compare_table2(rows).mismatches.size() == 1);
  const auto spec = figure_spec(3);
  auto values = figure_values(spec);
  values.back().y += 1;
  CHECK(compare_figure(spec, values).mismatches.size() == 1);
}
