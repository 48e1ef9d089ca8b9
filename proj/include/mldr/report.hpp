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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mldr/bounds.hpp"

namespace mldr {

enum class Format { kCsv, kMarkdown };

// Looks up one rank-level bound by id; throws Error(kInvalidArgument) for
// the code-level ids.
BoundResult rank_level_bound(BoundId id, const RankParams& params);

// ---- comparison table -------------------------------------------------------

struct Table2Row {
  RankParams params;
  // Floors in kTable2Columns order; nullopt where inapplicable.
  std::array<std::optional<std::int64_t>, 7> cells;
};

// The 18 parameter triples of the comparison table, in table order.
std::vector<RankParams> table2_parameters();
Table2Row table2_row(const RankParams& params);
std::vector<Table2Row> table2();

// CSV: header "n,K,q,<column names>", "-" for absent cells.
// Markdown: one pipe table with a "(n, K, p^t)" column.
std::string render_table2(const std::vector<Table2Row>& rows, Format format);

// ---- figures ------------------------------------------------------------------

struct FigurePoint {
  std::int64_t x;
  RankParams params;
};

struct FigureSpec {
  int id;
  std::string title;     // e.g. "Phi(n,3,7)"
  std::string x_label;   // "n" or "K"
  std::vector<BoundId> series;
  std::vector<FigurePoint> points;
};

inline constexpr int kFigureCount = 10;

// Throws Error(kInvalidArgument) unless 1 <= id <= kFigureCount.
FigureSpec figure_spec(int id);

struct SeriesValue {
  BoundId series;
  std::int64_t x;
  std::int64_t y;
};

// Series-major list of floored values; points where a series is
// inapplicable are omitted.
std::vector<SeriesValue> figure_values(const FigureSpec& spec);

// CSV: "# figure N: title", then "series,x,y" rows. Markdown: one table
// with x as rows and series as columns.
std::string render_figure(const FigureSpec& spec,
                          const std::vector<SeriesValue>& values,
                          Format format);

// ---- golden comparison -------------------------------------------------------

// Embedded reference data, as CSV text.
std::string_view golden_table2();
std::string_view golden_figure(int id);

struct GoldenDiff {
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

GoldenDiff compare_table2(const std::vector<Table2Row>& rows);
GoldenDiff compare_figure(const FigureSpec& spec,
                          const std::vector<SeriesValue>& values);

}  // namespace mldr
