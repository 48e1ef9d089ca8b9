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

#include "mldr/report.hpp"

#include <map>
#include <sstream>

#include "mldr/error.hpp"

namespace mldr {

namespace golden {
// Defined in the generated golden_data.cpp.
extern const char* const kTable2;
extern const char* const kFigures[kFigureCount];
}  // namespace golden

BoundResult rank_level_bound(BoundId id, const RankParams& params) {
  for (auto& b : rank_level_bounds(params)) {
    if (b.id == id) return b;
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(bound_name(id)) + " is not a rank-level bound");
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  bool header_seen = false;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    out.push_back(line);
  }
  return out;
}

std::string cell(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

// ---- comparison table -------------------------------------------------------

std::vector<RankParams> table2_parameters() {
  static const std::array<std::array<std::uint64_t, 3>, 18> kRows = {{
      {4, 2, 4},   {4, 3, 4},   {5, 3, 4},   {6, 3, 4},   {5, 3, 9},
      {6, 3, 9},   {7, 3, 9},   {28, 3, 9},  {12, 3, 11}, {13, 3, 11},
      {15, 3, 11}, {5, 3, 27},  {6, 3, 27},  {28, 3, 27}, {6, 3, 25},
      {6, 3, 125}, {8, 3, 49},  {12, 3, 121},
  }};
  std::vector<RankParams> out;
  for (const auto& r : kRows) {
    out.emplace_back(r[0], r[1], Modulus::from_order(r[2]));
  }
  return out;
}

Table2Row table2_row(const RankParams& params) {
  Table2Row row{params, {}};
  const auto all = rank_level_bounds(params);
  for (std::size_t c = 0; c < kTable2Columns.size(); ++c) {
    for (const auto& b : all) {
      if (b.id == kTable2Columns[c] && b.applicable) {
        row.cells[c] = b.floor_value;
      }
    }
  }
  return row;
}

std::vector<Table2Row> table2() {
  std::vector<Table2Row> rows;
  for (const auto& p : table2_parameters()) rows.push_back(table2_row(p));
  return rows;
}

std::string render_table2(const std::vector<Table2Row>& rows, Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "n,K,q";
    for (auto id : kTable2Columns) out << ',' << bound_name(id);
    out << '\n';
    for (const auto& r : rows) {
      out << r.params.n << ',' << r.params.K << ',' << r.params.m.q();
      for (const auto& c : r.cells) out << ',' << cell(c);
      out << '\n';
    }
    return out.str();
  }
  out << "| (n, K, p^t) |";
  for (auto id : kTable2Columns) out << ' ' << bound_name(id) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < kTable2Columns.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : rows) {
    out << "| (" << r.params.n << ", " << r.params.K << ", " << r.params.m.q()
        << ") |";
    for (const auto& c : r.cells) out << ' ' << cell(c) << " |";
    out << '\n';
  }
  return out.str();
}

// ---- figures ------------------------------------------------------------------

FigureSpec figure_spec(int id) {
  using B = BoundId;
  const std::vector<B> prime4 = {B::kMainThmB, B::kChiangWolf,
                                 B::kWynerGrahamMLDR, B::kMainThmA};
  const std::vector<B> power5 = {B::kMainThmB, B::kByrneWeger,
                                 B::kAHIntegralTypeMLDR, B::kWynerGrahamMLDR,
                                 B::kMainThmA};
  FigureSpec spec{id, "", "n", {}, {}};
  // Length as a function of x, together with the fixed rank when x = n.
  auto over_n = [&](std::int64_t lo, std::int64_t hi, std::size_t K,
                    std::uint64_t q) {
    const Modulus m = Modulus::from_order(q);
    for (std::int64_t n = lo; n <= hi; ++n) {
      spec.points.push_back({n, RankParams(n, K, m)});
    }
    spec.title = "Phi(n," + std::to_string(K) + "," + std::to_string(q) + ")";
  };
  auto over_k = [&](std::int64_t lo, std::int64_t hi, std::int64_t step,
                    std::uint64_t q, auto length, std::string title) {
    const Modulus m = Modulus::from_order(q);
    for (std::int64_t K = lo; K <= hi; K += step) {
      spec.points.push_back(
          {K, RankParams(static_cast<std::size_t>(length(K)), K, m)});
    }
    spec.x_label = "K";
    spec.title = std::move(title);
  };
  switch (id) {
    case 1:
      over_n(15, 34, 3, 7);
      spec.series = prime4;
      break;
    case 2:
      over_n(24, 37, 4, 37);
      spec.series = {B::kMainThmC, B::kChiangWolf, B::kMainThmA,
                     B::kWynerGrahamMLDR};
      break;
    case 3:
      over_k(3, 39, 2, 5, [](std::int64_t K) { return 2 * K + 5; },
             "Phi(2K+5,K,5)");
      spec.series = {B::kMainThmB, B::kChiangWolf, B::kAHTypeMLDR,
                     B::kWynerGrahamMLDR, B::kMainThmA};
      break;
    case 4:
      over_n(25, 39, 10, 5);
      spec.series = prime4;
      break;
    case 5:
      over_k(5, 19, 1, 243, [](std::int64_t K) { return 2 * K; },
             "Phi(2K,K,3^5)");
      spec.series = power5;
      break;
    case 6:
      over_k(4, 19, 1, 16, [](std::int64_t K) { return 2 * K; },
             "Phi(2K,K,2^4)");
      spec.series = {B::kByrneWeger, B::kAHIntegralTypeMLDR,
                     B::kWynerGrahamMLDR, B::kMainThmA};
      break;
    case 7:
      over_k(4, 19, 1, 4, [](std::int64_t K) { return 3 * K / 2; },
             "Phi(floor(3K/2),K,2^2)");
      spec.series = power5;
      break;
    case 8:
      over_n(110, 129, 20, 125);
      spec.series = power5;
      break;
    case 9:
      over_n(9, 14, 3, 169);
      spec.series = {B::kMainThmC, B::kByrneWeger, B::kAHIntegralTypeMLDR,
                     B::kWynerGrahamMLDR, B::kMainThmA};
      break;
    case 10:
      over_n(15, 24, 11, 169);
      spec.series = power5;
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "figure id must be in 1.." + std::to_string(kFigureCount));
  }
  return spec;
}

std::vector<SeriesValue> figure_values(const FigureSpec& spec) {
  std::vector<SeriesValue> out;
  for (BoundId id : spec.series) {
    for (const auto& pt : spec.points) {
      const BoundResult b = rank_level_bound(id, pt.params);
      if (b.applicable) out.push_back({id, pt.x, *b.floor_value});
    }
  }
  return out;
}

std::string render_figure(const FigureSpec& spec,
                          const std::vector<SeriesValue>& values,
                          Format format) {
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "# figure " << spec.id << ": " << spec.title << "\nseries,x,y\n";
    for (const auto& v : values) {
      out << bound_name(v.series) << ',' << v.x << ',' << v.y << '\n';
    }
    return out.str();
  }
  std::map<std::pair<BoundId, std::int64_t>, std::int64_t> at;
  for (const auto& v : values) at[{v.series, v.x}] = v.y;
  out << "**Figure " << spec.id << "**: " << spec.title << "\n\n| "
      << spec.x_label << " |";
  for (auto id : spec.series) out << ' ' << bound_name(id) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < spec.series.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& pt : spec.points) {
    out << "| " << pt.x << " |";
    for (auto id : spec.series) {
      const auto it = at.find({id, pt.x});
      out << ' ' << (it == at.end() ? "-" : std::to_string(it->second))
          << " |";
    }
    out << '\n';
  }
  return out.str();
}

// ---- golden comparison -------------------------------------------------------

std::string_view golden_table2() { return golden::kTable2; }

std::string_view golden_figure(int id) {
  if (id < 1 || id > kFigureCount) {
    throw Error(ErrorCode::kInvalidArgument,
                "figure id must be in 1.." + std::to_string(kFigureCount));
  }
  return golden::kFigures[id - 1];
}

GoldenDiff compare_table2(const std::vector<Table2Row>& rows) {
  GoldenDiff diff;
  std::map<std::string, std::vector<std::string>> expected;
  for (auto line : data_lines(golden_table2())) {
    auto fields = split(line, ',');
    const std::string key = fields[0] + "," + fields[1] + "," + fields[2];
    expected[key] = std::vector<std::string>(fields.begin() + 3, fields.end());
  }
  std::size_t matched_rows = 0;
  for (const auto& r : rows) {
    const std::string key = std::to_string(r.params.n) + "," +
                            std::to_string(r.params.K) + "," +
                            std::to_string(r.params.m.q());
    const auto it = expected.find(key);
    if (it == expected.end()) {
      diff.mismatches.push_back("(" + key + "): row not in reference");
      continue;
    }
    ++matched_rows;
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      ++diff.compared;
      const std::string got = cell(r.cells[c]);
      if (got != it->second.at(c)) {
        diff.mismatches.push_back("(" + key + ") " +
                                  std::string(bound_name(kTable2Columns[c])) +
                                  ": expected " + it->second[c] + ", got " +
                                  got);
      }
    }
  }
  if (matched_rows != expected.size()) {
    diff.mismatches.push_back(std::to_string(expected.size() - matched_rows) +
                              " reference rows not produced");
  }
  return diff;
}

GoldenDiff compare_figure(const FigureSpec& spec,
                          const std::vector<SeriesValue>& values) {
  GoldenDiff diff;
  std::map<std::pair<std::string, std::int64_t>, std::int64_t> expected;
  for (auto line : data_lines(golden_figure(spec.id))) {
    auto f = split(line, ',');
    expected[{f.at(0), std::stoll(f.at(1))}] = std::stoll(f.at(2));
  }
  std::size_t seen = 0;
  for (const auto& v : values) {
    const std::string name(bound_name(v.series));
    const auto it = expected.find({name, v.x});
    ++diff.compared;
    if (it == expected.end()) {
      diff.mismatches.push_back(name + " x=" + std::to_string(v.x) +
                                ": not in reference (got " +
                                std::to_string(v.y) + ")");
      continue;
    }
    ++seen;
    if (it->second != v.y) {
      diff.mismatches.push_back(name + " x=" + std::to_string(v.x) +
                                ": expected " + std::to_string(it->second) +
                                ", got " + std::to_string(v.y));
    }
  }
  if (seen != expected.size()) {
    diff.mismatches.push_back(std::to_string(expected.size() - seen) +
                              " reference points not produced");
  }
  return diff;
}

}  // namespace mldr
