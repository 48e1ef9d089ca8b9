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

// Command-line front end. Talks to the library only through mldr.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mldr/mldr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Column order of the comparison table.
const char* const kTableColumns[] = {
    "WynerGrahamMLDR", "AHIntegralTypeMLDR", "AHTypeMLDR", "ByrneWeger",
    "MainThmA",        "MainThmB",           "MainThmC"};

struct Options {
  std::size_t n = 0;
  std::size_t K = 0;
  std::uint64_t q = 0;
  std::string code;
  std::string out;
  std::string format = "csv";
  std::string suite = "all";
  int id = 0;
  std::uint64_t budget = 0;
  std::uint64_t max_codes = 0;
  unsigned workers = 1;
  bool no_oracle = false;
};

int report_error(mldr_status s) {
  std::cerr << "error: " << mldr_last_error() << '\n';
  return s == MLDR_PARSE || s == MLDR_INVALID_ARGUMENT ||
                 s == MLDR_NOT_PRIME_POWER
             ? kExitUsage
             : kExitFailure;
}

mldr_search_options search_options(const Options& o) {
  mldr_search_options s;
  mldr_search_options_default(&s);
  if (o.budget) s.codeword_budget = o.budget;
  if (o.max_codes) s.total_code_budget = o.max_codes;
  s.workers = o.workers;
  return s;
}

mldr_format format_of(const Options& o) {
  return o.format == "md" ? MLDR_FORMAT_MARKDOWN : MLDR_FORMAT_CSV;
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << o.out << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

std::string cell(const mldr_bound& b) {
  return b.applicable ? std::to_string(b.floor_value) : "-";
}

int load(const std::string& path, mldr_code** code) {
  std::size_t line = 0;
  const mldr_status s = mldr_code_load(path.c_str(), code, &line);
  if (s != MLDR_OK) return report_error(s);
  return kExitOk;
}

int cmd_bounds(const Options& o) {
  mldr_bound all[MLDR_BOUND_COUNT];
  std::size_t count = 0;
  mldr_status s = mldr_bounds_rank(o.n, o.K, o.q, all, MLDR_BOUND_COUNT, &count);
  if (s != MLDR_OK) return report_error(s);

  std::string table_line;
  for (const char* name : kTableColumns) {
    const int id = mldr_bound_from_name(name);
    for (std::size_t i = 0; i < count; ++i) {
      if (all[i].id == id) {
        table_line += (table_line.empty() ? "" : " ") + cell(all[i]);
      }
    }
  }
  std::cout << table_line << '\n';
  std::printf("%-20s %-10s %-14s %-8s %s\n", "bound", "applies", "value",
              "floor", "condition");
  for (std::size_t i = 0; i < count; ++i) {
    const mldr_bound& b = all[i];
    std::printf("%-20s %-10s %-14s %-8s %s\n", mldr_bound_name(b.id),
                b.applicable ? "yes" : "no", b.applicable ? b.value : "-",
                cell(b).c_str(), b.note);
  }
  mldr_bound best;
  s = mldr_best_bound(o.n, o.K, o.q, &best);
  if (s != MLDR_OK) return report_error(s);
  std::cout << "best " << best.floor_value << " via "
            << mldr_bound_name(best.id) << '\n';
  return kExitOk;
}

int cmd_analyze(const Options& o) {
  mldr_code* code = nullptr;
  if (int rc = load(o.code, &code)) return rc;
  mldr_code_info info;
  mldr_code_summary sum;
  std::size_t profile[64];
  std::size_t t = 0;
  mldr_status s = mldr_code_info_get(code, &info);
  if (s == MLDR_OK) s = mldr_code_rank_profile(code, profile, 64, &t);
  if (s == MLDR_OK) s = mldr_code_summarize(code, search_options(o).codeword_budget, &sum);
  if (s != MLDR_OK) {
    mldr_code_destroy(code);
    return report_error(s);
  }
  std::cout << "ring        Z_" << info.q << " (p = " << info.p
            << ", t = " << info.t << ")\n";
  std::cout << "length      " << info.n << '\n';
  std::cout << "profile     (";
  for (std::size_t i = 0; i < t; ++i) std::cout << (i ? "," : "") << profile[i];
  std::cout << ")\n";
  std::cout << "rank K      " << info.rank << '\n';
  std::cout << "free rank   " << info.free_rank << '\n';
  std::cout << "kappa       " << info.kappa_num
            << (info.kappa_den == 1 ? "" : "/" + std::to_string(info.kappa_den))
            << '\n';
  std::cout << "|C|         " << info.p << "^" << info.size_exponent << '\n';
  std::cout << "d_H         " << sum.min_hamming << '\n';
  std::cout << "d_L         " << sum.min_lee << '\n';
  std::cout << "defect      " << sum.defect << '\n';
  std::cout << "free        " << (sum.is_free ? "yes" : "no") << '\n';
  std::cout << "MDS socle   " << (sum.is_mds_socle ? "yes" : "no") << '\n';
  std::cout << "MDR         " << (sum.is_mdr ? "yes" : "no") << '\n';

  mldr_bound all[MLDR_BOUND_COUNT];
  std::size_t count = 0;
  s = mldr_bounds_code(code, search_options(o).codeword_budget, all,
                       MLDR_BOUND_COUNT, &count);
  mldr_code_destroy(code);
  if (s != MLDR_OK) return report_error(s);
  bool violated = false;
  std::cout << "code-level bounds:\n";
  for (std::size_t i = 0; i < count; ++i) {
    const mldr_bound& b = all[i];
    if (!b.applicable) {
      std::printf("  %-20s -  (%s)\n", mldr_bound_name(b.id), b.note);
      continue;
    }
    const bool ok = static_cast<std::int64_t>(sum.min_lee) <= b.floor_value;
    violated = violated || !ok;
    std::printf("  %-20s %-8s floor %-6lld %s\n", mldr_bound_name(b.id),
                b.value, static_cast<long long>(b.floor_value),
                ok ? "holds" : "VIOLATED (d_L exceeds bound)");
  }
  return violated ? kExitFailure : kExitOk;
}

void print_code(const mldr_code* code) {
  std::size_t needed = 0;
  mldr_code_format(code, nullptr, 0, &needed);
  std::string text(needed, '\0');
  if (mldr_code_format(code, text.data(), text.size(), &needed) == MLDR_OK) {
    text.resize(needed - 1);
    std::cout << text;
  }
}

int cmd_phi(const Options& o) {
  const mldr_search_options opts = search_options(o);
  mldr_phi_result r;
  const mldr_status s = mldr_phi(o.n, o.K, o.q, &opts, &r);
  if (s != MLDR_OK) return report_error(s);
  const std::string triple = "(" + std::to_string(o.n) + "," +
                             std::to_string(o.K) + "," + std::to_string(o.q) +
                             ")";
  if (r.exact) {
    std::cout << "Phi" << triple << " = " << r.phi << '\n';
    std::cout << "verdict exact over " << r.codes_examined << " codes\n";
  } else {
    std::cout << "Phi" << triple << " >= " << r.phi << '\n';
    std::cout << "verdict unknown (budget exhausted after " << r.codes_examined
              << " codes): " << r.note << '\n';
  }
  if (r.witness) {
    std::cout << "witness:\n";
    print_code(r.witness);
    mldr_code_destroy(r.witness);
  }
  return kExitOk;
}

int cmd_certify(const Options& o) {
  mldr_code* code = nullptr;
  if (int rc = load(o.code, &code)) return rc;
  const mldr_search_options opts = search_options(o);
  mldr_certificate c;
  const mldr_status s = mldr_certify(code, &opts, o.no_oracle ? 0 : 1, &c);
  mldr_code_destroy(code);
  if (s != MLDR_OK) return report_error(s);
  std::cout << "verdict  " << mldr_verdict_name(c.verdict) << '\n';
  std::cout << "d_L      " << c.min_lee << '\n';
  std::cout << "best     " << c.best.floor_value << " via "
            << mldr_bound_name(c.best.id) << '\n';
  if (c.has_oracle) {
    std::cout << "oracle   " << (c.oracle_exact ? "Phi = " : "Phi >= ")
              << c.oracle_phi << '\n';
  }
  std::cout << "evidence " << c.evidence << '\n';
  return kExitOk;
}

int finish_report(const Options& o, mldr_status s, mldr_report* report) {
  if (s != MLDR_OK) return report_error(s);
  int rc = emit(o, mldr_report_text(report));
  if (mldr_report_failures(report) > 0) {
    std::cerr << "mismatches against the reference:\n"
              << mldr_report_diff(report);
    rc = kExitFailure;
  }
  mldr_report_destroy(report);
  return rc;
}

int cmd_table2(const Options& o) {
  mldr_report* report = nullptr;
  const mldr_status s = mldr_report_table2(format_of(o), &report);
  return finish_report(o, s, report);
}

int cmd_figure(const Options& o) {
  mldr_report* report = nullptr;
  const mldr_status s = mldr_report_figure(o.id, format_of(o), &report);
  return finish_report(o, s, report);
}

int cmd_check(const Options& o) {
  const mldr_search_options opts = search_options(o);
  mldr_report* report = nullptr;
  const mldr_status s = mldr_report_check(o.suite.c_str(), &opts, &report);
  if (s != MLDR_OK) return report_error(s);
  std::cout << mldr_report_text(report);
  const std::size_t failures = mldr_report_failures(report);
  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " check(s)"
                         : std::string("all checks passed"))
            << '\n';
  mldr_report_destroy(report);
  return failures ? kExitFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, exhaustive search and certification for linear "
               "codes over Z_{p^t} in the Lee metric"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "code length")->required();
    sub->add_option("--K", o.K, "rank")->required();
    sub->add_option("--q", o.q, "alphabet size p^t")->required();
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget,
                    "largest code size enumerated per code");
    sub->add_option("--max-codes", o.max_codes,
                    "largest number of codes an enumeration may visit");
    sub->add_option("--workers", o.workers, "worker threads")
        ->check(CLI::Range(1u, 256u));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    sub->add_option("--out", o.out, "write to this file instead of stdout");
  };

  auto* bounds = app.add_subcommand("bounds", "every rank-level bound");
  add_params(bounds);
  auto* analyze = app.add_subcommand("analyze", "parameters of a code file");
  analyze->add_option("--code", o.code, "code file")->required();
  add_search(analyze);
  auto* phi = app.add_subcommand("phi", "exact Phi(n,K,q) by exhaustive search");
  add_params(phi);
  add_search(phi);
  auto* certify = app.add_subcommand("certify", "MLDR certificate for a code");
  certify->add_option("--code", o.code, "code file")->required();
  certify->add_flag("--no-oracle", o.no_oracle, "do not run the search");
  add_search(certify);
  auto* table2 = app.add_subcommand("table2", "comparison table");
  add_output(table2);
  auto* figure = app.add_subcommand("figure", "series of one figure");
  figure->add_option("--id", o.id, "figure number")
      ->required()
      ->check(CLI::Range(1, MLDR_FIGURE_COUNT));
  add_output(figure);
  auto* check = app.add_subcommand("check", "property suites");
  check->add_option("--suite", o.suite, "ring, code, bounds, sweeps or all")
      ->check(CLI::IsMember({"ring", "code", "bounds", "sweeps", "all"}));
  add_search(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*bounds) return cmd_bounds(o);
  if (*analyze) return cmd_analyze(o);
  if (*phi) return cmd_phi(o);
  if (*certify) return cmd_certify(o);
  if (*table2) return cmd_table2(o);
  if (*figure) return cmd_figure(o);
  return cmd_check(o);
}
