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

#include "mldr/mldr.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "mldr/bounds.hpp"
#include "mldr/checks.hpp"
#include "mldr/code.hpp"
#include "mldr/error.hpp"
#include "mldr/report.hpp"
#include "mldr/search.hpp"

struct mldr_code {
  mldr::LinearCode code;
};

struct mldr_report {
  std::string text;
  std::string diff;
  std::size_t failures = 0;
};

namespace {

thread_local std::string last_error;

mldr_status to_status(mldr::ErrorCode code) {
  using mldr::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return MLDR_INVALID_ARGUMENT;
    case ErrorCode::kNotPrimePower:
      return MLDR_NOT_PRIME_POWER;
    case ErrorCode::kParse:
      return MLDR_PARSE;
    case ErrorCode::kRankZero:
      return MLDR_RANK_ZERO;
    case ErrorCode::kBudgetExceeded:
      return MLDR_BUDGET_EXCEEDED;
    case ErrorCode::kModulusMismatch:
      return MLDR_MODULUS_MISMATCH;
    case ErrorCode::kOverflow:
      return MLDR_OVERFLOW;
    case ErrorCode::kInapplicable:
      return MLDR_INAPPLICABLE;
    case ErrorCode::kInternal:
      return MLDR_INTERNAL;
  }
  return MLDR_INTERNAL;
}

mldr_status fail(mldr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
mldr_status guard(F&& body, std::size_t* error_line = nullptr) {
  last_error.clear();
  try {
    return body();
  } catch (const mldr::ParseError& e) {
    if (error_line) *error_line = e.line();
    return fail(MLDR_PARSE, e.what());
  } catch (const mldr::BudgetExceeded& e) {
    std::string msg = e.what();
    if (!e.progress().empty()) msg += " (" + e.progress() + ")";
    return fail(MLDR_BUDGET_EXCEEDED, msg);
  } catch (const mldr::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MLDR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MLDR_INTERNAL, e.what());
  } catch (...) {
    return fail(MLDR_INTERNAL, "unknown exception");
  }
}

mldr_status null_argument(const char* name) {
  return fail(MLDR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

void copy_truncated(char* dst, std::size_t size, const std::string& src) {
  const std::size_t n = std::min(size - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

mldr_status copy_out(const std::string& s, char* buffer, std::size_t size,
                     std::size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buffer || size < s.size() + 1) {
    return fail(MLDR_BUFFER_TOO_SMALL,
                "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return MLDR_OK;
}

void fill_bound(const mldr::BoundResult& b, mldr_bound* out) {
  *out = mldr_bound{};
  out->id = static_cast<int>(b.id);
  out->applicable = b.applicable ? 1 : 0;
  if (b.applicable) {
    copy_truncated(out->value, sizeof out->value, b.value->str());
    out->floor_value = *b.floor_value;
  }
  copy_truncated(out->note, sizeof out->note, b.condition_note);
}

mldr_status fill_bounds(const std::vector<mldr::BoundResult>& all,
                        mldr_bound* out, std::size_t capacity,
                        std::size_t* count) {
  if (count) *count = all.size();
  if (!out || capacity < all.size()) {
    return fail(MLDR_BUFFER_TOO_SMALL,
                "need room for " + std::to_string(all.size()) + " bounds");
  }
  for (std::size_t i = 0; i < all.size(); ++i) fill_bound(all[i], &out[i]);
  return MLDR_OK;
}

mldr::SearchBudget budget_of(const mldr_search_options* o) {
  mldr::SearchBudget b;
  if (o) {
    b.codeword_budget = o->codeword_budget;
    b.total_code_budget = o->total_code_budget;
    b.workers = std::max(1u, o->workers);
  }
  return b;
}

mldr::RankParams params_of(std::size_t n, std::size_t K, std::uint64_t q) {
  return mldr::RankParams(n, K, mldr::Modulus::from_order(q));
}

mldr_code* wrap(mldr::LinearCode code) {
  return new mldr_code{std::move(code)};
}

}  // namespace

extern "C" {

const char* mldr_status_name(mldr_status status) {
  switch (status) {
    case MLDR_OK:
      return "ok";
    case MLDR_INVALID_ARGUMENT:
      return "invalid argument";
    case MLDR_NOT_PRIME_POWER:
      return "not a prime power";
    case MLDR_PARSE:
      return "parse error";
    case MLDR_RANK_ZERO:
      return "rank zero";
    case MLDR_BUDGET_EXCEEDED:
      return "budget exceeded";
    case MLDR_MODULUS_MISMATCH:
      return "modulus mismatch";
    case MLDR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case MLDR_OVERFLOW:
      return "overflow";
    case MLDR_INAPPLICABLE:
      return "inapplicable";
    case MLDR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* mldr_last_error(void) { return last_error.c_str(); }

const char* mldr_version(void) { return "1.0.0"; }

mldr_status mldr_code_create(uint64_t p, unsigned t, size_t rows, size_t cols,
                             const uint64_t* entries, mldr_code** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!entries) return null_argument("entries");
  return guard([&] {
    mldr::GeneratorMatrix g(mldr::Modulus(p, t), rows, cols,
                            std::span<const std::uint64_t>(entries, rows * cols));
    *out = wrap(mldr::LinearCode(std::move(g)));
    return MLDR_OK;
  });
}

mldr_status mldr_code_parse(const char* text, mldr_code** out,
                            size_t* error_line) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!text) return null_argument("text");
  return guard(
      [&] {
        *out = wrap(mldr::LinearCode(mldr::parse_code_file(text)));
        return MLDR_OK;
      },
      error_line);
}

mldr_status mldr_code_load(const char* path, mldr_code** out,
                           size_t* error_line) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!path) return null_argument("path");
  return guard(
      [&] {
        *out = wrap(mldr::LinearCode(mldr::load_code_file(path)));
        return MLDR_OK;
      },
      error_line);
}

void mldr_code_destroy(mldr_code* code) { delete code; }

mldr_status mldr_code_info_get(const mldr_code* code, mldr_code_info* info) {
  if (!code) return null_argument("code");
  if (!info) return null_argument("info");
  return guard([&] {
    const mldr::LinearCode& c = code->code;
    const mldr::Rational k = c.kappa();
    *info = mldr_code_info{c.modulus().p(),
                           c.modulus().t(),
                           c.modulus().q(),
                           c.length(),
                           c.rank(),
                           c.free_rank(),
                           c.profile().size_exponent(),
                           mldr::to_int64(k.numerator()),
                           mldr::to_int64(k.denominator())};
    return MLDR_OK;
  });
}

mldr_status mldr_code_rank_profile(const mldr_code* code, size_t* profile,
                                   size_t capacity, size_t* count) {
  if (!code) return null_argument("code");
  const auto& k = code->code.profile().k();
  if (count) *count = k.size();
  if (!profile || capacity < k.size()) {
    return fail(MLDR_BUFFER_TOO_SMALL,
                "need room for " + std::to_string(k.size()) + " entries");
  }
  std::copy(k.begin(), k.end(), profile);
  return MLDR_OK;
}

mldr_status mldr_code_summarize(const mldr_code* code, uint64_t budget,
                                mldr_code_summary* out) {
  if (!code) return null_argument("code");
  if (!out) return null_argument("out");
  return guard([&] {
    const mldr::CodeSummary s = mldr::summarize(code->code, budget);
    *out = mldr_code_summary{s.min_hamming,      s.min_lee,
                             s.defect,           s.is_free ? 1 : 0,
                             s.is_mds_socle ? 1 : 0, s.is_mdr ? 1 : 0};
    return MLDR_OK;
  });
}

mldr_status mldr_code_socle(const mldr_code* code, mldr_code** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!code) return null_argument("code");
  return guard([&] {
    *out = wrap(mldr::socle(code->code));
    return MLDR_OK;
  });
}

mldr_status mldr_code_format(const mldr_code* code, char* buffer, size_t size,
                             size_t* needed) {
  if (!code) return null_argument("code");
  return guard([&] {
    return copy_out(mldr::format_code_file(code->code.generators()), buffer,
                    size, needed);
  });
}

const char* mldr_bound_name(int id) {
  if (id < 0 || id >= static_cast<int>(mldr::kBoundCount)) return nullptr;
  return mldr::bound_name(static_cast<mldr::BoundId>(id)).data();
}

int mldr_bound_from_name(const char* name) {
  if (!name) return -1;
  const auto id = mldr::bound_from_name(name);
  return id ? static_cast<int>(*id) : -1;
}

mldr_status mldr_bounds_rank(size_t n, size_t K, uint64_t q, mldr_bound* out,
                             size_t capacity, size_t* count) {
  return guard([&] {
    return fill_bounds(mldr::rank_level_bounds(params_of(n, K, q)), out,
                       capacity, count);
  });
}

mldr_status mldr_bounds_code(const mldr_code* code, uint64_t budget,
                             mldr_bound* out, size_t capacity, size_t* count) {
  if (!code) return null_argument("code");
  return guard([&] {
    return fill_bounds(mldr::code_level_bounds(code->code, budget), out,
                       capacity, count);
  });
}

mldr_status mldr_best_bound(size_t n, size_t K, uint64_t q, mldr_bound* out) {
  if (!out) return null_argument("out");
  return guard([&] {
    fill_bound(mldr::best_bound(params_of(n, K, q)), out);
    return MLDR_OK;
  });
}

void mldr_search_options_default(mldr_search_options* options) {
  if (!options) return;
  const mldr::SearchBudget b;
  *options = mldr_search_options{b.codeword_budget, b.total_code_budget,
                                 b.workers};
}

mldr_status mldr_phi(size_t n, size_t K, uint64_t q,
                     const mldr_search_options* options,
                     mldr_phi_result* out) {
  if (!out) return null_argument("out");
  *out = mldr_phi_result{};
  return guard([&] {
    mldr::PhiRecord r = mldr::phi_oracle(params_of(n, K, q), budget_of(options));
    out->exact = r.verdict == mldr::PhiVerdict::kExact ? 1 : 0;
    out->phi = r.phi;
    out->codes_examined = r.codes_examined;
    copy_truncated(out->note, sizeof out->note, r.note);
    if (r.witness) out->witness = wrap(std::move(*r.witness));
    return MLDR_OK;
  });
}

const char* mldr_verdict_name(mldr_verdict verdict) {
  switch (verdict) {
    case MLDR_VERDICT_PROVEN:
      return mldr::verdict_name(mldr::MldrVerdict::kProven).data();
    case MLDR_VERDICT_BY_BOUND:
      return mldr::verdict_name(mldr::MldrVerdict::kByBound).data();
    case MLDR_VERDICT_NOT_MLDR:
      return mldr::verdict_name(mldr::MldrVerdict::kNotMldr).data();
    case MLDR_VERDICT_UNKNOWN:
      return mldr::verdict_name(mldr::MldrVerdict::kUnknown).data();
  }
  return "unknown";
}

mldr_status mldr_certify(const mldr_code* code,
                         const mldr_search_options* options, int allow_oracle,
                         mldr_certificate* out) {
  if (!code) return null_argument("code");
  if (!out) return null_argument("out");
  *out = mldr_certificate{};
  return guard([&] {
    mldr::CertifyOptions opts{budget_of(options), allow_oracle != 0};
    const mldr::Certificate c = mldr::certify_mldr(code->code, opts);
    out->verdict = static_cast<mldr_verdict>(c.verdict);
    out->min_lee = c.min_lee;
    fill_bound(c.best, &out->best);
    if (c.oracle) {
      out->has_oracle = 1;
      out->oracle_phi = c.oracle->phi;
      out->oracle_exact =
          c.oracle->verdict == mldr::PhiVerdict::kExact ? 1 : 0;
    }
    copy_truncated(out->evidence, sizeof out->evidence, c.evidence);
    return MLDR_OK;
  });
}

mldr_status mldr_report_table2(mldr_format format, mldr_report** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    const auto rows = mldr::table2();
    auto report = std::make_unique<mldr_report>();
    report->text = mldr::render_table2(
        rows, format == MLDR_FORMAT_MARKDOWN ? mldr::Format::kMarkdown
                                             : mldr::Format::kCsv);
    const mldr::GoldenDiff d = mldr::compare_table2(rows);
    for (const auto& m : d.mismatches) report->diff += m + "\n";
    report->failures = d.mismatches.size();
    *out = report.release();
    return MLDR_OK;
  });
}

mldr_status mldr_report_figure(int id, mldr_format format, mldr_report** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    const mldr::FigureSpec spec = mldr::figure_spec(id);
    const auto values = mldr::figure_values(spec);
    auto report = std::make_unique<mldr_report>();
    report->text = mldr::render_figure(
        spec, values,
        format == MLDR_FORMAT_MARKDOWN ? mldr::Format::kMarkdown
                                       : mldr::Format::kCsv);
    const mldr::GoldenDiff d = mldr::compare_figure(spec, values);
    for (const auto& m : d.mismatches) report->diff += m + "\n";
    report->failures = d.mismatches.size();
    *out = report.release();
    return MLDR_OK;
  });
}

mldr_status mldr_report_check(const char* suite,
                              const mldr_search_options* options,
                              mldr_report** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!suite) return null_argument("suite");
  return guard([&] {
    const mldr::CheckResult r = mldr::run_suite(suite, budget_of(options));
    auto report = std::make_unique<mldr_report>();
    std::ostringstream text;
    for (const auto& l : r.lines) {
      text << (l.pass ? "PASS " : "FAIL ") << l.name << ": " << l.detail
           << '\n';
      if (!l.pass) report->diff += l.name + ": " + l.detail + "\n";
    }
    report->text = text.str();
    report->failures = r.failures();
    *out = report.release();
    return MLDR_OK;
  });
}

const char* mldr_report_text(const mldr_report* report) {
  return report ? report->text.c_str() : "";
}

const char* mldr_report_diff(const mldr_report* report) {
  return report ? report->diff.c_str() : "";
}

size_t mldr_report_failures(const mldr_report* report) {
  return report ? report->failures : 0;
}

void mldr_report_destroy(mldr_report* report) { delete report; }

}  // extern "C"
