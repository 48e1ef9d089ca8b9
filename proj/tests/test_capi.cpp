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

#include <cstring>
#include <string>
#include <vector>

#include "mldr/mldr.h"

TEST_CASE("status names and version") {
  CHECK(std::string(mldr_status_name(MLDR_OK)) == "ok");
  CHECK(std::strlen(mldr_version()) > 0);
}

TEST_CASE("code lifecycle") {
  const std::vector<uint64_t> g = {2, 0, 0, 1};
  mldr_code* code = nullptr;
  REQUIRE(mldr_code_create(2, 2, 2, 2, g.data(), &code) == MLDR_OK);
  mldr_code_info info{};
  REQUIRE(mldr_code_info_get(code, &info) == MLDR_OK);
  CHECK(info.q == 4);
  CHECK(info.rank == 2);
  CHECK(info.free_rank == 1);
  CHECK(info.size_exponent == 3);
  CHECK(info.kappa_num == 3);
  CHECK(info.kappa_den == 2);

  size_t profile[2] = {};
  size_t count = 0;
  CHECK(mldr_code_rank_profile(code, profile, 1, &count) == MLDR_BUFFER_TOO_SMALL);
  REQUIRE(mldr_code_rank_profile(code, profile, 2, &count) == MLDR_OK);
  CHECK(count == 2);
  CHECK(profile[0] == 1);
  CHECK(profile[1] == 1);

  mldr_code* soc = nullptr;
  REQUIRE(mldr_code_socle(code, &soc) == MLDR_OK);
  mldr_code_summary s{};
  REQUIRE(mldr_code_summarize(soc, 1000, &s) == MLDR_OK);
  CHECK(s.min_lee == 2);

  size_t needed = 0;
  char small[2];
  CHECK(mldr_code_format(code, small, sizeof small, &needed) == MLDR_BUFFER_TOO_SMALL);
  std::string buf(needed, '\0');
  REQUIRE(mldr_code_format(code, buf.data(), buf.size(), nullptr) == MLDR_OK);
  mldr_code* again = nullptr;
  REQUIRE(mldr_code_parse(buf.c_str(), &again, nullptr) == MLDR_OK);
  mldr_code_info info2{};
  mldr_code_info_get(again, &info2);
  CHECK(info2.size_exponent == 3);

  mldr_code_destroy(again);
  mldr_code_destroy(soc);
  mldr_code_destroy(code);
  mldr_code_destroy(nullptr);
}

TEST_CASE("errors are reported as statuses") {
  mldr_code* code = nullptr;
  const uint64_t zero[2] = {0, 0};
  CHECK(mldr_code_create(2, 2, 1, 2, zero, &code) == MLDR_RANK_ZERO);
  CHECK(code == nullptr);
  CHECK(std::strlen(mldr_last_error()) > 0);
  CHECK(mldr_code_create(6, 1, 1, 2, zero, &code) == MLDR_NOT_PRIME_POWER);
  CHECK(mldr_code_create(5, 1, 1, 2, nullptr, &code) == MLDR_INVALID_ARGUMENT);
  size_t line = 0;
  CHECK(mldr_code_parse("3 2 2\n1 9\n", &code, &line) == MLDR_PARSE);
  CHECK(line == 2);
  CHECK(std::string(mldr_last_error()).find("out of range") != std::string::npos);
  CHECK(mldr_code_load("/nonexistent/file", &code, nullptr) != MLDR_OK);
  mldr_bound b{};
  CHECK(mldr_best_bound(3, 2, 6, &b) == MLDR_NOT_PRIME_POWER);
}

TEST_CASE("bounds through the C interface") {
  std::vector<mldr_bound> out(MLDR_BOUND_COUNT);
  size_t count = 0;
  REQUIRE(mldr_bounds_rank(4, 2, 4, out.data(), out.size(), &count) == MLDR_OK);
  CHECK(count > 0);
  bool saw_bw = false;
  for (size_t i = 0; i < count; ++i) {
    if (std::string(mldr_bound_name(out[i].id)) == "ByrneWeger") {
      saw_bw = true;
      CHECK(out[i].applicable);
      CHECK(out[i].floor_value == 6);
    }
  }
  CHECK(saw_bw);
  CHECK(mldr_bound_from_name("ByrneWeger") >= 0);
  CHECK(mldr_bound_from_name("nope") == -1);
  mldr_bound best{};
  REQUIRE(mldr_best_bound(12, 3, 11, &best) == MLDR_OK);
  CHECK(best.floor_value == 28);
  CHECK(std::string(mldr_bound_name(best.id)) == "MainThmC");
}

TEST_CASE("phi and certification through the C interface") {
  mldr_search_options opt;
  mldr_search_options_default(&opt);
  mldr_phi_result r{};
  REQUIRE(mldr_phi(5, 2, 5, &opt, &r) == MLDR_OK);
  CHECK(r.exact == 1);
  CHECK(r.phi == 5);
  REQUIRE(r.witness != nullptr);
  mldr_certificate cert{};
  REQUIRE(mldr_certify(r.witness, &opt, 1, &cert) == MLDR_OK);
  CHECK(cert.min_lee == 5);
  CHECK((cert.verdict == MLDR_VERDICT_BY_BOUND || cert.verdict == MLDR_VERDICT_PROVEN));
  mldr_code_destroy(r.witness);

  const uint64_t rep[3] = {1, 1, 1};
  mldr_code* code = nullptr;
  REQUIRE(mldr_code_create(5, 1, 1, 3, rep, &code) == MLDR_OK);
  REQUIRE(mldr_certify(code, nullptr, 1, &cert) == MLDR_OK);
  CHECK(cert.verdict == MLDR_VERDICT_NOT_MLDR);
  CHECK(cert.has_oracle);
  CHECK(cert.oracle_phi == 4);
  CHECK(std::string(mldr_verdict_name(cert.verdict)) == "not-MLDR");
  mldr_code_destroy(code);
}

TEST_CASE("reports through the C interface") {
  mldr_report* rep = nullptr;
  REQUIRE(mldr_report_table2(MLDR_FORMAT_CSV, &rep) == MLDR_OK);
  CHECK(mldr_report_failures(rep) == 0);
  CHECK(std::string(mldr_report_text(rep)).rfind("n,K,q,", 0) == 0);
  mldr_report_destroy(rep);
  for (int id = 1; id <= MLDR_FIGURE_COUNT; ++id) {
    REQUIRE(mldr_report_figure(id, MLDR_FORMAT_MARKDOWN, &rep) == MLDR_OK);
    CHECK(mldr_report_failures(rep) == 0);
    mldr_report_destroy(rep);
  }
  CHECK(mldr_report_figure(MLDR_FIGURE_COUNT + 1, MLDR_FORMAT_CSV, &rep) ==
        MLDR_INVALID_ARGUMENT);
  REQUIRE(mldr_report_check("ring", nullptr, &rep) == MLDR_OK);
  CHECK(mldr_report_failures(rep) == 0);
  CHECK(std::string(mldr_report_diff(rep)).empty());
  mldr_report_destroy(rep);
  CHECK(mldr_report_check("bogus", nullptr, &rep) == MLDR_INVALID_ARGUMENT);
}
