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

#include <string>
#include <string_view>
#include <vector>

#include "mldr/search.hpp"

namespace mldr {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, witnesses on failure
};

struct CheckResult {
  std::vector<CheckLine> lines;
  std::size_t failures() const;
};

// Suites: "ring", "code", "bounds", "sweeps", "all". Throws
// Error(kInvalidArgument) for anything else.
CheckResult run_suite(std::string_view suite, const SearchBudget& budget = {});

std::vector<std::string_view> suite_names();

}  // namespace mldr
