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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mldr {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrimePower,
  kParse,
  kRankZero,
  kBudgetExceeded,
  kModulusMismatch,
  kOverflow,
  kInapplicable,
  kInternal,
};

// Base class of every exception thrown by the library. The C API maps the
// code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an enumeration would exceed its budget. `required` is the
// amount of work that was asked for (codewords or codes) when known, and
// `progress` describes how far a partial enumeration got.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string required,
                 std::string progress = {})
      : Error(ErrorCode::kBudgetExceeded, what),
        required_(std::move(required)),
        progress_(std::move(progress)) {}

  const std::string& required() const noexcept { return required_; }
  const std::string& progress() const noexcept { return progress_; }

 private:
  std::string required_;
  std::string progress_;
};

}  // namespace mldr
