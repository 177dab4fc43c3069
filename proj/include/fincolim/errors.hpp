//  Copyright 2026 The fincolim Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef FINCOLIM_ERRORS_HPP_
#define FINCOLIM_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fincolim {

enum class ErrorKind {
  BudgetExceeded,
  SaturationExceeded,
  InvalidPresentation,
  IncompleteAssignment,
  NotFiltered,
  IllFormedCone,
  NonInvertibleComponent,
  BoundaryMismatch,
  ClosureViolation,
  NotLiftable,
  NoSolution,
  AmbiguousSolution,
  InvalidInput,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::string file, int line, int column, const std::string& msg);

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string file_;
  int line_;
  int column_;
};

/// One broken rule found by a validator. Validators never throw for
/// structural problems; they return the full list.
struct Violation {
  std::string rule;
  std::string where;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

/// Caps the number of candidate assignments an enumeration may try.
/// Exhausting it throws ErrorKind::BudgetExceeded rather than truncating.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultCap = 1'000'000;

  explicit Budget(std::uint64_t cap = kDefaultCap) : cap_(cap) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration budget of " + std::to_string(cap_) +
                      " candidates exceeded");
    }
  }

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

}  // namespace fincolim

#endif  // FINCOLIM_ERRORS_HPP_
