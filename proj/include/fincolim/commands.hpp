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

// Batch commands behind the command-line tool. Each command loads fixture
// files, runs one construction or verifier and renders a line-oriented
// report:
//
//   fincolim-report 1
//   command <name>
//   input <file name> sha256:<hex>      one per loaded file, in load order
//   budget <cap>
//   seed <n>|none
//   outcome pass|fail|budget|input-error
//   error <kind> <message>              only for budget and input-error
//   tally <key> <value>                 stable order per command
//   violation <rule> <where>
//   time-ms <n>                         only when timing is requested
//
// Nothing but time-ms depends on the environment, so reports are
// byte-stable for fixed inputs, budget and seed.

#ifndef FINCOLIM_COMMANDS_HPP_
#define FINCOLIM_COMMANDS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fincolim {

inline constexpr const char* kReportHeader = "fincolim-report 1";

enum class Outcome { Pass = 0, Fail = 1, InputError = 2, Budget = 3 };

const char* to_string(Outcome o);

struct RunOptions {
  std::uint64_t budget = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::string fixture_dir;
  bool timing = false;
  /// Command specific: diagram, sitediagram, ambient, presheaf, site,
  /// vertex, emit.
  std::map<std::string, std::string> args;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, digest
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  Outcome outcome = Outcome::Pass;
  std::string error_kind;
  std::string error_message;
  std::vector<std::pair<std::string, std::string>> tallies;
  std::vector<std::pair<std::string, std::string>> violations;
  std::optional<std::int64_t> time_ms;

  int exit_code() const { return static_cast<int>(outcome); }
  std::string render() const;
};

/// The command names in a fixed order.
const std::vector<std::string>& command_names();

/// Runs `command` on `inputs`. Never throws for bad input: parse errors,
/// unknown names and invalid structures become input-error reports and
/// exhausted budgets become budget reports.
RunReport run_command(const std::string& command,
                      const std::vector<std::string>& inputs,
                      const RunOptions& options);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

}  // namespace fincolim

#endif  // FINCOLIM_COMMANDS_HPP_
