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

// Command-line front end. Prints the report on stdout (or writes it to
// --report) and exits with the report outcome: 0 pass, 1 fail, 2 input
// error, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fincolim.h"

namespace {

struct SubcommandArgs {
  std::vector<std::string> files;
  std::map<std::string, std::string> args;
};

// Command-specific flags, keyed by command name.
const std::map<std::string, std::vector<std::pair<std::string, std::string>>>&
command_flags() {
  static const std::map<std::string,
                        std::vector<std::pair<std::string, std::string>>>
      flags = {
          {"validate", {}},
          {"colim",
           {{"diagram", "Diagram to use (default: last defined)"},
            {"emit", "Write the colimit category as a fixture to this path"}}},
          {"site-colim",
           {{"sitediagram", "Site diagram to use (default: last defined)"},
            {"emit", "Write the colimit site as a fixture to this path"}}},
          {"restrict", {{"ambient", "Ambient diagram (default: last defined)"}}},
          {"verify-bicolim",
           {{"diagram", "Diagram to use (default: last defined)"},
            {"vertex", "Vertex category: a name or a fixture file"}}},
          {"verify-site",
           {{"sitediagram", "Site diagram to use (default: last defined)"},
            {"vertex", "Vertex site: a name or a fixture file"}}},
          {"sheaf-check",
           {{"presheaf", "Presheaf to check (default: last defined)"},
            {"site", "Site to check against (default: last over the same "
                     "category, else the trivial topology)"}}},
      };
  return flags;
}

const char* summary(const std::string& command) {
  static const std::map<std::string, const char*> text = {
      {"validate", "Validate every definition in the fixtures"},
      {"colim", "Build the pseudocolimit of a diagram of categories"},
      {"site-colim", "Build the colimit site of a diagram of sites"},
      {"restrict", "Close generator sets under finite limits and transitions"},
      {"verify-bicolim", "Check the universal property against a vertex"},
      {"verify-site", "Check the site universal property against a vertex"},
      {"sheaf-check", "Check the sheaf condition of a presheaf"},
  };
  return text.at(command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite pseudocolimits of categories and sites"};
  app.require_subcommand(1);

  std::uint64_t budget = 1'000'000;
  std::string fixture_dir;
  std::string report_path;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  app.add_option("--budget", budget, "Cap on candidates per enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--fixture-dir", fixture_dir, "Extra directory for fixture lookup")
      ->check(CLI::ExistingDirectory);
  app.add_option("--report", report_path, "Write the report here instead of stdout");
  app.add_option("--seed", seed, "Seed for the randomized refinement order");
  app.add_flag("--timing", timing, "Append wall time to the report");

  std::map<std::string, SubcommandArgs> parsed;
  std::map<std::string, CLI::App*> subs;
  for (size_t i = 0; i < fc_command_count(); ++i) {
    const std::string name = fc_command_name(i);
    CLI::App* sub = app.add_subcommand(name, summary(name));
    sub->fallthrough();
    SubcommandArgs& a = parsed[name];
    sub->add_option("files", a.files, "Fixture files")->required();
    for (const auto& [flag, help] : command_flags().at(name)) {
      sub->add_option("--" + flag, a.args[flag], help);
    }
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help exits 0; every usage error is an input error.
    const int code = app.exit(e);
    return code == 0 ? 0 : FC_INPUT;
  }

  std::unique_ptr<fc_session, decltype(&fc_session_free)> session(
      fc_session_new(), &fc_session_free);
  if (!session) {
    std::cerr << "fincolim: out of memory\n";
    return FC_INTERNAL;
  }
  fc_session_set_budget(session.get(), budget);
  if (seed) fc_session_set_seed(session.get(), *seed);
  if (!fixture_dir.empty()) fc_session_set_fixture_dir(session.get(), fixture_dir.c_str());
  fc_session_set_timing(session.get(), timing ? 1 : 0);

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    const SubcommandArgs& a = parsed.at(name);
    for (const auto& [key, value] : a.args) {
      if (!value.empty()) fc_session_set_arg(session.get(), key.c_str(), value.c_str());
    }
    std::vector<const char*> files;
    for (const std::string& f : a.files) files.push_back(f.c_str());
    fc_report* report = nullptr;
    const fc_status status =
        fc_run(session.get(), name.c_str(), files.data(), files.size(), &report);
    if (!report) {
      std::cerr << "fincolim: " << fc_last_error(session.get()) << '\n';
      return status;
    }
    const std::string text = fc_report_text(report);
    const int code = fc_report_exit_code(report);
    fc_report_free(report);
    if (report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) {
        std::cerr << "fincolim: cannot write " << report_path << '\n';
        return FC_INPUT;
      }
      out << text;
    }
    return code;
  }
  return FC_INTERNAL;
}
