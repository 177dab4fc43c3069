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

// Text fixtures. A file starts with the header line
//
//   fincolim-fixture 1
//
// followed by blocks `<kind> <name> ... end`, where kind is one of
// category, poset, twocat, diagram, site, sitediagram, ambient, presheaf,
// cone. `use <path>` loads another file first. Tokens are separated by
// whitespace and `#` starts a comment. Blocks refer to earlier definitions
// by name.

#ifndef FINCOLIM_FIXTURE_HPP_
#define FINCOLIM_FIXTURE_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fincolim/category.hpp"
#include "fincolim/pseudocone.hpp"
#include "fincolim/restriction.hpp"
#include "fincolim/sites.hpp"
#include "fincolim/two_cat.hpp"

namespace fincolim {

inline constexpr const char* kFixtureHeader = "fincolim-fixture 1";

enum class FixtureKind {
  Category,
  TwoCategory,
  Diagram,
  Site,
  SiteDiagram,
  Ambient,
  Presheaf,
  Cone,
};

const char* to_string(FixtureKind kind);

struct LoadedFile {
  std::string path;   // as given or resolved
  std::string bytes;  // raw content
};

/// Everything defined by a set of fixture files, keyed by name per kind.
struct Fixture {
  std::map<std::string, CatRef> categories;
  std::map<std::string, TwoCatRef> two_cats;
  std::map<std::string, DiagramRef> diagrams;
  std::map<std::string, SiteRef> sites;
  std::map<std::string, SiteDiagram> site_diagrams;
  std::map<std::string, AmbientDiagram> ambients;
  std::map<std::string, Presheaf> presheaves;
  std::map<std::string, Pseudocone> cones;
  /// Definition order across all files.
  std::vector<std::pair<FixtureKind, std::string>> order;
  std::vector<LoadedFile> files;

  /// Last definition of `kind`, or the one called `name` when given. Throws
  /// InvalidInput when absent.
  std::string pick(FixtureKind kind, const std::string& name = "") const;
};

class FixtureLoader {
 public:
  /// `search` is consulted for `use` paths and file names that do not
  /// resolve relative to the current directory.
  explicit FixtureLoader(std::vector<std::filesystem::path> search = {});

  void load_file(const std::string& path);
  void load_string(const std::string& text, const std::string& label);

  Fixture& fixture() { return fixture_; }
  Fixture take() { return std::move(fixture_); }

 private:
  std::filesystem::path resolve(const std::string& path,
                                const std::filesystem::path& from) const;
  void parse(const std::string& text, const std::string& label,
             const std::filesystem::path& dir);

  std::vector<std::filesystem::path> search_;
  std::set<std::string> seen_;
  Fixture fixture_;
};

Fixture load_fixture(const std::string& path,
                     std::vector<std::filesystem::path> search = {});
Fixture parse_fixture(const std::string& text,
                      const std::string& label = "<string>");

// Canonical printing. Each function prints one block, without the header.
// Re-parsing the output reproduces the structure exactly, ids included.

std::string print_category(const FinCat& c);
std::string print_two_cat(const TwoCat& a);
std::string print_diagram(const TwoDiagram& d);
std::string print_site(const Site& s);
std::string print_presheaf(const Presheaf& p, const std::string& name);

/// Header plus every block `root` depends on, each category once.
std::string emit_category(const FinCat& c);
std::string emit_site(const Site& s);
std::string emit_diagram(const TwoDiagram& d);

}  // namespace fincolim

#endif  // FINCOLIM_FIXTURE_HPP_
