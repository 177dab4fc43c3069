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

#ifndef FINCOLIM_PRESENTATION_HPP_
#define FINCOLIM_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "fincolim/category.hpp"

namespace fincolim {

struct Generator {
  std::string name;
  ObjId src = 0;
  ObjId tgt = 0;
};

/// A path of generators listed in the order they are applied, starting at
/// `start`. The empty path is the identity on `start`.
struct Path {
  ObjId start = 0;
  std::vector<int> generators;
};

struct Relation {
  Path lhs;
  Path rhs;
};

struct Presentation {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

/// Saturates the paths of a presentation into a composition table.
///
/// Relations are oriented as shortlex-decreasing rewrite rules and paths are
/// reduced to normal form by rewriting. Normal forms are grown one generator
/// at a time up to length `bound`; if any extension of a length-`bound`
/// normal form is still new, SaturationExceeded is thrown. A resulting table
/// that is not a category (possible for non-confluent rules) raises
/// InvalidPresentation. Non-identity morphisms are named by their generators
/// in composition order, e.g. `g*f` for g after f.
CatRef build_category(const Presentation& p, int bound);

}  // namespace fincolim

#endif  // FINCOLIM_PRESENTATION_HPP_
