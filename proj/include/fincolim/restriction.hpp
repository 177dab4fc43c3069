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

#ifndef FINCOLIM_RESTRICTION_HPP_
#define FINCOLIM_RESTRICTION_HPP_

#include <string>
#include <vector>

#include "fincolim/category.hpp"
#include "fincolim/two_cat.hpp"

namespace fincolim {

/// A diagram of finitely complete categories with exact transitions and a
/// generator set per fiber.
struct AmbientDiagram {
  DiagramRef diagram;
  std::vector<std::vector<ObjId>> generators;
};

ValidationReport validate_ambient(const AmbientDiagram& a,
                                  Budget budget = Budget{});

/// Full subcategory on `objects` (in the given order). Chosen limits whose
/// data lies inside are kept; the assignment is complete when they cover
/// every pair.
CatRef full_subcategory(const CatRef& c, const std::vector<ObjId>& objects,
                        const std::string& name);

/// Least superset of `s` containing the chosen terminal and closed under
/// chosen binary products and chosen equalizers of arrows between members.
/// Sorted.
std::vector<ObjId> finite_limit_closure(const FinCat& e,
                                        const std::vector<ObjId>& s);

struct RestrictionResult {
  DiagramRef ambient;
  std::vector<std::vector<ObjId>> subsets;  // sorted object ids per fiber
  std::vector<Functor> inclusions;
  /// Null when some transition does not restrict.
  DiagramRef restricted;
  int rounds = 0;
};

/// Alternates closure and transport: C0 = closure(R); R(n+1) is the union
/// of the images of Cn along every 1-cell into the fiber; stops at the first
/// round that changes nothing. `rounds` counts the transport steps taken.
RestrictionResult restrict_diagram(const AmbientDiagram& a);

/// Assembles the sub-diagram on given object subsets, without checking
/// closure. Used for the result of restrict_diagram and for hand-built
/// candidates.
RestrictionResult make_restriction(const DiagramRef& ambient,
                                   std::vector<std::vector<ObjId>> subsets);

/// Closure under chosen limits, containment of transported subsets, strict
/// commutation of every restricted square and componentwise restriction of
/// every 2-cell.
ValidationReport verify_restriction(const RestrictionResult& r,
                                    const AmbientDiagram* generators = nullptr);

}  // namespace fincolim

#endif  // FINCOLIM_RESTRICTION_HPP_
