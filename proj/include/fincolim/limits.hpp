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

#ifndef FINCOLIM_LIMITS_HPP_
#define FINCOLIM_LIMITS_HPP_

#include <optional>
#include <string>

#include "fincolim/category.hpp"

namespace fincolim {

bool is_cone(const FinCat& c, const FiniteDiagram& d, const Cone& cone);

struct UniversalCheck {
  bool ok = true;
  std::string reason;  // empty when ok
};

/// Exhaustive universal-property test: for every object w, the map
/// hom(w, vertex) -> cones(w) given by postcomposition with the legs must be
/// a bijection.
UniversalCheck check_limit(const FinCat& c, const FiniteDiagram& d,
                           const Cone& cone, Budget budget = Budget{});

FiniteDiagram empty_diagram();
FiniteDiagram discrete_pair(ObjId a, ObjId b);
FiniteDiagram parallel_pair(const FinCat& c, MorId f, MorId g);
FiniteDiagram cospan(const FinCat& c, MorId f, MorId g);

/// Limit cone of `d` assembled from the chosen terminal, binary products
/// and equalizers: product of the nodes, then one equalizer per edge.
/// Throws IncompleteAssignment when a required chosen limit is absent.
Cone chosen_limit(const FinCat& c, const FiniteDiagram& d);

/// Checks that every chosen cone is well typed and limiting, and that a
/// declared-complete assignment is total.
ValidationReport validate_limits(const FinCat& c, Budget budget = Budget{});

/// Complete assignment for a thin category whose finite limits exist
/// (meets and a top element), or nullopt otherwise.
std::optional<LimitAssignment> poset_limits(const FinCat& c);

/// Copy of `c` carrying `limits`.
CatRef with_limits(const CatRef& c, LimitAssignment limits);

struct ExactnessCheck {
  bool exact = true;
  std::string counterexample;  // which chosen cone fails to map to a limit
};

/// Whether `f` sends every chosen limit cone of its source (terminal,
/// products, equalizers) to a limiting cone of its target. Only the source
/// assignment is consulted; the target is checked by universal property.
ExactnessCheck check_exact(const Functor& f, Budget budget = Budget{});

}  // namespace fincolim

#endif  // FINCOLIM_LIMITS_HPP_
