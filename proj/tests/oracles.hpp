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

// Naive reference implementations used as test oracles. They only read the
// raw composition tables and never call the library's enumerators or
// checkers, so agreement with the library is evidence rather than
// tautology.

#ifndef FINCOLIM_TESTS_ORACLES_HPP_
#define FINCOLIM_TESTS_ORACLES_HPP_

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "fincolim/category.hpp"
#include "fincolim/pseudocone.hpp"
#include "fincolim/sites.hpp"
#include "fincolim/two_cat.hpp"

namespace oracle {

using namespace fincolim;

/// Morphisms a -> b found by scanning the morphism list.
std::vector<MorId> scan_hom(const FinCat& c, ObjId a, ObjId b);

bool is_iso(const FinCat& c, MorId f);

/// Identity laws, closure of the table and associativity over all triples.
bool is_category(const FinCat& c);

/// (object map, morphism map) of every functor, by trying every object map
/// and every morphism map into the matching hom-sets.
std::set<std::pair<std::vector<int>, std::vector<int>>> functors(
    const FinCat& c, const FinCat& d);

/// Component vectors of every natural transformation f => g.
std::set<std::vector<int>> nat_trans(const Functor& f, const Functor& g);

/// Whether every cone over `d` with vertex w factors through `cone`
/// through exactly one morphism.
bool is_limit(const FinCat& c, const FiniteDiagram& d, const Cone& cone);

/// The pseudocone equations evaluated directly from the tables: typing,
/// invertibility and naturality of every coherence cell, the unit,
/// composition and 2-cell equations.
bool pseudocone_holds(const Pseudocone& h);

/// Naturality of each component family and the modification equation.
bool modification_holds(const Modification& phi);

/// Functor equality on objects and morphisms.
bool same_functor(const Functor& a, const Functor& b);

/// h o g as raw maps.
Functor compose_raw(const Functor& h, const Functor& g);

// Sheaf condition on a thin site from the definition, with meets found by
// scanning.
bool thin_sheaf(const Presheaf& p, const Site& s);

// Functoriality of a presheaf straight from its tables.
bool presheaf_functorial(const Presheaf& p);

// Visits every presheaf with value-sets of size at most `max`, functorial or
// not.
void each_presheaf(const CatRef& c, int max,
                   const std::function<void(const Presheaf&)>& visit);

}  // namespace oracle

#endif  // FINCOLIM_TESTS_ORACLES_HPP_
