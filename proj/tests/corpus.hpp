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

// Small categories and diagrams shared by the test binaries. Everything here
// is built programmatically so tests do not depend on the fixture parser.

#ifndef FINCOLIM_TESTS_CORPUS_HPP_
#define FINCOLIM_TESTS_CORPUS_HPP_

#include <map>
#include <string>
#include <vector>

#include "fincolim/category.hpp"
#include "fincolim/pseudocone.hpp"
#include "fincolim/two_cat.hpp"

namespace corpus {

using namespace fincolim;

CatRef one();       // single object "*"
CatRef two();       // 0 -> 1
CatRef three();     // 0 -> 1 -> 2
CatRef diamond();   // bot <= a, b <= top, with chosen meets
CatRef iso();       // p <-> q, inverse pair i, j
CatRef vee();       // a, b -> top, no meet; not finitely complete
CatRef parallel();  // two arrows f, g : s -> t
CatRef discrete2(); // two objects, identities only
CatRef z2();        // one object, an involution s with s s = id

/// Functor into a thin category fixed by its object map (by name).
Functor thin_functor(const CatRef& source, const CatRef& target,
                     const std::map<std::string, std::string>& on_obj);

/// Functor given by object and morphism maps, by name.
Functor named_functor(const CatRef& source, const CatRef& target,
                      const std::map<std::string, std::string>& on_obj,
                      const std::map<std::string, std::string>& on_mor);

TwoCatRef point_index();
TwoCatRef chain3_index();
TwoCatRef discrete_index();  // two objects, not filtered
/// Objects 0, 1; parallel 1-cells u, v : 0 -> 1 and inverse 2-cells
/// s : u => v, t : v => u.
TwoCatRef twist_index();

/// Diagram over Chain3 from F0, F1, F2 and the two generating transitions.
DiagramRef chain3(const std::string& name, CatRef f0, CatRef f1, CatRef f2,
                  Functor f01, Functor f12);

DiagramRef point(const std::string& name, CatRef fiber);
DiagramRef const_two();       // Two constant over Chain3
DiagramRef incl_chain();      // One -> Two = Two, endpoint 1
DiagramRef collapse_chain();  // Two = Two -> One
DiagramRef grow_chain();      // One -> Two -> Diamond
DiagramRef diamond_chain();   // Diamond constant over Chain3
DiagramRef twist();           // One => Iso over the twist index
DiagramRef not_filtered();    // Two over the discrete index

struct NamedDiagram {
  std::string name;
  DiagramRef diagram;
};

/// Every filtered diagram above.
std::vector<NamedDiagram> filtered_diagrams();

/// Vertices used for universal-property checks, all with at most 4 objects.
std::vector<CatRef> test_vertices();

/// The first `limit` pseudocones F -> X in enumeration order.
std::vector<Pseudocone> sample_cones(const DiagramRef& d, const CatRef& x,
                                     std::size_t limit);

}  // namespace corpus

#endif  // FINCOLIM_TESTS_CORPUS_HPP_
