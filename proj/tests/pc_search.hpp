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

// Brute-force searches over pseudocone data built only from the naive
// oracles.

#ifndef FINCOLIM_TESTS_PC_SEARCH_HPP_
#define FINCOLIM_TESTS_PC_SEARCH_HPP_

#include <set>
#include <vector>

#include "fincolim/pseudocone.hpp"

namespace pc_search {

using namespace fincolim;

/// Every functor a -> b.
std::vector<Functor> functors(const CatRef& a, const CatRef& b);

/// Every invertible natural transformation f => g.
std::vector<NatTrans> invertible(const Functor& f, const Functor& g);

/// Keys of every pseudocone over `d` with vertex `x`, by trying every leg
/// family and every invertible coherence family.
std::set<std::vector<int>> all_cone_keys(const DiagramRef& d, const CatRef& x);

/// Up to `limit` families of invertible transformations out of the legs
/// of `g`, onto arbitrary new legs.
std::vector<std::vector<NatTrans>> invertible_families(const Pseudocone& g,
                                                       std::size_t limit);

/// Keys of every pseudocone structure on the targets of `phi` for which
/// `phi` is a modification out of `g`.
std::vector<std::vector<int>> coherences_making_modification(
    const Pseudocone& g, const std::vector<NatTrans>& phi);

}  // namespace pc_search

#endif  // FINCOLIM_TESTS_PC_SEARCH_HPP_
