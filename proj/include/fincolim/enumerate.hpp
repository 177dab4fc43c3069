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

#ifndef FINCOLIM_ENUMERATE_HPP_
#define FINCOLIM_ENUMERATE_HPP_

#include <optional>
#include <vector>

#include "fincolim/category.hpp"

namespace fincolim {

/// Restricts an enumeration to the candidates whose first choice index is
/// congruent to `part` modulo `parts`. The union over all parts is the full
/// enumeration, in the same relative order.
struct Partition {
  int part = 0;
  int parts = 1;
};

/// Every functor c -> d exactly once, in lexicographic order of the object
/// assignment followed by the morphism assignment.
std::vector<Functor> enumerate_functors(const CatRef& c, const CatRef& d,
                                        Budget budget = Budget{},
                                        Partition partition = {});

/// Every natural transformation f => g, in lexicographic component order.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g,
                                          Budget budget = Budget{});

struct EquivalenceWitness {
  Functor forward;          // c -> d
  Functor backward;         // d -> c
  NatTrans back_forth;      // backward o forward => id_c, invertible
  NatTrans forth_back;      // forward o backward => id_d, invertible
};

struct EquivalenceSearch {
  /// Set when an equivalence was found. When empty the search space was
  /// exhausted, so the categories are not equivalent.
  std::optional<EquivalenceWitness> witness;
  std::size_t functors_examined = 0;
};

/// Searches the functors c -> d for one that is fully faithful and
/// essentially surjective and builds a quasi-inverse from it. Throws
/// BudgetExceeded when the functor search does not finish.
EquivalenceSearch equivalence_witness(const CatRef& c, const CatRef& d,
                                      Budget budget = Budget{});

bool is_fully_faithful(const Functor& f);
bool is_essentially_surjective(const Functor& f);

}  // namespace fincolim

#endif  // FINCOLIM_ENUMERATE_HPP_
