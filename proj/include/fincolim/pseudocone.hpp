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

#ifndef FINCOLIM_PSEUDOCONE_HPP_
#define FINCOLIM_PSEUDOCONE_HPP_

#include <string>
#include <vector>

#include "fincolim/category.hpp"
#include "fincolim/two_cat.hpp"

namespace fincolim {

/// Legs h_A : F A -> X for each index object and, for every 1-cell
/// u : A -> B (identities included), an invertible coherence cell
/// h_u : h_A => h_B o F u.
///
/// Equations, with a 2-cell g : u => v and composable u, v:
///   unit         h_{id_A} = id
///   composition  (h_v F u) o h_u = h_{v u}
///   2-cell       (h_B F g) o h_u = h_v
struct Pseudocone {
  DiagramRef diagram;
  CatRef vertex;
  std::vector<Functor> legs;
  std::vector<NatTrans> coherence;
};

bool operator==(const Pseudocone& a, const Pseudocone& b);

/// Morphism of pseudocones g => h with the same diagram and vertex:
/// components phi_A : g_A => h_A with h_u o phi_A = (phi_B F u) o g_u.
struct Modification {
  Pseudocone source;
  Pseudocone target;
  std::vector<NatTrans> components;
};

bool operator==(const Modification& a, const Modification& b);

struct EquationCheck {
  bool ok = true;
  std::string violation;  // first violated equation, empty when ok
};

EquationCheck check_pseudocone(const Pseudocone& h);
EquationCheck check_modification(const Modification& phi);

/// Pseudocone whose legs commute strictly, with identity coherence.
/// Throws BoundaryMismatch if some h_B o F u differs from h_A.
Pseudocone strict_cone(const DiagramRef& diagram, const CatRef& vertex,
                       std::vector<Functor> legs);

Modification identity_modification(const Pseudocone& h);

/// Componentwise `psi o phi`; throws BoundaryMismatch unless
/// target(phi) == source(psi).
Modification compose_modifications(const Modification& psi,
                                   const Modification& phi);

/// Legs s o f_A and coherence s f_u.
Pseudocone postcompose_cone(const Pseudocone& f, const Functor& s);

/// Components xi f_A, a modification s f => t f.
Modification postcompose_cell(const Pseudocone& f, const NatTrans& xi);

struct Conjugation {
  Pseudocone cone;
  Modification iso;  // g => cone, components phi
};

/// New legs are the targets of `phi`; coherence
/// h_u = (phi_B F u) o g_u o phi_A^{-1}. Throws NonInvertibleComponent.
Conjugation conjugate(const Pseudocone& g, const std::vector<NatTrans>& phi);

/// Invertible transformations h_A => h_B o F u for a fixed leg family and
/// 1-cell.
std::vector<NatTrans> coherence_candidates(const DiagramRef& diagram,
                                           const std::vector<Functor>& legs,
                                           CellId u, Budget budget = Budget{});

/// All pseudocones over `diagram` with vertex `x`.
std::vector<Pseudocone> enumerate_pseudocones(const DiagramRef& diagram,
                                              const CatRef& x,
                                              Budget budget = Budget{});

/// All modifications g => h.
std::vector<Modification> enumerate_modifications(const Pseudocone& g,
                                                  const Pseudocone& h,
                                                  Budget budget = Budget{});

/// Flat encoding of legs and coherence, usable as a map key.
std::vector<int> cone_key(const Pseudocone& h);
std::vector<int> modification_key(const Modification& phi);

}  // namespace fincolim

#endif  // FINCOLIM_PSEUDOCONE_HPP_
