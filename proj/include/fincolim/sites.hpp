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

#ifndef FINCOLIM_SITES_HPP_
#define FINCOLIM_SITES_HPP_

#include <memory>
#include <string>
#include <vector>

#include "fincolim/bicolim.hpp"
#include "fincolim/category.hpp"
#include "fincolim/pseudocone.hpp"

namespace fincolim {

/// A family of morphisms into `target`. Legs are kept sorted and unique.
struct Cover {
  ObjId target = 0;
  std::vector<MorId> legs;

  auto operator<=>(const Cover&) const = default;
};

Cover make_cover(ObjId target, std::vector<MorId> legs);

/// A finite category with chosen finite limits, a basis of covering
/// families and a set of topological generators. Identity singletons are
/// covers without being listed.
struct Site {
  std::string name;
  CatRef category;
  std::vector<Cover> basis;
  std::vector<ObjId> generators;  // sorted
};

using SiteRef = std::shared_ptr<const Site>;

/// Whether `family` (morphisms into `target`) is a cover: some basis cover
/// of `target`, or the identity cover, factors through it.
bool is_cover(const Site& s, ObjId target, const std::vector<MorId>& family);

/// Objects reachable from the generators by covers: an object is covered
/// when it is a generator or some basis cover of it has only covered
/// sources.
std::vector<bool> covered_objects(const Site& s);

ValidationReport validate_site(const Site& s, Budget budget = Budget{});

/// A site morphism, stored as its underlying functor `from -> to` between
/// the categories (the morphism of sites points the other way).
struct SiteMorphism {
  SiteRef from;
  SiteRef to;
  Functor functor;
};

struct ContinuityCheck {
  bool continuous = true;
  std::string failing_cover;
};

/// Every basis cover of `from` is sent to a cover of `to`.
ContinuityCheck check_continuous(const SiteMorphism& m);
ContinuityCheck check_continuous(const Site& from, const Site& to,
                                 const Functor& f);

/// Exactness and continuity of the underlying functor.
ValidationReport validate_site_morphism(const SiteMorphism& m,
                                        Budget budget = Budget{});

/// A diagram of categories with a site on every fiber. `sites[A]->category`
/// is the fiber at A.
struct SiteDiagram {
  DiagramRef diagram;
  std::vector<SiteRef> sites;
};

ValidationReport validate_site_diagram(const SiteDiagram& d,
                                       Budget budget = Budget{});

struct ColimSite {
  PseudocolimitResult colim;
  SiteRef site;
  std::vector<SiteMorphism> cone;  // lambda_A as site morphisms
  /// For each basis member, the fiber and fiber cover it is an image of
  /// (first occurrence).
  std::vector<std::pair<ObjId, std::size_t>> origin;
};

/// Colimit category with chosen limits, basis the images of the fiber
/// bases under the cone, generators the images of the fiber generators.
ColimSite build_colim_site(const SiteDiagram& d, BuildOptions options = {});

struct MutationResult {
  std::size_t tested = 0;      // basis members not already covers without
  std::size_t redundant = 0;   // members still covers after removal
  std::vector<std::string> survivors;  // tested members whose removal kept
                                       // every leg continuous
};

/// Removes each generated basis member in turn and checks that some leg of
/// the cone stops being continuous. Members that remain covers by
/// refinement after removal (identity-like families) are counted as
/// redundant and skipped.
MutationResult mutate_colim_basis(const ColimSite& c);

struct SiteBicolimReport {
  std::size_t functor_count = 0;        // exact continuous L -> X
  std::size_t cone_count = 0;           // pseudocones of site morphisms
  std::size_t transformation_count = 0;
  std::size_t modification_count = 0;
  bool bijective_on_objects = true;
  bool bijective_on_morphisms = true;
  /// A factorization of a site pseudocone that preserves the basis
  /// preserves every cover.
  bool covers_from_basis = true;
  std::vector<std::string> problems;

  bool isomorphism() const {
    return bijective_on_objects && bijective_on_morphisms;
  }
};

SiteBicolimReport verify_site_pseudocolimit(const SiteDiagram& d,
                                            const ColimSite& colim,
                                            const Site& x,
                                            Budget budget = Budget{});

/// Legs h_A o i_A with coherence h_u i_A over the restricted diagram.
/// Throws ClosureViolation when some square F u o i_A = i_B o F' u fails.
Pseudocone restrict_pseudocone(const Pseudocone& h,
                               const DiagramRef& restricted,
                               const std::vector<Functor>& inclusions);

Modification restrict_modification(const Modification& phi,
                                   const DiagramRef& restricted,
                                   const std::vector<Functor>& inclusions);

/// Finite-set valued contravariant functor. `maps[f]` sends elements of
/// P(tgt f) to P(src f).
struct Presheaf {
  CatRef category;
  std::vector<int> sizes;
  std::vector<std::vector<int>> maps;
};

ValidationReport validate_presheaf(const Presheaf& p);

struct SheafCheck {
  bool sheaf = true;
  std::string failing_cover;
};

/// For every basis cover, every family compatible on the chosen pullbacks
/// of pairs of legs has exactly one amalgamation.
SheafCheck check_sheaf(const Presheaf& p, const Site& s,
                       Budget budget = Budget{});

}  // namespace fincolim

#endif  // FINCOLIM_SITES_HPP_
