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

#ifndef FINCOLIM_CATEGORY_HPP_
#define FINCOLIM_CATEGORY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincolim/errors.hpp"

namespace fincolim {

using ObjId = int;
using MorId = int;

inline constexpr MorId kNone = -1;

struct Morphism {
  std::string name;
  ObjId src = 0;
  ObjId tgt = 0;

  bool operator==(const Morphism&) const = default;
};

struct ProductCone {
  ObjId vertex = 0;
  MorId first = kNone;
  MorId second = kNone;

  bool operator==(const ProductCone&) const = default;
};

struct EqualizerCone {
  ObjId vertex = 0;
  MorId inclusion = kNone;

  bool operator==(const EqualizerCone&) const = default;
};

/// Chosen terminal object, binary products and equalizers. Keys are ordered
/// pairs: products by (a, b), equalizers by the parallel pair (f, g).
struct LimitAssignment {
  std::optional<ObjId> terminal;
  std::map<std::pair<ObjId, ObjId>, ProductCone> products;
  std::map<std::pair<MorId, MorId>, EqualizerCone> equalizers;
  bool complete = false;

  bool operator==(const LimitAssignment&) const = default;
};

/// A finite category stored as an explicit composition table.
///
/// The table is indexed `[g][f]` and holds `g o f`, or kNone when
/// `tgt(f) != src(g)`. Mutate the public fields freely while building, then
/// call reindex(); after that the value is treated as immutable and shared
/// through CatRef.
class FinCat {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<MorId> identities;
  std::vector<MorId> table;
  std::optional<LimitAssignment> limits;

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }

  MorId compose(MorId g, MorId f) const {
    return table[static_cast<std::size_t>(g) * morphisms.size() +
                 static_cast<std::size_t>(f)];
  }
  MorId& compose_entry(MorId g, MorId f) {
    return table[static_cast<std::size_t>(g) * morphisms.size() +
                 static_cast<std::size_t>(f)];
  }

  ObjId src(MorId f) const { return morphisms[f].src; }
  ObjId tgt(MorId f) const { return morphisms[f].tgt; }
  MorId id(ObjId a) const { return identities[a]; }
  bool is_identity(MorId f) const { return identities[src(f)] == f; }

  /// Morphisms a -> b in increasing id order. Requires reindex().
  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    return homs_[static_cast<std::size_t>(a) * objects.size() +
                 static_cast<std::size_t>(b)];
  }

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  /// Rebuilds hom lists and name lookups. Tolerates out-of-range data so
  /// that validate_category can still run on a corrupted table.
  void reindex();

  /// Resizes the table for the current morphism count, filling with kNone.
  void reset_table();

 private:
  std::vector<std::vector<MorId>> homs_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
};

using CatRef = std::shared_ptr<const FinCat>;

/// Identity on pointers, otherwise structural equality of objects,
/// morphisms and composition (limit assignments are ignored).
bool same_category(const FinCat& a, const FinCat& b);
inline bool same_category(const CatRef& a, const CatRef& b) {
  return a == b || same_category(*a, *b);
}

/// Incremental construction helper. Identities are added with each object
/// and all composites involving an identity are filled in by finish().
class CatBuilder {
 public:
  explicit CatBuilder(std::string name);

  ObjId object(const std::string& name);
  MorId morphism(const std::string& name, ObjId src, ObjId tgt);
  MorId morphism(const std::string& name, const std::string& src,
                 const std::string& tgt);
  /// Records `g o f = h`.
  void compose(MorId g, MorId f, MorId h);
  void compose(const std::string& g, const std::string& f,
               const std::string& h);
  void identity_name(ObjId a, const std::string& name);

  FinCat& raw() { return cat_; }
  FinCat finish_value();
  CatRef finish();

 private:
  FinCat cat_;
  std::vector<std::tuple<MorId, MorId, MorId>> pending_;
};

/// Thin category on `objects` generated by the pairs `x <= y`
/// (reflexive-transitive closure). Morphisms are named `x->y`, identities
/// `id_x`.
CatRef make_poset(const std::string& name,
                  const std::vector<std::string>& objects,
                  const std::vector<std::pair<std::string, std::string>>& le);

/// Empty report iff identities, table shape, unit laws and associativity
/// all hold. Table-shape problems are reported alone, since the laws are
/// meaningless on a malformed table.
ValidationReport validate_category(const FinCat& c);

bool is_iso(const FinCat& c, MorId f);
std::optional<MorId> inverse_of(const FinCat& c, MorId f);

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct Functor {
  CatRef source;
  CatRef target;
  std::vector<ObjId> on_obj;
  std::vector<MorId> on_mor;

  ObjId operator()(ObjId a) const { return on_obj[a]; }
  MorId map(MorId f) const { return on_mor[f]; }
};

bool operator==(const Functor& a, const Functor& b);

Functor identity_functor(const CatRef& c);
/// `g o f`.
Functor compose(const Functor& g, const Functor& f);
/// Sends every object to `value` and every morphism to its identity.
Functor constant_functor(const CatRef& source, const CatRef& target,
                         ObjId value);
/// First violated functor law, if any.
std::optional<std::string> check_functor(const Functor& f);

struct NatTrans {
  Functor source;
  Functor target;
  std::vector<MorId> components;

  MorId operator[](ObjId a) const { return components[a]; }
};

bool operator==(const NatTrans& a, const NatTrans& b);

NatTrans identity_nat(const Functor& f);
/// Vertical composite `beta o alpha`.
NatTrans vcompose(const NatTrans& beta, const NatTrans& alpha);
/// `H alpha`: components H(alpha_a).
NatTrans whisker(const Functor& h, const NatTrans& alpha);
/// `alpha K`: components alpha_{K b}.
NatTrans whisker(const NatTrans& alpha, const Functor& k);
/// Horizontal composite `beta alpha` of alpha: F => G (C -> D) and
/// beta: H => K (D -> E); components beta_{G c} o H(alpha_c).
NatTrans hcompose(const NatTrans& beta, const NatTrans& alpha);
bool is_invertible(const NatTrans& alpha);
/// Throws NonInvertibleComponent when some component is not an iso.
NatTrans inverse(const NatTrans& alpha);
/// First failing naturality square or boundary problem, if any.
std::optional<std::string> check_natural(const NatTrans& alpha);

// ---------------------------------------------------------------------------
// Finite diagrams and cones

struct DiagramEdge {
  int from = 0;
  int to = 0;
  MorId morphism = kNone;
};

/// A diagram shaped like a finite graph: nodes name objects, edges carry
/// morphisms between the node objects.
struct FiniteDiagram {
  std::vector<ObjId> nodes;
  std::vector<DiagramEdge> edges;
};

struct Cone {
  ObjId vertex = 0;
  std::vector<MorId> legs;

  bool operator==(const Cone&) const = default;
};

}  // namespace fincolim

#endif  // FINCOLIM_CATEGORY_HPP_
