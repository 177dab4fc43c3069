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

#ifndef FINCOLIM_BICOLIM_HPP_
#define FINCOLIM_BICOLIM_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fincolim/category.hpp"
#include "fincolim/limits.hpp"
#include "fincolim/pseudocone.hpp"
#include "fincolim/two_cat.hpp"

namespace fincolim {

/// Object (A, x) of the pseudocolimit: index object A, object x of F A.
struct ColimObject {
  ObjId index = 0;
  ObjId fiber = 0;

  auto operator<=>(const ColimObject&) const = default;
};

/// A premorphism (A, x) -> (B, y): apex C, 1-cells u : A -> C and
/// v : B -> C, and f : (F u) x -> (F v) y in F C. Ordered lexicographically
/// by (apex, u, v, f); the least member of a class is its representative.
struct Span {
  ObjId apex = 0;
  CellId u = 0;
  CellId v = 0;
  MorId f = 0;

  auto operator<=>(const Span&) const = default;
};

/// Candidate order for the composition refinement search. Without a seed
/// apexes, 1-cells and 2-cells are tried in id order; with a seed each
/// candidate list is shuffled.
struct RefinementOrder {
  std::optional<std::uint64_t> seed;
};

struct BuildOptions {
  Budget budget{};
  RefinementOrder order{};
  /// Attach a chosen limit assignment to the colimit (needs every fiber to
  /// carry a complete assignment and exact transitions).
  bool with_limits = false;
};

class PseudocolimitResult {
 public:
  DiagramRef diagram;
  CatRef colim;
  std::vector<ColimObject> objects;
  /// Per colimit morphism, every span in its class, sorted; [0] is the
  /// canonical representative.
  std::vector<std::vector<Span>> classes;
  Pseudocone lambda;

  ObjId object_of(ObjId index, ObjId fiber) const;
  /// Class of a span between two colimit objects; kNone if the span is not
  /// a premorphism between them.
  MorId class_of(ObjId from, ObjId to, const Span& s) const;

  std::map<std::tuple<ObjId, ObjId, Span>, MorId> span_index;
};

/// Builds the colimit category and cone. Hom-sets are the classes of spans
/// under: (C1, u1, v1, f1) ~ (C2, u2, v2, f2) iff some w1 : C1 -> D,
/// w2 : C2 -> D and invertible 2-cells a : w1 u1 => w2 u2,
/// b : w1 v1 => w2 v2 satisfy (F b)_y o (F w1) f1 = (F w2) f2 o (F a)_x.
/// Throws NotFiltered when the index fails check_2filtered.
PseudocolimitResult build_pseudocolimit(const DiagramRef& diagram,
                                        BuildOptions options = {});

/// Whether two spans between the same objects are directly related.
bool spans_related(const TwoDiagram& d, ColimObject from, ColimObject to,
                   const Span& s1, const Span& s2, Budget& budget);

/// Composite `s2 o s1` of premorphisms P -> Q -> R, found by searching
/// a common refinement w1 : C1 -> D, w2 : C2 -> D with an invertible
/// 2-cell w1 v1 => w2 u2.
Span compose_spans(const TwoDiagram& d, ColimObject q, const Span& s2,
                   const Span& s1, const RefinementOrder& order);

/// Pairs of spans in one hom-set where the direct relation fails to be
/// transitive. Empty on every correctly filtered input.
std::vector<std::string> check_span_transitivity(const PseudocolimitResult& r,
                                                 Budget budget = Budget{});

/// The unique functor l with l o lambda = h on the nose:
/// l(A, x) = h_A x and l[C, u, v, f] = (h_v)_y^{-1} o h_C f o (h_u)_x.
/// Throws IllFormedCone when h is not a pseudocone or l is not
/// well defined on some class.
Functor factor_cone(const PseudocolimitResult& r, const Pseudocone& h);

/// For phi : h => t lambda with l = factor_cone(h), the unique xi : l => t
/// with xi lambda = phi. Throws NoSolution if the forced components are not
/// natural.
NatTrans factor_cell(const PseudocolimitResult& r, const Functor& t,
                     const Modification& phi);

struct BicolimReport {
  std::size_t functor_count = 0;
  std::size_t cone_count = 0;
  std::size_t transformation_count = 0;
  std::size_t modification_count = 0;
  bool injective_on_objects = true;
  bool surjective_on_objects = true;
  bool essentially_surjective = true;
  bool fully_faithful = true;
  std::vector<std::string> problems;

  bool equivalence() const { return essentially_surjective && fully_faithful; }
  bool isomorphism() const {
    return injective_on_objects && surjective_on_objects && fully_faithful;
  }
};

/// Enumerates functors L -> X with their transformations and pseudocones
/// F -> X with their modifications, and tests whether precomposition with
/// lambda is an equivalence and an isomorphism of categories.
BicolimReport verify_bicolimit(const PseudocolimitResult& r, const CatRef& x,
                               Budget budget = Budget{});

struct ColimLimit {
  Cone cone;              // in the colimit
  ObjId fiber_index = 0;  // index object the diagram was lifted to
  FiniteDiagram lifted;
  Cone fiber_cone;
};

/// Lifts a finite diagram in the colimit to a single fiber, takes the chosen
/// limit there and transports it back. Throws NotLiftable or
/// IncompleteAssignment.
ColimLimit colim_finite_limit(const PseudocolimitResult& r,
                              const FiniteDiagram& d,
                              Budget budget = Budget{});

/// Chosen terminal, products and equalizers of the colimit computed with
/// colim_finite_limit.
LimitAssignment colim_limit_assignment(const PseudocolimitResult& r,
                                       Budget budget = Budget{});

struct LegExactness {
  std::string index_object;
  ExactnessCheck check;
};

std::vector<LegExactness> verify_cone_exactness(const PseudocolimitResult& r,
                                                Budget budget = Budget{});

}  // namespace fincolim

#endif  // FINCOLIM_BICOLIM_HPP_
