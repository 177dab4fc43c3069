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

#ifndef FINCOLIM_TWO_CAT_HPP_
#define FINCOLIM_TWO_CAT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincolim/category.hpp"

namespace fincolim {

using CellId = int;   // 1-cell, i.e. a morphism of TwoCat::one
using Cell2Id = int;  // 2-cell

struct TwoCell {
  std::string name;
  CellId src = 0;
  CellId tgt = 0;

  bool operator==(const TwoCell&) const = default;
};

/// A finite strict 2-category. The objects and 1-cells form the category
/// `one`; 2-cells carry vertical and horizontal composition tables indexed
/// `[beta][alpha]`, kNone where undefined.
struct TwoCat {
  std::string name;
  CatRef one;
  std::vector<TwoCell> cells;
  std::vector<Cell2Id> id2;  // per 1-cell
  std::vector<Cell2Id> vtable;
  std::vector<Cell2Id> htable;

  int object_count() const { return one->object_count(); }
  int cell_count() const { return one->morphism_count(); }
  int cell2_count() const { return static_cast<int>(cells.size()); }

  /// beta o alpha, for tgt(alpha) == src(beta).
  Cell2Id vcomp(Cell2Id beta, Cell2Id alpha) const {
    return vtable[static_cast<std::size_t>(beta) * cells.size() + alpha];
  }
  /// beta alpha, for alpha between 1-cells A -> B and beta between B -> C.
  Cell2Id hcomp(Cell2Id beta, Cell2Id alpha) const {
    return htable[static_cast<std::size_t>(beta) * cells.size() + alpha];
  }
  Cell2Id& vcomp_entry(Cell2Id beta, Cell2Id alpha) {
    return vtable[static_cast<std::size_t>(beta) * cells.size() + alpha];
  }
  Cell2Id& hcomp_entry(Cell2Id beta, Cell2Id alpha) {
    return htable[static_cast<std::size_t>(beta) * cells.size() + alpha];
  }

  /// 2-cells u => v in id order.
  std::vector<Cell2Id> cells_between(CellId u, CellId v) const;
  bool is_invertible(Cell2Id a) const;
  std::optional<Cell2Id> inverse(Cell2Id a) const;
  /// Invertible 2-cells u => v.
  std::vector<Cell2Id> isos_between(CellId u, CellId v) const;
  std::optional<Cell2Id> find_cell2(const std::string& name) const;
};

using TwoCatRef = std::shared_ptr<const TwoCat>;

/// Builds a 2-category over the 1-category `one`. Identity 2-cells are
/// named `id2_<cell>`. finish() fills every composite that the unit laws and
/// `id2 v * id2 u = id2 (v u)` determine; everything else must be recorded.
class TwoCatBuilder {
 public:
  TwoCatBuilder(std::string name, CatRef one);

  Cell2Id cell(const std::string& name, CellId src, CellId tgt);
  Cell2Id cell(const std::string& name, const std::string& src,
               const std::string& tgt);
  Cell2Id id2(CellId u) const { return id2_[u]; }
  void vcomp(Cell2Id beta, Cell2Id alpha, Cell2Id result);
  void hcomp(Cell2Id beta, Cell2Id alpha, Cell2Id result);

  TwoCat finish_value();
  TwoCatRef finish();

 private:
  TwoCat two_;
  std::vector<Cell2Id> id2_;
  std::vector<std::tuple<Cell2Id, Cell2Id, Cell2Id>> vpending_;
  std::vector<std::tuple<Cell2Id, Cell2Id, Cell2Id>> hpending_;
};

/// A 1-category regarded as a 2-category with identity 2-cells only.
TwoCatRef locally_discrete(const CatRef& one);

/// Empty iff the 1-cell layer is a category, every hom-category is a
/// category, horizontal composition is total, well typed, associative and
/// unital, and the interchange law holds. Table-shape problems are reported
/// alone.
ValidationReport validate_two_cat(const TwoCat& a);

struct FilteredCheck {
  bool filtered = true;
  std::string condition;  // "F0".."F3" on failure
  std::string datum;
};

/// Exhaustive test of: (F0) nonempty; (F1) every pair of objects has a
/// cospan; (F2) every parallel pair u, v: A -> B has w: B -> C with an
/// invertible 2-cell w u => w v; (F3) every parallel pair of 2-cells
/// a, b: u => v has w with w a = w b.
FilteredCheck check_2filtered(const TwoCat& a);

/// Reverses 1-cells, keeps 2-cells. Applying it twice gives back the input,
/// name included.
TwoCatRef opposite_two_cat(const TwoCat& a);

/// Adjoins an object `top` with exactly one 1-cell from every object and
/// only identity 2-cells on the new 1-cells.
TwoCatRef adjoin_terminal(const TwoCat& a, const std::string& top = "top");

// ---------------------------------------------------------------------------
// Diagrams

enum class Orientation {
  Covariant,  // data given as A -> Cat
  Opposite,   // data given over A^op; the index was flipped on ingestion
};

/// A strict 2-functor from a finite 2-category to categories, always stored
/// covariantly.
struct TwoDiagram {
  std::string name;
  TwoCatRef index;
  std::vector<CatRef> fibers;         // per object
  std::vector<Functor> on_cell;       // per 1-cell
  std::vector<NatTrans> on_cell2;     // per 2-cell
  Orientation orientation = Orientation::Covariant;

  const Functor& operator()(CellId u) const { return on_cell[u]; }
};

using DiagramRef = std::shared_ptr<const TwoDiagram>;

struct TwoFunctorCheck {
  bool ok = true;
  std::string counterexample;
};

/// Strict functoriality at all three levels, plus well-typedness of every
/// functor and transformation.
TwoFunctorCheck check_two_functor(const TwoDiagram& f);

/// Every fiber is a category and every image functor/transformation is
/// well formed.
ValidationReport validate_diagram(const TwoDiagram& f);

/// Diagram sending every object to `fiber` and every cell to an identity.
DiagramRef constant_diagram(const std::string& name, const TwoCatRef& index,
                            const CatRef& fiber);

/// Fills on_cell for composite 1-cells whose value is determined by
/// factorizations through cells already set, and identity 1-cells and
/// identity 2-cells with identities. `known` flags the cells already set.
void complete_diagram(TwoDiagram& f, std::vector<bool> known,
                      std::vector<bool> known2);

/// Reinterprets data given over an opposite index: the result is indexed by
/// opposite_two_cat(index) and flagged Opposite.
DiagramRef ingest_opposite(const TwoDiagram& declared);

}  // namespace fincolim

#endif  // FINCOLIM_TWO_CAT_HPP_
