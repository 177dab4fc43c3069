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

#include "fincolim/two_cat.hpp"

#include <algorithm>

namespace fincolim {

std::vector<Cell2Id> TwoCat::cells_between(CellId u, CellId v) const {
  std::vector<Cell2Id> out;
  for (Cell2Id a = 0; a < cell2_count(); ++a) {
    if (cells[a].src == u && cells[a].tgt == v) out.push_back(a);
  }
  return out;
}

std::optional<Cell2Id> TwoCat::inverse(Cell2Id a) const {
  for (Cell2Id b : cells_between(cells[a].tgt, cells[a].src)) {
    if (vcomp(b, a) == id2[cells[a].src] && vcomp(a, b) == id2[cells[a].tgt]) {
      return b;
    }
  }
  return std::nullopt;
}

bool TwoCat::is_invertible(Cell2Id a) const { return inverse(a).has_value(); }

std::vector<Cell2Id> TwoCat::isos_between(CellId u, CellId v) const {
  std::vector<Cell2Id> out;
  for (Cell2Id a : cells_between(u, v)) {
    if (is_invertible(a)) out.push_back(a);
  }
  return out;
}

std::optional<Cell2Id> TwoCat::find_cell2(const std::string& n) const {
  for (Cell2Id a = 0; a < cell2_count(); ++a) {
    if (cells[a].name == n) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Builder

TwoCatBuilder::TwoCatBuilder(std::string name, CatRef one) {
  two_.name = std::move(name);
  two_.one = std::move(one);
  for (CellId u = 0; u < two_.one->morphism_count(); ++u) {
    id2_.push_back(static_cast<Cell2Id>(two_.cells.size()));
    two_.cells.push_back({"id2_" + two_.one->morphisms[u].name, u, u});
  }
}

Cell2Id TwoCatBuilder::cell(const std::string& name, CellId src, CellId tgt) {
  two_.cells.push_back({name, src, tgt});
  return static_cast<Cell2Id>(two_.cells.size() - 1);
}

Cell2Id TwoCatBuilder::cell(const std::string& name, const std::string& src,
                            const std::string& tgt) {
  auto s = two_.one->find_morphism(src);
  auto t = two_.one->find_morphism(tgt);
  if (!s || !t) {
    throw Error(ErrorKind::InvalidInput, "unknown 1-cell in 2-cell " + name);
  }
  return cell(name, *s, *t);
}

void TwoCatBuilder::vcomp(Cell2Id beta, Cell2Id alpha, Cell2Id result) {
  vpending_.emplace_back(beta, alpha, result);
}

void TwoCatBuilder::hcomp(Cell2Id beta, Cell2Id alpha, Cell2Id result) {
  hpending_.emplace_back(beta, alpha, result);
}

TwoCat TwoCatBuilder::finish_value() {
  TwoCat t = two_;
  const FinCat& one = *t.one;
  const std::size_t n2 = t.cells.size();
  t.id2 = id2_;
  t.vtable.assign(n2 * n2, kNone);
  t.htable.assign(n2 * n2, kNone);
  for (Cell2Id a = 0; a < static_cast<Cell2Id>(n2); ++a) {
    const TwoCell& c = t.cells[a];
    t.vcomp_entry(t.id2[c.tgt], a) = a;
    t.vcomp_entry(a, t.id2[c.src]) = a;
    t.hcomp_entry(t.id2[one.id(one.tgt(c.src))], a) = a;
    t.hcomp_entry(a, t.id2[one.id(one.src(c.src))]) = a;
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    for (CellId v = 0; v < one.morphism_count(); ++v) {
      const CellId vu = one.compose(v, u);
      if (vu != kNone) t.hcomp_entry(t.id2[v], t.id2[u]) = t.id2[vu];
    }
  }
  for (auto [b, a, r] : vpending_) t.vcomp_entry(b, a) = r;
  for (auto [b, a, r] : hpending_) t.hcomp_entry(b, a) = r;
  return t;
}

TwoCatRef TwoCatBuilder::finish() {
  return std::make_shared<const TwoCat>(finish_value());
}

TwoCatRef locally_discrete(const CatRef& one) {
  return TwoCatBuilder(one->name, one).finish();
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_two_cat(const TwoCat& a) {
  ValidationReport out;
  for (const Violation& v : validate_category(*a.one)) {
    out.push_back({"one-cells/" + v.rule, v.where});
  }
  if (!out.empty()) return out;

  const FinCat& one = *a.one;
  const int n1 = one.morphism_count();
  const int n2 = a.cell2_count();
  auto cell_ok = [&](CellId u) { return u >= 0 && u < n1; };
  auto cell2_ok = [&](Cell2Id x) { return x >= 0 && x < n2; };
  auto dom0 = [&](Cell2Id x) { return one.src(a.cells[x].src); };
  auto cod0 = [&](Cell2Id x) { return one.tgt(a.cells[x].src); };

  for (Cell2Id x = 0; x < n2; ++x) {
    const TwoCell& c = a.cells[x];
    if (!cell_ok(c.src) || !cell_ok(c.tgt) || one.src(c.src) != one.src(c.tgt) ||
        one.tgt(c.src) != one.tgt(c.tgt)) {
      out.push_back({"two-cell-boundary", c.name});
    }
  }
  if (static_cast<int>(a.id2.size()) != n1) {
    out.push_back({"identity-2-cell-count", a.name});
  } else {
    for (CellId u = 0; u < n1; ++u) {
      const Cell2Id i = a.id2[u];
      if (!cell2_ok(i) || a.cells[i].src != u || a.cells[i].tgt != u) {
        out.push_back({"identity-2-cell", one.morphisms[u].name});
      }
    }
  }
  const std::size_t want = static_cast<std::size_t>(n2) * n2;
  if (a.vtable.size() != want || a.htable.size() != want) {
    out.push_back({"table-size", a.name});
  }
  if (!out.empty()) return out;

  auto pair_name = [&](Cell2Id y, Cell2Id x) {
    return a.cells[y].name + " . " + a.cells[x].name;
  };
  for (Cell2Id y = 0; y < n2; ++y) {
    for (Cell2Id x = 0; x < n2; ++x) {
      // vertical
      {
        const Cell2Id r = a.vcomp(y, x);
        const bool composable = a.cells[x].tgt == a.cells[y].src;
        if (!composable) {
          if (r != kNone) out.push_back({"vertical-non-composable", pair_name(y, x)});
        } else if (r == kNone) {
          out.push_back({"vertical-missing", pair_name(y, x)});
        } else if (!cell2_ok(r)) {
          out.push_back({"vertical-unknown-cell", pair_name(y, x)});
        } else if (a.cells[r].src != a.cells[x].src ||
                   a.cells[r].tgt != a.cells[y].tgt) {
          out.push_back({"vertical-wrong-boundary", pair_name(y, x)});
        }
      }
      // horizontal
      {
        const Cell2Id r = a.hcomp(y, x);
        const bool composable = cod0(x) == dom0(y);
        if (!composable) {
          if (r != kNone) {
            out.push_back({"horizontal-non-composable", pair_name(y, x)});
          }
        } else if (r == kNone) {
          out.push_back({"horizontal-missing", pair_name(y, x)});
        } else if (!cell2_ok(r)) {
          out.push_back({"horizontal-unknown-cell", pair_name(y, x)});
        } else if (a.cells[r].src != one.compose(a.cells[y].src, a.cells[x].src) ||
                   a.cells[r].tgt != one.compose(a.cells[y].tgt, a.cells[x].tgt)) {
          out.push_back({"horizontal-wrong-boundary", pair_name(y, x)});
        }
      }
    }
  }
  if (!out.empty()) return out;

  // Hom-categories.
  for (Cell2Id x = 0; x < n2; ++x) {
    const TwoCell& c = a.cells[x];
    if (a.vcomp(a.id2[c.tgt], x) != x || a.vcomp(x, a.id2[c.src]) != x) {
      out.push_back({"vertical-unit", c.name});
    }
  }
  for (Cell2Id x = 0; x < n2; ++x) {
    for (Cell2Id y = 0; y < n2; ++y) {
      if (a.cells[x].tgt != a.cells[y].src) continue;
      for (Cell2Id z = 0; z < n2; ++z) {
        if (a.cells[y].tgt != a.cells[z].src) continue;
        if (a.vcomp(z, a.vcomp(y, x)) != a.vcomp(a.vcomp(z, y), x)) {
          out.push_back({"vertical-associativity",
                         a.cells[z].name + " . " + pair_name(y, x)});
        }
      }
    }
  }
  // Horizontal structure.
  for (CellId u = 0; u < n1; ++u) {
    for (CellId v = 0; v < n1; ++v) {
      const CellId vu = one.compose(v, u);
      if (vu == kNone) continue;
      if (a.hcomp(a.id2[v], a.id2[u]) != a.id2[vu]) {
        out.push_back({"horizontal-identity",
                       one.morphisms[v].name + " " + one.morphisms[u].name});
      }
    }
  }
  for (Cell2Id x = 0; x < n2; ++x) {
    if (a.hcomp(a.id2[one.id(cod0(x))], x) != x ||
        a.hcomp(x, a.id2[one.id(dom0(x))]) != x) {
      out.push_back({"horizontal-unit", a.cells[x].name});
    }
  }
  for (Cell2Id x = 0; x < n2; ++x) {
    for (Cell2Id y = 0; y < n2; ++y) {
      if (cod0(x) != dom0(y)) continue;
      const Cell2Id yx = a.hcomp(y, x);
      for (Cell2Id z = 0; z < n2; ++z) {
        if (cod0(y) != dom0(z)) continue;
        if (a.hcomp(z, yx) != a.hcomp(a.hcomp(z, y), x)) {
          out.push_back({"horizontal-associativity",
                         a.cells[z].name + " " + a.cells[y].name + " " +
                             a.cells[x].name});
        }
      }
    }
  }
  // Interchange: (b' o b)(a' o a) = (b' a') o (b a).
  for (Cell2Id x = 0; x < n2; ++x) {
    for (Cell2Id x2 = 0; x2 < n2; ++x2) {
      if (a.cells[x].tgt != a.cells[x2].src) continue;
      for (Cell2Id y = 0; y < n2; ++y) {
        if (dom0(y) != cod0(x)) continue;
        for (Cell2Id y2 = 0; y2 < n2; ++y2) {
          if (a.cells[y].tgt != a.cells[y2].src) continue;
          const Cell2Id lhs = a.hcomp(a.vcomp(y2, y), a.vcomp(x2, x));
          const Cell2Id rhs = a.vcomp(a.hcomp(y2, x2), a.hcomp(y, x));
          if (lhs != rhs) {
            out.push_back({"interchange", "(" + pair_name(y2, y) + ")(" +
                                              pair_name(x2, x) + ")"});
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filteredness

FilteredCheck check_2filtered(const TwoCat& a) {
  const FinCat& one = *a.one;
  if (one.object_count() == 0) return {false, "F0", "index has no objects"};
  for (ObjId x = 0; x < one.object_count(); ++x) {
    for (ObjId y = x + 1; y < one.object_count(); ++y) {
      bool found = false;
      for (ObjId z = 0; z < one.object_count() && !found; ++z) {
        found = !one.hom(x, z).empty() && !one.hom(y, z).empty();
      }
      if (!found) {
        return {false, "F1",
                "no cospan on " + one.objects[x] + ", " + one.objects[y]};
      }
    }
  }
  for (ObjId x = 0; x < one.object_count(); ++x) {
    for (ObjId y = 0; y < one.object_count(); ++y) {
      const auto& par = one.hom(x, y);
      for (CellId u : par) {
        for (CellId v : par) {
          if (u >= v) continue;
          bool found = false;
          for (ObjId z = 0; z < one.object_count() && !found; ++z) {
            for (CellId w : one.hom(y, z)) {
              if (!a.isos_between(one.compose(w, u), one.compose(w, v))
                       .empty()) {
                found = true;
                break;
              }
            }
          }
          if (!found) {
            return {false, "F2",
                    "no 1-cell merging " + one.morphisms[u].name + ", " +
                        one.morphisms[v].name};
          }
        }
      }
    }
  }
  for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
    for (Cell2Id y = x + 1; y < a.cell2_count(); ++y) {
      if (a.cells[x].src != a.cells[y].src || a.cells[x].tgt != a.cells[y].tgt) {
        continue;
      }
      const ObjId b = one.tgt(a.cells[x].src);
      bool found = false;
      for (ObjId z = 0; z < one.object_count() && !found; ++z) {
        for (CellId w : one.hom(b, z)) {
          if (a.hcomp(a.id2[w], x) == a.hcomp(a.id2[w], y)) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        return {false, "F3",
                "no 1-cell equalizing " + a.cells[x].name + ", " +
                    a.cells[y].name};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Opposite and cocone adjunction

namespace {

std::string toggle_op(const std::string& name) {
  static const std::string kSuffix = "^op";
  if (name.size() >= kSuffix.size() &&
      name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    return name.substr(0, name.size() - kSuffix.size());
  }
  return name + kSuffix;
}

}  // namespace

TwoCatRef opposite_two_cat(const TwoCat& a) {
  const FinCat& one = *a.one;
  FinCat op;
  op.name = toggle_op(one.name);
  op.objects = one.objects;
  op.identities = one.identities;
  op.morphisms = one.morphisms;
  for (auto& m : op.morphisms) std::swap(m.src, m.tgt);
  op.reset_table();
  for (MorId g = 0; g < one.morphism_count(); ++g) {
    for (MorId f = 0; f < one.morphism_count(); ++f) {
      op.compose_entry(g, f) = one.compose(f, g);
    }
  }
  op.reindex();

  TwoCat t;
  t.name = toggle_op(a.name);
  t.one = std::make_shared<const FinCat>(std::move(op));
  t.cells = a.cells;
  t.id2 = a.id2;
  t.vtable = a.vtable;
  const std::size_t n2 = a.cells.size();
  t.htable.assign(n2 * n2, kNone);
  for (std::size_t y = 0; y < n2; ++y) {
    for (std::size_t x = 0; x < n2; ++x) {
      t.htable[y * n2 + x] = a.htable[x * n2 + y];
    }
  }
  return std::make_shared<const TwoCat>(std::move(t));
}

TwoCatRef adjoin_terminal(const TwoCat& a, const std::string& top) {
  const FinCat& one = *a.one;
  CatBuilder cb(one.name + "+" + top);
  for (ObjId x = 0; x < one.object_count(); ++x) {
    cb.object(one.objects[x]);
    cb.identity_name(x, one.morphisms[one.id(x)].name);
  }
  const ObjId t = cb.object(top);
  std::vector<MorId> to_top(one.object_count() + 1);
  for (MorId f = 0; f < one.morphism_count(); ++f) {
    if (one.is_identity(f)) continue;
    cb.morphism(one.morphisms[f].name, one.src(f), one.tgt(f));
  }
  // Re-map old morphism ids: identities keep their slot order by object, so
  // translate through names.
  FinCat& raw = cb.raw();
  for (ObjId x = 0; x < one.object_count(); ++x) {
    to_top[x] = cb.morphism(one.objects[x] + "->" + top, x, t);
  }
  to_top[t] = raw.identities[t];
  auto new_id = [&](MorId f) {
    for (MorId g = 0; g < raw.morphism_count(); ++g) {
      if (raw.morphisms[g].name == one.morphisms[f].name) return g;
    }
    return kNone;
  };
  std::vector<MorId> remap(one.morphism_count());
  for (MorId f = 0; f < one.morphism_count(); ++f) remap[f] = new_id(f);
  for (MorId g = 0; g < one.morphism_count(); ++g) {
    for (MorId f = 0; f < one.morphism_count(); ++f) {
      const MorId h = one.compose(g, f);
      if (h != kNone) cb.compose(remap[g], remap[f], remap[h]);
    }
  }
  for (MorId f = 0; f < one.morphism_count(); ++f) {
    cb.compose(to_top[one.tgt(f)], remap[f], to_top[one.src(f)]);
  }
  CatRef extended = cb.finish();

  TwoCatBuilder tb(a.name + "+" + top, extended);
  std::vector<Cell2Id> remap2(a.cell2_count());
  for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
    const TwoCell& c = a.cells[x];
    if (a.id2[c.src] == x) {
      remap2[x] = tb.id2(remap[c.src]);
    } else {
      remap2[x] = tb.cell(c.name, remap[c.src], remap[c.tgt]);
    }
  }
  for (Cell2Id y = 0; y < a.cell2_count(); ++y) {
    for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
      if (a.vcomp(y, x) != kNone) tb.vcomp(remap2[y], remap2[x], remap2[a.vcomp(y, x)]);
      if (a.hcomp(y, x) != kNone) tb.hcomp(remap2[y], remap2[x], remap2[a.hcomp(y, x)]);
    }
  }
  for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
    const TwoCell& c = a.cells[x];
    const ObjId from = one.src(c.src);
    const ObjId to = one.tgt(c.src);
    tb.hcomp(tb.id2(to_top[to]), remap2[x], tb.id2(to_top[from]));
  }
  return tb.finish();
}

// ---------------------------------------------------------------------------
// Diagrams

TwoFunctorCheck check_two_functor(const TwoDiagram& f) {
  const TwoCat& a = *f.index;
  const FinCat& one = *a.one;
  if (static_cast<int>(f.fibers.size()) != a.object_count() ||
      static_cast<int>(f.on_cell.size()) != a.cell_count() ||
      static_cast<int>(f.on_cell2.size()) != a.cell2_count()) {
    return {false, "diagram tables do not match the index"};
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    const Functor& fu = f.on_cell[u];
    const std::string& n = one.morphisms[u].name;
    if (!fu.source || !fu.target ||
        !same_category(fu.source, f.fibers[one.src(u)]) ||
        !same_category(fu.target, f.fibers[one.tgt(u)])) {
      return {false, "image of " + n + " has the wrong fibers"};
    }
    if (auto bad = check_functor(fu)) {
      return {false, "image of " + n + " is not a functor: " + *bad};
    }
  }
  for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
    const NatTrans& t = f.on_cell2[x];
    if (!(t.source == f.on_cell[a.cells[x].src]) ||
        !(t.target == f.on_cell[a.cells[x].tgt])) {
      return {false, "image of 2-cell " + a.cells[x].name +
                         " has the wrong boundary"};
    }
    if (auto bad = check_natural(t)) {
      return {false, "image of 2-cell " + a.cells[x].name + ": " + *bad};
    }
  }
  for (ObjId x = 0; x < one.object_count(); ++x) {
    if (!(f.on_cell[one.id(x)] == identity_functor(f.fibers[x]))) {
      return {false, "identity 1-cell of " + one.objects[x] +
                         " not sent to the identity functor"};
    }
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    for (CellId v = 0; v < a.cell_count(); ++v) {
      const CellId vu = one.compose(v, u);
      if (vu == kNone) continue;
      if (!(f.on_cell[vu] == compose(f.on_cell[v], f.on_cell[u]))) {
        return {false, "composition " + one.morphisms[v].name + " o " +
                           one.morphisms[u].name + " not preserved"};
      }
    }
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    if (!(f.on_cell2[a.id2[u]] == identity_nat(f.on_cell[u]))) {
      return {false, "identity 2-cell on " + one.morphisms[u].name +
                         " not sent to an identity"};
    }
  }
  for (Cell2Id y = 0; y < a.cell2_count(); ++y) {
    for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
      const Cell2Id v = a.vcomp(y, x);
      if (v != kNone &&
          !(f.on_cell2[v] == vcompose(f.on_cell2[y], f.on_cell2[x]))) {
        return {false, "vertical composite " + a.cells[y].name + " . " +
                           a.cells[x].name + " not preserved"};
      }
      const Cell2Id h = a.hcomp(y, x);
      if (h != kNone &&
          !(f.on_cell2[h] == hcompose(f.on_cell2[y], f.on_cell2[x]))) {
        return {false, "horizontal composite " + a.cells[y].name + " " +
                           a.cells[x].name + " not preserved"};
      }
    }
  }
  return {};
}

ValidationReport validate_diagram(const TwoDiagram& f) {
  ValidationReport out;
  for (const Violation& v : validate_two_cat(*f.index)) {
    out.push_back({"index/" + v.rule, v.where});
  }
  for (const CatRef& c : f.fibers) {
    for (const Violation& v : validate_category(*c)) {
      out.push_back({"fiber " + c->name + "/" + v.rule, v.where});
    }
  }
  if (!out.empty()) return out;
  auto r = check_two_functor(f);
  if (!r.ok) out.push_back({"two-functor", r.counterexample});
  return out;
}

DiagramRef constant_diagram(const std::string& name, const TwoCatRef& index,
                            const CatRef& fiber) {
  auto d = std::make_shared<TwoDiagram>();
  d->name = name;
  d->index = index;
  d->fibers.assign(index->object_count(), fiber);
  d->on_cell.assign(index->cell_count(), identity_functor(fiber));
  d->on_cell2.assign(index->cell2_count(),
                     identity_nat(identity_functor(fiber)));
  return d;
}

void complete_diagram(TwoDiagram& f, std::vector<bool> known,
                      std::vector<bool> known2) {
  const TwoCat& a = *f.index;
  const FinCat& one = *a.one;
  f.on_cell.resize(a.cell_count());
  f.on_cell2.resize(a.cell2_count());
  known.resize(a.cell_count(), false);
  known2.resize(a.cell2_count(), false);
  for (ObjId x = 0; x < one.object_count(); ++x) {
    if (!known[one.id(x)]) {
      f.on_cell[one.id(x)] = identity_functor(f.fibers[x]);
      known[one.id(x)] = true;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (CellId u = 0; u < a.cell_count(); ++u) {
      for (CellId v = 0; v < a.cell_count(); ++v) {
        const CellId vu = one.compose(v, u);
        if (vu == kNone || known[vu] || !known[u] || !known[v]) continue;
        f.on_cell[vu] = compose(f.on_cell[v], f.on_cell[u]);
        known[vu] = true;
        changed = true;
      }
    }
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    if (known[u] && !known2[a.id2[u]]) {
      f.on_cell2[a.id2[u]] = identity_nat(f.on_cell[u]);
      known2[a.id2[u]] = true;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Cell2Id y = 0; y < a.cell2_count(); ++y) {
      for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
        if (!known2[x] || !known2[y]) continue;
        const Cell2Id v = a.vcomp(y, x);
        if (v != kNone && !known2[v]) {
          f.on_cell2[v] = vcompose(f.on_cell2[y], f.on_cell2[x]);
          known2[v] = changed = true;
        }
        const Cell2Id h = a.hcomp(y, x);
        if (h != kNone && !known2[h]) {
          f.on_cell2[h] = hcompose(f.on_cell2[y], f.on_cell2[x]);
          known2[h] = changed = true;
        }
      }
    }
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    if (!known[u]) {
      throw Error(ErrorKind::InvalidInput,
                  "diagram " + f.name + " gives no functor for 1-cell " +
                      one.morphisms[u].name);
    }
  }
  for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
    if (!known2[x]) {
      throw Error(ErrorKind::InvalidInput,
                  "diagram " + f.name + " gives no transformation for 2-cell " +
                      a.cells[x].name);
    }
  }
}

DiagramRef ingest_opposite(const TwoDiagram& declared) {
  auto d = std::make_shared<TwoDiagram>(declared);
  d->index = opposite_two_cat(*declared.index);
  d->orientation = Orientation::Opposite;
  return d;
}

}  // namespace fincolim
