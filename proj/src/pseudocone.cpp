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

#include "fincolim/pseudocone.hpp"

#include <algorithm>
#include <functional>

#include "fincolim/enumerate.hpp"

namespace fincolim {

bool operator==(const Pseudocone& a, const Pseudocone& b) {
  return a.legs.size() == b.legs.size() &&
         same_category(a.vertex, b.vertex) && a.legs == b.legs &&
         a.coherence == b.coherence;
}

bool operator==(const Modification& a, const Modification& b) {
  return a.components == b.components && a.source == b.source &&
         a.target == b.target;
}

namespace {

std::string cell_name(const TwoDiagram& d, CellId u) {
  return d.index->one->morphisms[u].name;
}

}  // namespace

EquationCheck check_pseudocone(const Pseudocone& h) {
  const TwoDiagram& d = *h.diagram;
  const TwoCat& a = *d.index;
  const FinCat& one = *a.one;
  if (static_cast<int>(h.legs.size()) != a.object_count() ||
      static_cast<int>(h.coherence.size()) != a.cell_count()) {
    return {false, "cone tables do not match the index"};
  }
  for (ObjId x = 0; x < a.object_count(); ++x) {
    const Functor& leg = h.legs[x];
    if (!same_category(leg.source, d.fibers[x]) ||
        !same_category(leg.target, h.vertex)) {
      return {false, "leg at " + one.objects[x] + " has the wrong boundary"};
    }
    if (auto bad = check_functor(leg)) {
      return {false, "leg at " + one.objects[x] + ": " + *bad};
    }
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    const NatTrans& c = h.coherence[u];
    const ObjId src = one.src(u);
    const ObjId tgt = one.tgt(u);
    if (!(c.source == h.legs[src]) ||
        !(c.target == compose(h.legs[tgt], d.on_cell[u]))) {
      return {false, "coherence at " + cell_name(d, u) +
                         " has the wrong boundary"};
    }
    if (auto bad = check_natural(c)) {
      return {false, "coherence at " + cell_name(d, u) + ": " + *bad};
    }
    if (!is_invertible(c)) {
      return {false, "coherence at " + cell_name(d, u) + " is not invertible"};
    }
  }
  for (ObjId x = 0; x < a.object_count(); ++x) {
    if (!(h.coherence[one.id(x)] == identity_nat(h.legs[x]))) {
      return {false, "unit equation at " + one.objects[x]};
    }
  }
  for (CellId u = 0; u < a.cell_count(); ++u) {
    for (CellId v = 0; v < a.cell_count(); ++v) {
      const CellId vu = one.compose(v, u);
      if (vu == kNone) continue;
      const NatTrans lhs =
          vcompose(whisker(h.coherence[v], d.on_cell[u]), h.coherence[u]);
      if (!(lhs == h.coherence[vu])) {
        return {false, "composition equation at " + cell_name(d, v) + " o " +
                           cell_name(d, u)};
      }
    }
  }
  for (Cell2Id g = 0; g < a.cell2_count(); ++g) {
    const TwoCell& c = a.cells[g];
    const ObjId tgt = one.tgt(c.src);
    const NatTrans lhs =
        vcompose(whisker(h.legs[tgt], d.on_cell2[g]), h.coherence[c.src]);
    if (!(lhs == h.coherence[c.tgt])) {
      return {false, "2-cell equation at " + c.name};
    }
  }
  return {};
}

EquationCheck check_modification(const Modification& phi) {
  const Pseudocone& g = phi.source;
  const Pseudocone& h = phi.target;
  if (g.diagram != h.diagram && g.diagram->name != h.diagram->name) {
    return {false, "source and target cones have different diagrams"};
  }
  if (!same_category(g.vertex, h.vertex)) {
    return {false, "source and target cones have different vertices"};
  }
  const TwoDiagram& d = *g.diagram;
  const FinCat& one = *d.index->one;
  if (static_cast<int>(phi.components.size()) != one.object_count()) {
    return {false, "component count does not match the index"};
  }
  for (ObjId x = 0; x < one.object_count(); ++x) {
    const NatTrans& c = phi.components[x];
    if (!(c.source == g.legs[x]) || !(c.target == h.legs[x])) {
      return {false, "component at " + one.objects[x] +
                         " has the wrong boundary"};
    }
    if (auto bad = check_natural(c)) {
      return {false, "component at " + one.objects[x] + ": " + *bad};
    }
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const NatTrans lhs = vcompose(h.coherence[u], phi.components[one.src(u)]);
    const NatTrans rhs =
        vcompose(whisker(phi.components[one.tgt(u)], d.on_cell[u]),
                 g.coherence[u]);
    if (!(lhs == rhs)) {
      return {false, "modification equation at " + cell_name(d, u)};
    }
  }
  return {};
}

Pseudocone strict_cone(const DiagramRef& diagram, const CatRef& vertex,
                       std::vector<Functor> legs) {
  const FinCat& one = *diagram->index->one;
  Pseudocone h{diagram, vertex, std::move(legs), {}};
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const Functor& la = h.legs[one.src(u)];
    const Functor via = compose(h.legs[one.tgt(u)], diagram->on_cell[u]);
    if (!(la == via)) {
      throw Error(ErrorKind::BoundaryMismatch,
                  "legs do not commute strictly along " +
                      one.morphisms[u].name);
    }
    h.coherence.push_back(NatTrans{la, via, identity_nat(la).components});
  }
  return h;
}

Modification identity_modification(const Pseudocone& h) {
  Modification m{h, h, {}};
  for (const Functor& leg : h.legs) m.components.push_back(identity_nat(leg));
  return m;
}

Modification compose_modifications(const Modification& psi,
                                   const Modification& phi) {
  if (!(phi.target == psi.source)) {
    throw Error(ErrorKind::BoundaryMismatch,
                "modifications are not composable");
  }
  Modification m{phi.source, psi.target, {}};
  for (std::size_t x = 0; x < phi.components.size(); ++x) {
    m.components.push_back(vcompose(psi.components[x], phi.components[x]));
  }
  return m;
}

Pseudocone postcompose_cone(const Pseudocone& f, const Functor& s) {
  Pseudocone h{f.diagram, s.target, {}, {}};
  for (const Functor& leg : f.legs) h.legs.push_back(compose(s, leg));
  for (const NatTrans& c : f.coherence) h.coherence.push_back(whisker(s, c));
  return h;
}

Modification postcompose_cell(const Pseudocone& f, const NatTrans& xi) {
  Modification m{postcompose_cone(f, xi.source),
                 postcompose_cone(f, xi.target),
                 {}};
  for (const Functor& leg : f.legs) m.components.push_back(whisker(xi, leg));
  return m;
}

Conjugation conjugate(const Pseudocone& g, const std::vector<NatTrans>& phi) {
  const TwoDiagram& d = *g.diagram;
  const FinCat& one = *d.index->one;
  if (static_cast<int>(phi.size()) != one.object_count()) {
    throw Error(ErrorKind::BoundaryMismatch,
                "conjugating family has the wrong size");
  }
  std::vector<NatTrans> phi_inv;
  Pseudocone h{g.diagram, g.vertex, {}, {}};
  for (ObjId x = 0; x < one.object_count(); ++x) {
    if (!(phi[x].source == g.legs[x])) {
      throw Error(ErrorKind::BoundaryMismatch,
                  "conjugating component at " + one.objects[x] +
                      " does not start at the cone leg");
    }
    phi_inv.push_back(inverse(phi[x]));
    h.legs.push_back(phi[x].target);
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const ObjId a = one.src(u);
    const ObjId b = one.tgt(u);
    h.coherence.push_back(
        vcompose(whisker(phi[b], d.on_cell[u]),
                 vcompose(g.coherence[u], phi_inv[a])));
  }
  Modification iso{g, h, phi};
  return {std::move(h), std::move(iso)};
}

std::vector<NatTrans> coherence_candidates(const DiagramRef& diagram,
                                           const std::vector<Functor>& legs,
                                           CellId u, Budget budget) {
  const FinCat& one = *diagram->index->one;
  const Functor& la = legs[one.src(u)];
  const Functor via = compose(legs[one.tgt(u)], diagram->on_cell[u]);
  std::vector<NatTrans> out;
  for (NatTrans& t : enumerate_nat_trans(la, via, budget)) {
    if (is_invertible(t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Pseudocone> enumerate_pseudocones(const DiagramRef& diagram,
                                              const CatRef& x,
                                              Budget budget) {
  const TwoDiagram& d = *diagram;
  const TwoCat& a = *d.index;
  const FinCat& one = *a.one;
  const int n = one.object_count();

  std::vector<std::vector<Functor>> leg_choices(n);
  for (ObjId o = 0; o < n; ++o) {
    leg_choices[o] = enumerate_functors(d.fibers[o], x, budget);
  }

  // Step plan: object o, then the non-identity 1-cells between objects <= o.
  struct Step {
    bool is_object;
    int id;
  };
  std::vector<Step> steps;
  std::vector<int> step_of_cell(a.cell_count(), -1);
  for (ObjId o = 0; o < n; ++o) {
    step_of_cell[one.id(o)] = static_cast<int>(steps.size());
    steps.push_back({true, o});
    for (CellId u = 0; u < a.cell_count(); ++u) {
      if (one.is_identity(u) || std::max(one.src(u), one.tgt(u)) != o) continue;
      step_of_cell[u] = static_cast<int>(steps.size());
      steps.push_back({false, u});
    }
  }
  std::vector<std::vector<std::pair<CellId, CellId>>> comp_checks(steps.size());
  for (CellId u = 0; u < a.cell_count(); ++u) {
    for (CellId v = 0; v < a.cell_count(); ++v) {
      const CellId vu = one.compose(v, u);
      if (vu == kNone || one.is_identity(u) || one.is_identity(v)) continue;
      const int at =
          std::max({step_of_cell[u], step_of_cell[v], step_of_cell[vu]});
      comp_checks[at].emplace_back(u, v);
    }
  }
  std::vector<std::vector<Cell2Id>> cell2_checks(steps.size());
  for (Cell2Id g = 0; g < a.cell2_count(); ++g) {
    const TwoCell& c = a.cells[g];
    if (c.src == c.tgt && a.id2[c.src] == g) continue;
    cell2_checks[std::max(step_of_cell[c.src], step_of_cell[c.tgt])]
        .push_back(g);
  }

  Pseudocone cur{diagram, x, std::vector<Functor>(n),
                 std::vector<NatTrans>(a.cell_count())};
  std::vector<Pseudocone> out;
  auto satisfied = [&](std::size_t s) {
    for (auto [u, v] : comp_checks[s]) {
      const NatTrans lhs =
          vcompose(whisker(cur.coherence[v], d.on_cell[u]), cur.coherence[u]);
      if (!(lhs.components == cur.coherence[one.compose(v, u)].components)) {
        return false;
      }
    }
    for (Cell2Id g : cell2_checks[s]) {
      const TwoCell& c = a.cells[g];
      const NatTrans lhs = vcompose(
          whisker(cur.legs[one.tgt(c.src)], d.on_cell2[g]), cur.coherence[c.src]);
      if (!(lhs.components == cur.coherence[c.tgt].components)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t s) {
    if (s == steps.size()) {
      out.push_back(cur);
      return;
    }
    const Step& step = steps[s];
    if (step.is_object) {
      const ObjId o = step.id;
      for (const Functor& leg : leg_choices[o]) {
        budget.charge();
        cur.legs[o] = leg;
        cur.coherence[one.id(o)] = identity_nat(leg);
        if (satisfied(s)) go(s + 1);
      }
    } else {
      const CellId u = step.id;
      for (NatTrans& t : coherence_candidates(diagram, cur.legs, u, budget)) {
        budget.charge();
        cur.coherence[u] = std::move(t);
        if (satisfied(s)) go(s + 1);
      }
    }
  };
  go(0);
  return out;
}

std::vector<Modification> enumerate_modifications(const Pseudocone& g,
                                                  const Pseudocone& h,
                                                  Budget budget) {
  const TwoDiagram& d = *g.diagram;
  const FinCat& one = *d.index->one;
  const int n = one.object_count();
  std::vector<std::vector<NatTrans>> choices(n);
  for (ObjId o = 0; o < n; ++o) {
    choices[o] = enumerate_nat_trans(g.legs[o], h.legs[o], budget);
  }
  std::vector<std::vector<CellId>> checks(n);
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    if (one.is_identity(u)) continue;
    checks[std::max(one.src(u), one.tgt(u))].push_back(u);
  }
  Modification cur{g, h, std::vector<NatTrans>(n)};
  std::vector<Modification> out;
  std::function<void(ObjId)> go = [&](ObjId o) {
    if (o == n) {
      out.push_back(cur);
      return;
    }
    for (const NatTrans& c : choices[o]) {
      budget.charge();
      cur.components[o] = c;
      bool ok = true;
      for (CellId u : checks[o]) {
        const NatTrans lhs = vcompose(h.coherence[u], cur.components[one.src(u)]);
        const NatTrans rhs = vcompose(
            whisker(cur.components[one.tgt(u)], d.on_cell[u]), g.coherence[u]);
        if (lhs.components != rhs.components) {
          ok = false;
          break;
        }
      }
      if (ok) go(o + 1);
    }
  };
  go(0);
  return out;
}

std::vector<int> cone_key(const Pseudocone& h) {
  std::vector<int> key;
  for (const Functor& leg : h.legs) {
    key.insert(key.end(), leg.on_obj.begin(), leg.on_obj.end());
    key.insert(key.end(), leg.on_mor.begin(), leg.on_mor.end());
  }
  for (const NatTrans& c : h.coherence) {
    key.insert(key.end(), c.components.begin(), c.components.end());
  }
  return key;
}

std::vector<int> modification_key(const Modification& phi) {
  std::vector<int> key;
  for (const NatTrans& c : phi.components) {
    key.insert(key.end(), c.components.begin(), c.components.end());
  }
  return key;
}

}  // namespace fincolim
