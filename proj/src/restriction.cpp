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

#include "fincolim/restriction.hpp"

#include <algorithm>
#include <set>

#include "fincolim/limits.hpp"

namespace fincolim {

ValidationReport validate_ambient(const AmbientDiagram& a, Budget budget) {
  ValidationReport out;
  const TwoDiagram& d = *a.diagram;
  for (const Violation& v : validate_diagram(d)) out.push_back(v);
  if (!out.empty()) return out;
  if (a.generators.size() != d.fibers.size()) {
    out.push_back({"generator-count", d.name});
    return out;
  }
  for (std::size_t x = 0; x < d.fibers.size(); ++x) {
    const FinCat& e = *d.fibers[x];
    if (!e.limits || !e.limits->complete) {
      out.push_back({"limits-incomplete", e.name});
    }
    if (a.generators[x].empty()) out.push_back({"generators-empty", e.name});
    for (ObjId g : a.generators[x]) {
      if (g < 0 || g >= e.object_count()) {
        out.push_back({"generator", e.name + ": " + std::to_string(g)});
      }
    }
  }
  if (!out.empty()) return out;
  const FinCat& one = *d.index->one;
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    if (const ExactnessCheck c = check_exact(d.on_cell[u], budget); !c.exact) {
      out.push_back({"exactness", one.morphisms[u].name + ": " +
                                      c.counterexample});
    }
  }
  return out;
}

CatRef full_subcategory(const CatRef& c, const std::vector<ObjId>& objects,
                        const std::string& name) {
  const FinCat& e = *c;
  std::vector<ObjId> obj_map(e.object_count(), kNone);
  FinCat s;
  s.name = name;
  for (ObjId o : objects) {
    obj_map[o] = s.object_count();
    s.objects.push_back(e.objects[o]);
  }
  std::vector<MorId> mor_map(e.morphism_count(), kNone);
  std::vector<MorId> back;
  for (MorId f = 0; f < e.morphism_count(); ++f) {
    if (obj_map[e.src(f)] == kNone || obj_map[e.tgt(f)] == kNone) continue;
    mor_map[f] = s.morphism_count();
    back.push_back(f);
    s.morphisms.push_back({e.morphisms[f].name, obj_map[e.src(f)],
                           obj_map[e.tgt(f)]});
  }
  for (ObjId o : objects) s.identities.push_back(mor_map[e.id(o)]);
  s.reset_table();
  for (MorId g = 0; g < s.morphism_count(); ++g) {
    for (MorId f = 0; f < s.morphism_count(); ++f) {
      const MorId h = e.compose(back[g], back[f]);
      s.compose_entry(g, f) = h == kNone ? kNone : mor_map[h];
    }
  }
  if (e.limits) {
    const LimitAssignment& lim = *e.limits;
    LimitAssignment sub;
    bool complete = lim.complete;
    if (lim.terminal && obj_map[*lim.terminal] != kNone) {
      sub.terminal = obj_map[*lim.terminal];
    } else {
      complete = false;
    }
    for (ObjId a : objects) {
      for (ObjId b : objects) {
        auto it = lim.products.find({a, b});
        if (it == lim.products.end() || obj_map[it->second.vertex] == kNone) {
          complete = false;
          continue;
        }
        sub.products[{obj_map[a], obj_map[b]}] = {obj_map[it->second.vertex],
                                                  mor_map[it->second.first],
                                                  mor_map[it->second.second]};
      }
    }
    for (MorId f : back) {
      for (MorId g : back) {
        if (e.src(f) != e.src(g) || e.tgt(f) != e.tgt(g)) continue;
        auto it = lim.equalizers.find({f, g});
        if (it == lim.equalizers.end() ||
            obj_map[it->second.vertex] == kNone) {
          complete = false;
          continue;
        }
        sub.equalizers[{mor_map[f], mor_map[g]}] = {
            obj_map[it->second.vertex], mor_map[it->second.inclusion]};
      }
    }
    sub.complete = complete;
    s.limits = std::move(sub);
  }
  s.reindex();
  return std::make_shared<const FinCat>(std::move(s));
}

std::vector<ObjId> finite_limit_closure(const FinCat& e,
                                        const std::vector<ObjId>& s) {
  if (!e.limits) {
    throw Error(ErrorKind::IncompleteAssignment,
                e.name + " has no chosen limits");
  }
  const LimitAssignment& lim = *e.limits;
  std::set<ObjId> in(s.begin(), s.end());
  auto need = [&](auto it, auto end, const std::string& what) {
    if (it == end) {
      throw Error(ErrorKind::IncompleteAssignment,
                  e.name + " lacks a chosen " + what);
    }
    return it->second.vertex;
  };
  if (!lim.terminal) {
    throw Error(ErrorKind::IncompleteAssignment,
                e.name + " lacks a chosen terminal");
  }
  in.insert(*lim.terminal);
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<ObjId> now(in.begin(), in.end());
    for (ObjId a : now) {
      for (ObjId b : now) {
        const ObjId p = need(lim.products.find({a, b}), lim.products.end(),
                             "product");
        changed |= in.insert(p).second;
        for (MorId f : e.hom(a, b)) {
          for (MorId g : e.hom(a, b)) {
            const ObjId q = need(lim.equalizers.find({f, g}),
                                 lim.equalizers.end(), "equalizer");
            changed |= in.insert(q).second;
          }
        }
      }
    }
  }
  return {in.begin(), in.end()};
}

RestrictionResult make_restriction(const DiagramRef& ambient,
                                   std::vector<std::vector<ObjId>> subsets) {
  const TwoDiagram& d = *ambient;
  const TwoCat& two = *d.index;
  const FinCat& one = *two.one;
  RestrictionResult r;
  r.ambient = ambient;
  for (auto& s : subsets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  r.subsets = std::move(subsets);

  std::vector<CatRef> subs;
  std::vector<std::vector<ObjId>> position;
  for (std::size_t x = 0; x < d.fibers.size(); ++x) {
    const CatRef& e = d.fibers[x];
    subs.push_back(full_subcategory(e, r.subsets[x], e->name + "|C"));
    Functor inc{subs.back(), e, r.subsets[x], {}};
    for (const Morphism& m : subs.back()->morphisms) {
      inc.on_mor.push_back(*e->find_morphism(m.name));
    }
    r.inclusions.push_back(std::move(inc));
    std::vector<ObjId> pos(e->object_count(), kNone);
    for (std::size_t k = 0; k < r.subsets[x].size(); ++k) {
      pos[r.subsets[x][k]] = static_cast<ObjId>(k);
    }
    position.push_back(std::move(pos));
  }

  auto restricted = std::make_shared<TwoDiagram>();
  restricted->name = d.name + "|C";
  restricted->index = d.index;
  restricted->fibers = subs;
  restricted->orientation = d.orientation;
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const ObjId a = one.src(u);
    const ObjId b = one.tgt(u);
    const Functor& fu = d.on_cell[u];
    Functor g{subs[a], subs[b], {}, {}};
    for (ObjId o : r.subsets[a]) {
      const ObjId image = position[b][fu(o)];
      if (image == kNone) return r;
      g.on_obj.push_back(image);
    }
    for (MorId m : r.inclusions[a].on_mor) {
      g.on_mor.push_back(*subs[b]->find_morphism(
          d.fibers[b]->morphisms[fu.map(m)].name));
    }
    restricted->on_cell.push_back(std::move(g));
  }
  for (Cell2Id c = 0; c < two.cell2_count(); ++c) {
    const TwoCell& cell = two.cells[c];
    const ObjId a = one.src(cell.src);
    const ObjId b = one.tgt(cell.src);
    NatTrans t{restricted->on_cell[cell.src], restricted->on_cell[cell.tgt],
               {}};
    for (ObjId o : r.subsets[a]) {
      const MorId m = d.on_cell2[c][o];
      t.components.push_back(
          *subs[b]->find_morphism(d.fibers[b]->morphisms[m].name));
    }
    restricted->on_cell2.push_back(std::move(t));
  }
  r.restricted = restricted;
  return r;
}

RestrictionResult restrict_diagram(const AmbientDiagram& a) {
  const TwoDiagram& d = *a.diagram;
  const FinCat& one = *d.index->one;
  std::vector<std::vector<ObjId>> c;
  for (std::size_t x = 0; x < d.fibers.size(); ++x) {
    c.push_back(finite_limit_closure(*d.fibers[x], a.generators[x]));
  }
  int rounds = 0;
  for (;;) {
    std::vector<std::set<ObjId>> next(d.fibers.size());
    for (CellId u = 0; u < one.morphism_count(); ++u) {
      for (ObjId o : c[one.src(u)]) next[one.tgt(u)].insert(d.on_cell[u](o));
    }
    std::vector<std::vector<ObjId>> closed;
    for (std::size_t x = 0; x < d.fibers.size(); ++x) {
      closed.push_back(finite_limit_closure(
          *d.fibers[x], {next[x].begin(), next[x].end()}));
    }
    ++rounds;
    if (closed == c) break;
    c = std::move(closed);
  }
  RestrictionResult r = make_restriction(a.diagram, std::move(c));
  r.rounds = rounds;
  return r;
}

ValidationReport verify_restriction(const RestrictionResult& r,
                                    const AmbientDiagram* generators) {
  ValidationReport out;
  const TwoDiagram& d = *r.ambient;
  const TwoCat& two = *d.index;
  const FinCat& one = *two.one;
  for (std::size_t x = 0; x < d.fibers.size(); ++x) {
    const FinCat& e = *d.fibers[x];
    const std::vector<ObjId>& s = r.subsets[x];
    if (generators) {
      for (ObjId g : generators->generators[x]) {
        if (!std::binary_search(s.begin(), s.end(), g)) {
          out.push_back({"generator-missing", e.name + ": " + e.objects[g]});
        }
      }
    }
    for (ObjId o : finite_limit_closure(e, s)) {
      if (!std::binary_search(s.begin(), s.end(), o)) {
        out.push_back({"closure", e.name + ": " + e.objects[o]});
      }
    }
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const auto& target = r.subsets[one.tgt(u)];
    for (ObjId o : r.subsets[one.src(u)]) {
      const ObjId image = d.on_cell[u](o);
      if (!std::binary_search(target.begin(), target.end(), image)) {
        out.push_back({"transition", one.morphisms[u].name + ": " +
                                         d.fibers[one.src(u)]->objects[o]});
      }
    }
  }
  if (!out.empty()) return out;
  if (!r.restricted) {
    out.push_back({"restricted-missing", d.name});
    return out;
  }
  const TwoDiagram& c = *r.restricted;
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const Functor top = compose(d.on_cell[u], r.inclusions[one.src(u)]);
    const Functor bottom = compose(r.inclusions[one.tgt(u)], c.on_cell[u]);
    if (top.on_obj != bottom.on_obj || top.on_mor != bottom.on_mor) {
      out.push_back({"square", one.morphisms[u].name});
    }
  }
  for (Cell2Id k = 0; k < two.cell2_count(); ++k) {
    const ObjId a = one.src(two.cells[k].src);
    const ObjId b = one.tgt(two.cells[k].src);
    for (std::size_t i = 0; i < r.subsets[a].size(); ++i) {
      if (d.on_cell2[k][r.subsets[a][i]] !=
          r.inclusions[b].map(c.on_cell2[k][static_cast<ObjId>(i)])) {
        out.push_back({"two-cell", two.cells[k].name});
        break;
      }
    }
  }
  if (const TwoFunctorCheck f = check_two_functor(c); !f.ok) {
    out.push_back({"two-functor", f.counterexample});
  }
  return out;
}

}  // namespace fincolim
