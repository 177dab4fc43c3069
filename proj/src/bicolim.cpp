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

#include "fincolim/bicolim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fincolim/enumerate.hpp"

namespace fincolim {

ObjId PseudocolimitResult::object_of(ObjId index, ObjId fiber) const {
  auto it = std::lower_bound(objects.begin(), objects.end(),
                             ColimObject{index, fiber});
  if (it == objects.end() || it->index != index || it->fiber != fiber) {
    return kNone;
  }
  return static_cast<ObjId>(it - objects.begin());
}

MorId PseudocolimitResult::class_of(ObjId from, ObjId to, const Span& s) const {
  auto it = span_index.find({from, to, s});
  return it == span_index.end() ? kNone : it->second;
}

namespace {

const FinCat& index_one(const TwoDiagram& d) { return *d.index->one; }

std::vector<int> iota_list(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

class Shuffler {
 public:
  Shuffler(const RefinementOrder& order, std::uint64_t salt) {
    if (order.seed) {
      rng_.emplace(*order.seed * 0x9e3779b97f4a7c15ULL + salt);
    }
  }

  template <typename T>
  std::vector<T> arrange(std::vector<T> v) {
    if (rng_) std::shuffle(v.begin(), v.end(), *rng_);
    return v;
  }

 private:
  std::optional<std::mt19937_64> rng_;
};

std::string object_label(const TwoDiagram& d, ColimObject p) {
  return "(" + index_one(d).objects[p.index] + "," +
         d.fibers[p.index]->objects[p.fiber] + ")";
}

std::string span_label(const TwoDiagram& d, ColimObject p, ColimObject q,
                       const Span& s) {
  const FinCat& a = index_one(d);
  return "[" + object_label(d, p) + "->" + object_label(d, q) + "@" +
         a.objects[s.apex] + ":" + a.morphisms[s.u].name + "," +
         a.morphisms[s.v].name + "," + d.fibers[s.apex]->morphisms[s.f].name +
         "]";
}

// Union-find over the spans of one hom-set.
struct Classes {
  std::vector<int> parent;
  explicit Classes(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int i, int j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
};

std::vector<Span> spans_between(const TwoDiagram& d, ColimObject p,
                                ColimObject q, Budget& budget) {
  const FinCat& a = index_one(d);
  std::vector<Span> out;
  for (ObjId c = 0; c < a.object_count(); ++c) {
    for (CellId u : a.hom(p.index, c)) {
      for (CellId v : a.hom(q.index, c)) {
        const FinCat& fc = *d.fibers[c];
        for (MorId f : fc.hom(d.on_cell[u](p.fiber), d.on_cell[v](q.fiber))) {
          budget.charge();
          out.push_back({c, u, v, f});
        }
      }
    }
  }
  return out;
}

// Pseudocone structure on the colimit vertex, legs and coherence.
Pseudocone make_lambda(const PseudocolimitResult& r) {
  const TwoDiagram& d = *r.diagram;
  const FinCat& a = index_one(d);
  Pseudocone lam;
  lam.diagram = r.diagram;
  lam.vertex = r.colim;
  for (ObjId x = 0; x < a.object_count(); ++x) {
    const CatRef& fx = d.fibers[x];
    Functor leg{fx, r.colim, {}, {}};
    for (ObjId o = 0; o < fx->object_count(); ++o) {
      leg.on_obj.push_back(r.object_of(x, o));
    }
    for (MorId f = 0; f < fx->morphism_count(); ++f) {
      const ObjId from = leg.on_obj[fx->src(f)];
      const ObjId to = leg.on_obj[fx->tgt(f)];
      leg.on_mor.push_back(
          r.class_of(from, to, {x, a.id(x), a.id(x), f}));
    }
    lam.legs.push_back(std::move(leg));
  }
  for (CellId u = 0; u < a.morphism_count(); ++u) {
    const ObjId src = a.src(u);
    const ObjId tgt = a.tgt(u);
    NatTrans cell{lam.legs[src], compose(lam.legs[tgt], d.on_cell[u]), {}};
    const FinCat& fb = *d.fibers[tgt];
    for (ObjId o = 0; o < d.fibers[src]->object_count(); ++o) {
      const ObjId image = d.on_cell[u](o);
      cell.components.push_back(r.class_of(r.object_of(src, o),
                                           r.object_of(tgt, image),
                                           {tgt, u, a.id(tgt), fb.id(image)}));
    }
    lam.coherence.push_back(std::move(cell));
  }
  return lam;
}

void retarget(Pseudocone& h, const CatRef& x) {
  h.vertex = x;
  for (Functor& leg : h.legs) leg.target = x;
  for (NatTrans& cell : h.coherence) {
    cell.source.target = x;
    cell.target.target = x;
  }
}

}  // namespace

bool spans_related(const TwoDiagram& d, ColimObject from, ColimObject to,
                   const Span& s1, const Span& s2, Budget& budget) {
  const TwoCat& two = *d.index;
  const FinCat& a = *two.one;
  for (ObjId target = 0; target < a.object_count(); ++target) {
    const FinCat& fd = *d.fibers[target];
    for (CellId w1 : a.hom(s1.apex, target)) {
      for (CellId w2 : a.hom(s2.apex, target)) {
        const auto alphas =
            two.isos_between(a.compose(w1, s1.u), a.compose(w2, s2.u));
        if (alphas.empty()) continue;
        const auto betas =
            two.isos_between(a.compose(w1, s1.v), a.compose(w2, s2.v));
        const MorId lhs_f = d.on_cell[w1].map(s1.f);
        const MorId rhs_f = d.on_cell[w2].map(s2.f);
        for (Cell2Id alpha : alphas) {
          const MorId ax = d.on_cell2[alpha][from.fiber];
          const MorId rhs = fd.compose(rhs_f, ax);
          for (Cell2Id beta : betas) {
            budget.charge();
            const MorId by = d.on_cell2[beta][to.fiber];
            if (fd.compose(by, lhs_f) == rhs) return true;
          }
        }
      }
    }
  }
  return false;
}

Span compose_spans(const TwoDiagram& d, ColimObject q, const Span& s2,
                   const Span& s1, const RefinementOrder& order) {
  const TwoCat& two = *d.index;
  const FinCat& a = *two.one;
  Shuffler shuffle(order, (static_cast<std::uint64_t>(s1.f) << 32) ^
                              (static_cast<std::uint64_t>(s2.f) << 16) ^
                              static_cast<std::uint64_t>(s1.apex * 131 +
                                                         s2.apex));
  for (ObjId target : shuffle.arrange(iota_list(a.object_count()))) {
    const FinCat& fd = *d.fibers[target];
    for (CellId w1 : shuffle.arrange(a.hom(s1.apex, target))) {
      for (CellId w2 : shuffle.arrange(a.hom(s2.apex, target))) {
        const auto gammas = shuffle.arrange(
            two.isos_between(a.compose(w1, s1.v), a.compose(w2, s2.u)));
        for (Cell2Id gamma : gammas) {
          const MorId step = d.on_cell2[gamma][q.fiber];
          const MorId f = fd.compose(
              d.on_cell[w2].map(s2.f),
              fd.compose(step, d.on_cell[w1].map(s1.f)));
          return {target, a.compose(w1, s1.u), a.compose(w2, s2.v), f};
        }
      }
    }
  }
  throw Error(ErrorKind::NotFiltered,
              "no common refinement for a composable pair of spans");
}

PseudocolimitResult build_pseudocolimit(const DiagramRef& diagram,
                                        BuildOptions options) {
  const TwoDiagram& d = *diagram;
  const FilteredCheck filtered = check_2filtered(*d.index);
  if (!filtered.filtered) {
    throw Error(ErrorKind::NotFiltered,
                filtered.condition + " fails at " + filtered.datum);
  }
  const FinCat& a = index_one(d);
  Budget& budget = options.budget;

  PseudocolimitResult r;
  r.diagram = diagram;
  for (ObjId x = 0; x < a.object_count(); ++x) {
    for (ObjId o = 0; o < d.fibers[x]->object_count(); ++o) {
      r.objects.push_back({x, o});
    }
  }

  FinCat l;
  l.name = "Colim(" + d.name + ")";
  for (const ColimObject& p : r.objects) l.objects.push_back(object_label(d, p));
  l.identities.assign(r.objects.size(), kNone);

  const int n = static_cast<int>(r.objects.size());
  for (ObjId pi = 0; pi < n; ++pi) {
    for (ObjId qi = 0; qi < n; ++qi) {
      const ColimObject p = r.objects[pi];
      const ColimObject q = r.objects[qi];
      const std::vector<Span> spans = spans_between(d, p, q, budget);
      Classes uf(spans.size());
      for (std::size_t i = 0; i < spans.size(); ++i) {
        for (std::size_t j = i + 1; j < spans.size(); ++j) {
          if (uf.find(static_cast<int>(i)) == uf.find(static_cast<int>(j))) {
            continue;
          }
          if (spans_related(d, p, q, spans[i], spans[j], budget)) {
            uf.unite(static_cast<int>(i), static_cast<int>(j));
          }
        }
      }
      // spans are generated in increasing order, so each root is the least
      // member of its class and classes come out sorted by representative
      std::map<int, MorId> by_root;
      for (std::size_t i = 0; i < spans.size(); ++i) {
        const int root = uf.find(static_cast<int>(i));
        auto [it, fresh] = by_root.try_emplace(root, l.morphism_count());
        if (fresh) {
          l.morphisms.push_back({span_label(d, p, q, spans[i]), pi, qi});
          r.classes.emplace_back();
        }
        r.classes[it->second].push_back(spans[i]);
        r.span_index[{pi, qi, spans[i]}] = it->second;
      }
      if (pi == qi) {
        const Span unit{p.index, a.id(p.index), a.id(p.index),
                        d.fibers[p.index]->id(p.fiber)};
        const MorId id = r.span_index.at({pi, qi, unit});
        l.identities[pi] = id;
        l.morphisms[id].name = "id_" + l.objects[pi];
      }
    }
  }

  l.reset_table();
  for (MorId f = 0; f < l.morphism_count(); ++f) {
    for (MorId g = 0; g < l.morphism_count(); ++g) {
      if (l.morphisms[g].src != l.morphisms[f].tgt) continue;
      const ObjId pi = l.morphisms[f].src;
      const ObjId qi = l.morphisms[f].tgt;
      const ObjId ri = l.morphisms[g].tgt;
      const Span s = compose_spans(d, r.objects[qi], r.classes[g].front(),
                                   r.classes[f].front(), options.order);
      const MorId h = r.class_of(pi, ri, s);
      if (h == kNone) {
        throw Error(ErrorKind::InvalidInput,
                    "composite span falls outside the span enumeration");
      }
      l.compose_entry(g, f) = h;
    }
  }
  l.reindex();
  r.colim = std::make_shared<const FinCat>(std::move(l));
  r.lambda = make_lambda(r);

  if (options.with_limits) {
    LimitAssignment lim = colim_limit_assignment(r, Budget(budget.cap()));
    r.colim = with_limits(r.colim, std::move(lim));
    retarget(r.lambda, r.colim);
  }
  return r;
}

std::vector<std::string> check_span_transitivity(const PseudocolimitResult& r,
                                                 Budget budget) {
  const TwoDiagram& d = *r.diagram;
  const FinCat& l = *r.colim;
  std::vector<std::string> out;
  for (ObjId pi = 0; pi < l.object_count(); ++pi) {
    for (ObjId qi = 0; qi < l.object_count(); ++qi) {
      std::vector<Span> spans;
      for (MorId m : l.hom(pi, qi)) {
        spans.insert(spans.end(), r.classes[m].begin(), r.classes[m].end());
      }
      const ColimObject p = r.objects[pi];
      const ColimObject q = r.objects[qi];
      const std::size_t n = spans.size();
      std::vector<char> rel(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          rel[i * n + j] = spans_related(d, p, q, spans[i], spans[j], budget);
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!rel[i * n + i]) {
          out.push_back("not reflexive at " + span_label(d, p, q, spans[i]));
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (rel[i * n + j] != rel[j * n + i]) {
            out.push_back("not symmetric at " +
                          span_label(d, p, q, spans[i]) + " " +
                          span_label(d, p, q, spans[j]));
          }
          if (!rel[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (rel[j * n + k] && !rel[i * n + k]) {
              out.push_back("not transitive at " +
                            span_label(d, p, q, spans[i]) + " " +
                            span_label(d, p, q, spans[j]) + " " +
                            span_label(d, p, q, spans[k]));
            }
          }
        }
      }
    }
  }
  return out;
}

Functor factor_cone(const PseudocolimitResult& r, const Pseudocone& h) {
  const TwoDiagram& d = *r.diagram;
  if (h.legs.size() != d.fibers.size() ||
      h.coherence.size() != d.on_cell.size()) {
    throw Error(ErrorKind::IllFormedCone, "cone shape does not match diagram");
  }
  if (const EquationCheck c = check_pseudocone(h); !c.ok) {
    throw Error(ErrorKind::IllFormedCone, c.violation);
  }
  const FinCat& x = *h.vertex;
  const FinCat& l = *r.colim;
  Functor out{r.colim, h.vertex, {}, {}};
  for (const ColimObject& p : r.objects) {
    out.on_obj.push_back(h.legs[p.index](p.fiber));
  }
  for (MorId m = 0; m < l.morphism_count(); ++m) {
    const ColimObject p = r.objects[l.src(m)];
    const ColimObject q = r.objects[l.tgt(m)];
    MorId value = kNone;
    for (const Span& s : r.classes[m]) {
      const MorId hu = h.coherence[s.u][p.fiber];
      const MorId hv = h.coherence[s.v][q.fiber];
      const auto hv_inv = inverse_of(x, hv);
      if (!hv_inv) {
        throw Error(ErrorKind::IllFormedCone, "coherence cell not invertible");
      }
      const MorId candidate =
          x.compose(*hv_inv, x.compose(h.legs[s.apex].map(s.f), hu));
      if (value == kNone) {
        value = candidate;
      } else if (value != candidate) {
        throw Error(ErrorKind::IllFormedCone,
                    "factorization not constant on " + l.morphisms[m].name);
      }
    }
    out.on_mor.push_back(value);
  }
  return out;
}

NatTrans factor_cell(const PseudocolimitResult& r, const Functor& t,
                     const Modification& phi) {
  const Functor ell = factor_cone(r, phi.source);
  NatTrans xi{ell, t, {}};
  for (const ColimObject& p : r.objects) {
    xi.components.push_back(phi.components[p.index][p.fiber]);
  }
  if (auto bad = check_natural(xi)) {
    throw Error(ErrorKind::NoSolution, "forced components: " + *bad);
  }
  return xi;
}

BicolimReport verify_bicolimit(const PseudocolimitResult& r, const CatRef& x,
                               Budget budget) {
  BicolimReport rep;
  const std::vector<Functor> functors =
      enumerate_functors(r.colim, x, budget);
  const std::vector<Pseudocone> cones =
      enumerate_pseudocones(r.diagram, x, budget);
  rep.functor_count = functors.size();
  rep.cone_count = cones.size();

  std::map<std::vector<int>, std::size_t> cone_at;
  for (std::size_t i = 0; i < cones.size(); ++i) cone_at[cone_key(cones[i])] = i;

  std::vector<std::size_t> image(functors.size(), cones.size());
  std::vector<int> hits(cones.size(), 0);
  for (std::size_t i = 0; i < functors.size(); ++i) {
    const Pseudocone c = postcompose_cone(r.lambda, functors[i]);
    auto it = cone_at.find(cone_key(c));
    if (it == cone_at.end()) {
      rep.problems.push_back("image of functor " + std::to_string(i) +
                             " is not an enumerated pseudocone");
      rep.injective_on_objects = false;
      rep.fully_faithful = false;
      continue;
    }
    image[i] = it->second;
    if (++hits[it->second] > 1) rep.injective_on_objects = false;
  }
  for (std::size_t k = 0; k < cones.size(); ++k) {
    if (hits[k] == 0) rep.surjective_on_objects = false;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::set<std::vector<int>>>
      mods;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    for (std::size_t j = 0; j < cones.size(); ++j) {
      std::set<std::vector<int>> keys;
      for (const Modification& m :
           enumerate_modifications(cones[k], cones[j], budget)) {
        keys.insert(modification_key(m));
      }
      rep.modification_count += keys.size();
      mods[{k, j}] = std::move(keys);
    }
  }

  for (std::size_t i = 0; i < functors.size(); ++i) {
    for (std::size_t j = 0; j < functors.size(); ++j) {
      const auto nats = enumerate_nat_trans(functors[i], functors[j], budget);
      rep.transformation_count += nats.size();
      if (image[i] == cones.size() || image[j] == cones.size()) continue;
      const auto& target = mods[{image[i], image[j]}];
      std::set<std::vector<int>> seen;
      for (const NatTrans& xi : nats) {
        const auto key = modification_key(postcompose_cell(r.lambda, xi));
        if (!target.count(key)) {
          rep.fully_faithful = false;
          rep.problems.push_back("transformation image is not a modification");
        }
        seen.insert(key);
      }
      if (seen.size() != nats.size() || seen.size() != target.size()) {
        rep.fully_faithful = false;
        rep.problems.push_back("functors " + std::to_string(i) + ", " +
                               std::to_string(j) +
                               ": hom-set not mapped bijectively");
      }
    }
  }

  for (std::size_t k = 0; k < cones.size() && rep.essentially_surjective;
       ++k) {
    if (hits[k] > 0) continue;
    bool found = false;
    for (std::size_t i = 0; i < functors.size() && !found; ++i) {
      if (image[i] == cones.size()) continue;
      for (const Modification& m :
           enumerate_modifications(cones[k], cones[image[i]], budget)) {
        if (std::all_of(m.components.begin(), m.components.end(),
                        [](const NatTrans& c) { return is_invertible(c); })) {
          found = true;
          break;
        }
      }
    }
    if (!found) {
      rep.essentially_surjective = false;
      rep.problems.push_back("pseudocone " + std::to_string(k) +
                             " is not isomorphic to any image");
    }
  }
  return rep;
}

namespace {

struct Lift {
  ObjId top = 0;
  std::vector<CellId> cells;  // per node
  FiniteDiagram lifted;
};

// Calls `visit` for every lift of `d` into some fiber until it returns true.
template <typename Visit>
bool for_each_lift(const PseudocolimitResult& r, const FiniteDiagram& d,
                   Budget& budget, Visit&& visit) {
  const TwoDiagram& diag = *r.diagram;
  const FinCat& a = index_one(diag);
  const FinCat& l = *r.colim;
  const std::size_t nodes = d.nodes.size();

  for (ObjId top = 0; top < a.object_count(); ++top) {
    const FinCat& ft = *diag.fibers[top];
    Lift lift;
    lift.top = top;
    lift.cells.assign(nodes, kNone);
    lift.lifted.nodes.assign(nodes, 0);
    lift.lifted.edges = d.edges;

    // conjugated edge targets in L, and their fiber preimages
    std::vector<MorId> inv_in(nodes), into(nodes);
    auto lift_edges = [&](auto&& self, std::size_t e) -> bool {
      if (e == d.edges.size()) {
        budget.charge();
        return visit(static_cast<const Lift&>(lift));
      }
      const DiagramEdge& edge = d.edges[e];
      const MorId want = l.compose(into[edge.to],
                                   l.compose(edge.morphism, inv_in[edge.from]));
      const ObjId from = lift.lifted.nodes[edge.from];
      const ObjId to = lift.lifted.nodes[edge.to];
      for (MorId g : ft.hom(from, to)) {
        if (r.lambda.legs[top].map(g) != want) continue;
        lift.lifted.edges[e].morphism = g;
        if (self(self, e + 1)) return true;
      }
      return false;
    };
    auto choose_cells = [&](auto&& self, std::size_t i) -> bool {
      if (i == nodes) return lift_edges(lift_edges, 0);
      const ColimObject p = r.objects[d.nodes[i]];
      for (CellId u : a.hom(p.index, top)) {
        budget.charge();
        lift.cells[i] = u;
        lift.lifted.nodes[i] = diag.on_cell[u](p.fiber);
        into[i] = r.lambda.coherence[u][p.fiber];
        inv_in[i] = *inverse_of(l, into[i]);
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (choose_cells(choose_cells, 0)) return true;
  }
  return false;
}

}  // namespace

ColimLimit colim_finite_limit(const PseudocolimitResult& r,
                              const FiniteDiagram& d, Budget budget) {
  const FinCat& l = *r.colim;
  std::optional<ColimLimit> found;
  for_each_lift(r, d, budget, [&](const Lift& lift) {
    const FinCat& ft = *r.diagram->fibers[lift.top];
    const Cone fiber = chosen_limit(ft, lift.lifted);
    const Functor& leg = r.lambda.legs[lift.top];
    Cone cone{leg(fiber.vertex), {}};
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      const MorId back =
          *inverse_of(l, r.lambda.coherence[lift.cells[i]]
                                           [r.objects[d.nodes[i]].fiber]);
      cone.legs.push_back(l.compose(back, leg.map(fiber.legs[i])));
    }
    // a lift through a fiber that still identifies too little is skipped;
    // some higher fiber resolves it
    if (!is_cone(l, d, cone) || !check_limit(l, d, cone, budget).ok) {
      return false;
    }
    found = ColimLimit{cone, lift.top, lift.lifted, fiber};
    return true;
  });
  if (!found) {
    throw Error(ErrorKind::NotLiftable,
                "no fiber lift of the diagram yields a limit");
  }
  return *found;
}

LimitAssignment colim_limit_assignment(const PseudocolimitResult& r,
                                       Budget budget) {
  const FinCat& l = *r.colim;
  LimitAssignment out;
  out.terminal = colim_finite_limit(r, empty_diagram(), budget).cone.vertex;
  for (ObjId a = 0; a < l.object_count(); ++a) {
    for (ObjId b = 0; b < l.object_count(); ++b) {
      const Cone c = colim_finite_limit(r, discrete_pair(a, b), budget).cone;
      out.products[{a, b}] = {c.vertex, c.legs[0], c.legs[1]};
    }
  }
  for (MorId f = 0; f < l.morphism_count(); ++f) {
    for (MorId g : l.hom(l.src(f), l.tgt(f))) {
      const Cone c =
          colim_finite_limit(r, parallel_pair(l, f, g), budget).cone;
      out.equalizers[{f, g}] = {c.vertex, c.legs[0]};
    }
  }
  out.complete = true;
  return out;
}

std::vector<LegExactness> verify_cone_exactness(const PseudocolimitResult& r,
                                                Budget budget) {
  std::vector<LegExactness> out;
  const FinCat& a = index_one(*r.diagram);
  for (ObjId x = 0; x < a.object_count(); ++x) {
    out.push_back({a.objects[x], check_exact(r.lambda.legs[x], budget)});
  }
  return out;
}

}  // namespace fincolim
