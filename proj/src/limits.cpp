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

#include "fincolim/limits.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fincolim {

bool is_cone(const FinCat& c, const FiniteDiagram& d, const Cone& cone) {
  if (cone.legs.size() != d.nodes.size()) return false;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const MorId l = cone.legs[i];
    if (l < 0 || l >= c.morphism_count()) return false;
    if (c.src(l) != cone.vertex || c.tgt(l) != d.nodes[i]) return false;
  }
  for (const auto& e : d.edges) {
    if (c.compose(e.morphism, cone.legs[e.from]) != cone.legs[e.to]) {
      return false;
    }
  }
  return true;
}

namespace {

// Number of cones over `d` with vertex w.
std::size_t count_cones(const FinCat& c, const FiniteDiagram& d, ObjId w,
                        Budget& budget) {
  const std::size_t n = d.nodes.size();
  std::vector<std::vector<const DiagramEdge*>> checks(n);
  for (const auto& e : d.edges) {
    checks[std::max(e.from, e.to)].push_back(&e);
  }
  std::vector<MorId> legs(n, kNone);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      ++count;
      return;
    }
    for (MorId m : c.hom(w, d.nodes[i])) {
      budget.charge();
      legs[i] = m;
      bool ok = true;
      for (const DiagramEdge* e : checks[i]) {
        if (c.compose(e->morphism, legs[e->from]) != legs[e->to]) {
          ok = false;
          break;
        }
      }
      if (ok) go(i + 1);
    }
    legs[i] = kNone;
  };
  go(0);
  return count;
}

}  // namespace

UniversalCheck check_limit(const FinCat& c, const FiniteDiagram& d,
                           const Cone& cone, Budget budget) {
  if (!is_cone(c, d, cone)) return {false, "not a cone over the diagram"};
  for (ObjId w = 0; w < c.object_count(); ++w) {
    std::set<std::vector<MorId>> images;
    for (MorId k : c.hom(w, cone.vertex)) {
      budget.charge();
      std::vector<MorId> img;
      img.reserve(cone.legs.size());
      for (MorId l : cone.legs) img.push_back(c.compose(l, k));
      if (!images.insert(std::move(img)).second) {
        return {false, "two mediating morphisms from " + c.objects[w]};
      }
    }
    if (count_cones(c, d, w, budget) != images.size()) {
      return {false, "a cone from " + c.objects[w] + " does not factor"};
    }
  }
  return {};
}

FiniteDiagram empty_diagram() { return {}; }

FiniteDiagram discrete_pair(ObjId a, ObjId b) { return {{a, b}, {}}; }

FiniteDiagram parallel_pair(const FinCat& c, MorId f, MorId g) {
  return {{c.src(f), c.tgt(f)}, {{0, 1, f}, {0, 1, g}}};
}

FiniteDiagram cospan(const FinCat& c, MorId f, MorId g) {
  return {{c.src(f), c.src(g), c.tgt(f)}, {{0, 2, f}, {1, 2, g}}};
}

namespace {

const LimitAssignment& assignment_of(const FinCat& c) {
  if (!c.limits) {
    throw Error(ErrorKind::IncompleteAssignment,
                "category " + c.name + " has no chosen limits");
  }
  return *c.limits;
}

}  // namespace

Cone chosen_limit(const FinCat& c, const FiniteDiagram& d) {
  const LimitAssignment& lim = assignment_of(c);
  const std::size_t n = d.nodes.size();
  Cone cone;
  if (n == 0) {
    if (!lim.terminal) {
      throw Error(ErrorKind::IncompleteAssignment,
                  "no chosen terminal object in " + c.name);
    }
    cone.vertex = *lim.terminal;
    return cone;
  }
  cone.vertex = d.nodes[0];
  cone.legs.push_back(c.id(d.nodes[0]));
  for (std::size_t i = 1; i < n; ++i) {
    auto it = lim.products.find({cone.vertex, d.nodes[i]});
    if (it == lim.products.end()) {
      throw Error(ErrorKind::IncompleteAssignment,
                  "no chosen product of " + c.objects[cone.vertex] + " and " +
                      c.objects[d.nodes[i]]);
    }
    const ProductCone& p = it->second;
    for (MorId& l : cone.legs) l = c.compose(l, p.first);
    cone.legs.push_back(p.second);
    cone.vertex = p.vertex;
  }
  for (const auto& e : d.edges) {
    const MorId f = c.compose(e.morphism, cone.legs[e.from]);
    const MorId g = cone.legs[e.to];
    auto it = lim.equalizers.find({f, g});
    if (it == lim.equalizers.end()) {
      throw Error(ErrorKind::IncompleteAssignment,
                  "no chosen equalizer of " + c.morphisms[f].name + " and " +
                      c.morphisms[g].name);
    }
    const EqualizerCone& q = it->second;
    for (MorId& l : cone.legs) l = c.compose(l, q.inclusion);
    cone.vertex = q.vertex;
  }
  return cone;
}

ValidationReport validate_limits(const FinCat& c, Budget budget) {
  ValidationReport out;
  if (!c.limits) return out;
  const LimitAssignment& lim = *c.limits;
  auto mor_ok = [&](MorId m) { return m >= 0 && m < c.morphism_count(); };
  auto obj_ok = [&](ObjId a) { return a >= 0 && a < c.object_count(); };

  if (lim.terminal) {
    const ObjId t = *lim.terminal;
    if (!obj_ok(t)) {
      out.push_back({"terminal-unknown", c.name});
    } else {
      for (ObjId a = 0; a < c.object_count(); ++a) {
        if (c.hom(a, t).size() != 1) {
          out.push_back({"terminal-not-universal",
                         c.objects[t] + " from " + c.objects[a]});
          break;
        }
      }
    }
  } else if (lim.complete) {
    out.push_back({"incomplete-terminal", c.name});
  }

  for (const auto& [key, p] : lim.products) {
    const auto [a, b] = key;
    const std::string where =
        obj_ok(a) && obj_ok(b) ? c.objects[a] + " x " + c.objects[b] : "?";
    if (!obj_ok(a) || !obj_ok(b) || !obj_ok(p.vertex) || !mor_ok(p.first) ||
        !mor_ok(p.second)) {
      out.push_back({"product-unknown-reference", where});
      continue;
    }
    const FiniteDiagram d = discrete_pair(a, b);
    const Cone cone{p.vertex, {p.first, p.second}};
    if (!is_cone(c, d, cone)) {
      out.push_back({"product-ill-typed", where});
    } else if (!check_limit(c, d, cone, budget).ok) {
      out.push_back({"product-not-limiting", where});
    }
  }
  for (const auto& [key, q] : lim.equalizers) {
    const auto [f, g] = key;
    if (!mor_ok(f) || !mor_ok(g) || !obj_ok(q.vertex) ||
        !mor_ok(q.inclusion)) {
      out.push_back({"equalizer-unknown-reference", "?"});
      continue;
    }
    const std::string where = c.morphisms[f].name + ", " + c.morphisms[g].name;
    if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g)) {
      out.push_back({"equalizer-not-parallel", where});
      continue;
    }
    const FiniteDiagram d = parallel_pair(c, f, g);
    const Cone cone{q.vertex, {q.inclusion, c.compose(f, q.inclusion)}};
    if (c.src(q.inclusion) != q.vertex || c.tgt(q.inclusion) != c.src(f) ||
        !is_cone(c, d, cone)) {
      out.push_back({"equalizer-ill-typed", where});
    } else if (!check_limit(c, d, cone, budget).ok) {
      out.push_back({"equalizer-not-limiting", where});
    }
  }

  if (lim.complete) {
    for (ObjId a = 0; a < c.object_count(); ++a) {
      for (ObjId b = 0; b < c.object_count(); ++b) {
        if (!lim.products.count({a, b})) {
          out.push_back(
              {"incomplete-product", c.objects[a] + " x " + c.objects[b]});
        }
      }
    }
    for (ObjId a = 0; a < c.object_count(); ++a) {
      for (ObjId b = 0; b < c.object_count(); ++b) {
        for (MorId f : c.hom(a, b)) {
          for (MorId g : c.hom(a, b)) {
            if (!lim.equalizers.count({f, g})) {
              out.push_back({"incomplete-equalizer",
                             c.morphisms[f].name + ", " + c.morphisms[g].name});
            }
          }
        }
      }
    }
  }
  return out;
}

std::optional<LimitAssignment> poset_limits(const FinCat& c) {
  const int n = c.object_count();
  auto le = [&](ObjId a, ObjId b) { return !c.hom(a, b).empty(); };
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (c.hom(a, b).size() > 1) return std::nullopt;

  LimitAssignment lim;
  for (ObjId t = 0; t < n && !lim.terminal; ++t) {
    bool top = true;
    for (ObjId a = 0; a < n; ++a) top = top && le(a, t);
    if (top) lim.terminal = t;
  }
  if (!lim.terminal) return std::nullopt;
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      std::optional<ObjId> meet;
      for (ObjId p = 0; p < n && !meet; ++p) {
        if (!le(p, a) || !le(p, b)) continue;
        bool greatest = true;
        for (ObjId q = 0; q < n; ++q) {
          if (le(q, a) && le(q, b) && !le(q, p)) greatest = false;
        }
        if (greatest) meet = p;
      }
      if (!meet) return std::nullopt;
      lim.products[{a, b}] = {*meet, c.hom(*meet, a)[0], c.hom(*meet, b)[0]};
    }
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    lim.equalizers[{f, f}] = {c.src(f), c.id(c.src(f))};
  }
  lim.complete = true;
  return lim;
}

CatRef with_limits(const CatRef& c, LimitAssignment limits) {
  FinCat copy = *c;
  copy.limits = std::move(limits);
  copy.reindex();
  return std::make_shared<const FinCat>(std::move(copy));
}

ExactnessCheck check_exact(const Functor& f, Budget budget) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  const LimitAssignment& lim = assignment_of(c);
  if (!lim.complete) {
    throw Error(ErrorKind::IncompleteAssignment,
                "exactness needs a complete assignment on " + c.name);
  }
  auto map_diagram = [&](const FiniteDiagram& dg) {
    FiniteDiagram out;
    for (ObjId a : dg.nodes) out.nodes.push_back(f.on_obj[a]);
    for (const auto& e : dg.edges) {
      out.edges.push_back({e.from, e.to, f.on_mor[e.morphism]});
    }
    return out;
  };
  auto map_cone = [&](const Cone& cone) {
    Cone out{f.on_obj[cone.vertex], {}};
    for (MorId l : cone.legs) out.legs.push_back(f.on_mor[l]);
    return out;
  };
  auto test = [&](const FiniteDiagram& dg, const Cone& cone,
                  const std::string& what) -> std::optional<ExactnessCheck> {
    auto r = check_limit(d, map_diagram(dg), map_cone(cone), budget);
    if (r.ok) return std::nullopt;
    return ExactnessCheck{false, what + ": " + r.reason};
  };

  if (auto r = test(empty_diagram(), Cone{*lim.terminal, {}},
                    "terminal " + c.objects[*lim.terminal])) {
    return *r;
  }
  for (const auto& [key, p] : lim.products) {
    const Cone cone{p.vertex, {p.first, p.second}};
    if (auto r = test(discrete_pair(key.first, key.second), cone,
                      "product " + c.objects[key.first] + " x " +
                          c.objects[key.second])) {
      return *r;
    }
  }
  for (const auto& [key, q] : lim.equalizers) {
    const Cone cone{q.vertex,
                    {q.inclusion, c.compose(key.first, q.inclusion)}};
    if (auto r = test(parallel_pair(c, key.first, key.second), cone,
                      "equalizer " + c.morphisms[key.first].name + ", " +
                          c.morphisms[key.second].name)) {
      return *r;
    }
  }
  return {};
}

}  // namespace fincolim
