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

#include "fincolim/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace fincolim {

namespace {

// Search plan for functor enumeration. Objects are assigned in order; right
// after object k every non-identity morphism whose endpoints are both <= k
// is assigned. A composition constraint g o f = h is checked at the step
// where the last of its three morphisms becomes known.
struct FunctorPlan {
  struct Step {
    bool is_object;
    int id;  // object or morphism
    std::vector<std::tuple<MorId, MorId, MorId>> checks;
  };
  std::vector<Step> steps;
};

FunctorPlan plan_functor_search(const FinCat& c) {
  FunctorPlan plan;
  std::vector<int> step_of(c.morphism_count(), -1);
  for (ObjId k = 0; k < c.object_count(); ++k) {
    step_of[c.id(k)] = static_cast<int>(plan.steps.size());
    plan.steps.push_back({true, k, {}});
    for (MorId f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      if (std::max(c.src(f), c.tgt(f)) != k) continue;
      step_of[f] = static_cast<int>(plan.steps.size());
      plan.steps.push_back({false, f, {}});
    }
  }
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    for (MorId f = 0; f < c.morphism_count(); ++f) {
      const MorId h = c.compose(g, f);
      if (h == kNone) continue;
      if (c.is_identity(g) || c.is_identity(f)) continue;
      const int at = std::max({step_of[g], step_of[f], step_of[h]});
      plan.steps[at].checks.emplace_back(g, f, h);
    }
  }
  return plan;
}

}  // namespace

std::vector<Functor> enumerate_functors(const CatRef& c, const CatRef& d,
                                        Budget budget, Partition partition) {
  const FunctorPlan plan = plan_functor_search(*c);
  std::vector<Functor> out;
  Functor cur{c, d, std::vector<ObjId>(c->object_count(), -1),
              std::vector<MorId>(c->morphism_count(), kNone)};
  const FinCat& dc = *d;

  std::function<void(std::size_t, bool)> go = [&](std::size_t s,
                                                   bool first_choice) {
    if (s == plan.steps.size()) {
      out.push_back(cur);
      return;
    }
    const auto& step = plan.steps[s];
    auto satisfied = [&]() {
      for (auto [g, f, h] : step.checks) {
        if (dc.compose(cur.on_mor[g], cur.on_mor[f]) != cur.on_mor[h]) {
          return false;
        }
      }
      return true;
    };
    int choice = 0;
    auto admit = [&]() {
      const bool ok = !first_choice || partition.parts <= 1 ||
                      choice % partition.parts == partition.part;
      ++choice;
      return ok;
    };
    if (step.is_object) {
      const ObjId a = step.id;
      for (ObjId x = 0; x < dc.object_count(); ++x) {
        budget.charge();
        if (!admit()) continue;
        cur.on_obj[a] = x;
        cur.on_mor[c->id(a)] = dc.id(x);
        if (satisfied()) go(s + 1, false);
      }
      cur.on_obj[a] = -1;
      cur.on_mor[c->id(a)] = kNone;
    } else {
      const MorId f = step.id;
      for (MorId y : dc.hom(cur.on_obj[c->src(f)], cur.on_obj[c->tgt(f)])) {
        budget.charge();
        cur.on_mor[f] = y;
        if (satisfied()) go(s + 1, false);
      }
      cur.on_mor[f] = kNone;
    }
  };
  if (c->object_count() == 0) {
    out.push_back(cur);
    return out;
  }
  go(0, true);
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g,
                                          Budget budget) {
  if (!same_category(f.source, g.source) ||
      !same_category(f.target, g.target)) {
    throw Error(ErrorKind::BoundaryMismatch,
                "transformations requested between non-parallel functors");
  }
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  // Naturality squares checked once both endpoints carry a component.
  std::vector<std::vector<MorId>> checks(c.object_count());
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    checks[std::max(c.src(m), c.tgt(m))].push_back(m);
  }
  std::vector<NatTrans> out;
  std::vector<MorId> comp(c.object_count(), kNone);
  std::function<void(ObjId)> go = [&](ObjId a) {
    if (a == c.object_count()) {
      out.push_back(NatTrans{f, g, comp});
      return;
    }
    for (MorId m : d.hom(f.on_obj[a], g.on_obj[a])) {
      budget.charge();
      comp[a] = m;
      bool ok = true;
      for (MorId e : checks[a]) {
        if (d.compose(g.on_mor[e], comp[c.src(e)]) !=
            d.compose(comp[c.tgt(e)], f.on_mor[e])) {
          ok = false;
          break;
        }
      }
      if (ok) go(a + 1);
    }
    comp[a] = kNone;
  };
  go(0);
  return out;
}

bool is_fully_faithful(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  for (ObjId a = 0; a < c.object_count(); ++a) {
    for (ObjId b = 0; b < c.object_count(); ++b) {
      const auto& src = c.hom(a, b);
      const auto& dst = d.hom(f.on_obj[a], f.on_obj[b]);
      if (src.size() != dst.size()) return false;
      std::vector<MorId> image;
      image.reserve(src.size());
      for (MorId m : src) image.push_back(f.on_mor[m]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// First iso F(c) -> d over objects c in order, if any.
std::optional<std::pair<ObjId, MorId>> iso_from_image(const Functor& f,
                                                      ObjId y) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    for (MorId m : d.hom(f.on_obj[x], y)) {
      if (is_iso(d, m)) return std::make_pair(x, m);
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_essentially_surjective(const Functor& f) {
  for (ObjId y = 0; y < f.target->object_count(); ++y) {
    if (!iso_from_image(f, y)) return false;
  }
  return true;
}

EquivalenceSearch equivalence_witness(const CatRef& c, const CatRef& d,
                                      Budget budget) {
  EquivalenceSearch result;
  for (const Functor& f : enumerate_functors(c, d, budget)) {
    ++result.functors_examined;
    if (!is_fully_faithful(f) || !is_essentially_surjective(f)) continue;

    const FinCat& cc = *c;
    const FinCat& dd = *d;
    // Quasi-inverse: pick e_y : F(G y) -> y, then G on morphisms through
    // full faithfulness.
    std::vector<MorId> counit(dd.object_count());
    Functor g{d, c, std::vector<ObjId>(dd.object_count()),
              std::vector<MorId>(dd.morphism_count())};
    for (ObjId y = 0; y < dd.object_count(); ++y) {
      auto [x, e] = *iso_from_image(f, y);
      g.on_obj[y] = x;
      counit[y] = e;
    }
    auto preimage = [&](ObjId a, ObjId b, MorId target) {
      for (MorId m : cc.hom(a, b)) {
        if (f.on_mor[m] == target) return m;
      }
      throw Error(ErrorKind::NoSolution, "functor is not full");
    };
    for (MorId m = 0; m < dd.morphism_count(); ++m) {
      const ObjId y = dd.src(m);
      const ObjId z = dd.tgt(m);
      const MorId transported = dd.compose(
          *inverse_of(dd, counit[z]), dd.compose(m, counit[y]));
      g.on_mor[m] = preimage(g.on_obj[y], g.on_obj[z], transported);
    }
    NatTrans eps{compose(f, g), identity_functor(d), counit};
    // back_forth_x : G F x -> x with F(back_forth_x) = e_{F x}.
    NatTrans eta_inv{compose(g, f), identity_functor(c),
                     std::vector<MorId>(cc.object_count())};
    for (ObjId x = 0; x < cc.object_count(); ++x) {
      eta_inv.components[x] =
          preimage(g.on_obj[f.on_obj[x]], x, counit[f.on_obj[x]]);
    }
    result.witness = EquivalenceWitness{f, g, eta_inv, eps};
    return result;
  }
  return result;
}

}  // namespace fincolim
