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

#include "fincolim/sites.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fincolim/enumerate.hpp"
#include "fincolim/limits.hpp"

namespace fincolim {

Cover make_cover(ObjId target, std::vector<MorId> legs) {
  std::sort(legs.begin(), legs.end());
  legs.erase(std::unique(legs.begin(), legs.end()), legs.end());
  return {target, std::move(legs)};
}

namespace {

// Some member s of `family` has s o g = b.
bool factors_through(const FinCat& c, MorId b,
                     const std::vector<MorId>& family) {
  for (MorId s : family) {
    if (c.tgt(s) != c.tgt(b)) continue;
    for (MorId g : c.hom(c.src(b), c.src(s))) {
      if (c.compose(s, g) == b) return true;
    }
  }
  return false;
}

std::string describe(const FinCat& c, ObjId target,
                     const std::vector<MorId>& legs) {
  std::string out = c.objects[target] + " <- {";
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (i) out += ", ";
    out += c.morphisms[legs[i]].name;
  }
  return out + "}";
}

}  // namespace

bool is_cover(const Site& s, ObjId target, const std::vector<MorId>& family) {
  const FinCat& c = *s.category;
  for (MorId f : family) {
    if (c.tgt(f) != target) return false;
  }
  if (factors_through(c, c.id(target), family)) return true;
  for (const Cover& b : s.basis) {
    if (b.target != target) continue;
    if (std::all_of(b.legs.begin(), b.legs.end(), [&](MorId leg) {
          return factors_through(c, leg, family);
        })) {
      return true;
    }
  }
  return false;
}

std::vector<bool> covered_objects(const Site& s) {
  const FinCat& c = *s.category;
  std::vector<bool> covered(c.object_count(), false);
  for (ObjId g : s.generators) {
    if (g >= 0 && g < c.object_count()) covered[g] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const Cover& b : s.basis) {
      if (covered[b.target]) continue;
      if (std::all_of(b.legs.begin(), b.legs.end(),
                      [&](MorId leg) { return covered[c.src(leg)]; })) {
        covered[b.target] = changed = true;
      }
    }
  }
  return covered;
}

ValidationReport validate_site(const Site& s, Budget budget) {
  ValidationReport out;
  const FinCat& c = *s.category;
  for (const Violation& v : validate_category(c)) {
    out.push_back({"category:" + v.rule, v.where});
  }
  if (!out.empty()) return out;
  if (!c.limits || !c.limits->complete) {
    out.push_back({"limits-incomplete", c.name});
  } else {
    for (const Violation& v : validate_limits(c, budget)) {
      out.push_back({"limits:" + v.rule, v.where});
    }
  }
  bool shape_ok = true;
  for (const Cover& b : s.basis) {
    if (b.target < 0 || b.target >= c.object_count()) {
      out.push_back({"cover-target", std::to_string(b.target)});
      shape_ok = false;
      continue;
    }
    for (MorId leg : b.legs) {
      if (leg < 0 || leg >= c.morphism_count() || c.tgt(leg) != b.target) {
        out.push_back({"cover-leg", c.objects[b.target]});
        shape_ok = false;
      }
    }
  }
  for (ObjId g : s.generators) {
    if (g < 0 || g >= c.object_count()) {
      out.push_back({"generator", std::to_string(g)});
      shape_ok = false;
    }
  }
  if (!shape_ok) return out;
  const std::vector<bool> covered = covered_objects(s);
  for (ObjId o = 0; o < c.object_count(); ++o) {
    if (!covered[o]) out.push_back({"coverage", c.objects[o]});
  }
  return out;
}

ContinuityCheck check_continuous(const Site& from, const Site& to,
                                 const Functor& f) {
  for (const Cover& b : from.basis) {
    std::vector<MorId> image;
    for (MorId leg : b.legs) image.push_back(f.map(leg));
    if (!is_cover(to, f(b.target), image)) {
      return {false, describe(*from.category, b.target, b.legs)};
    }
  }
  return {};
}

ContinuityCheck check_continuous(const SiteMorphism& m) {
  return check_continuous(*m.from, *m.to, m.functor);
}

ValidationReport validate_site_morphism(const SiteMorphism& m,
                                        Budget budget) {
  ValidationReport out;
  if (auto bad = check_functor(m.functor)) {
    out.push_back({"functor", *bad});
    return out;
  }
  if (const ExactnessCheck e = check_exact(m.functor, budget); !e.exact) {
    out.push_back({"exactness", e.counterexample});
  }
  if (const ContinuityCheck c = check_continuous(m); !c.continuous) {
    out.push_back({"continuity", c.failing_cover});
  }
  return out;
}

ValidationReport validate_site_diagram(const SiteDiagram& d, Budget budget) {
  ValidationReport out;
  const TwoDiagram& f = *d.diagram;
  if (d.sites.size() != f.fibers.size()) {
    out.push_back({"site-count", f.name});
    return out;
  }
  for (std::size_t a = 0; a < d.sites.size(); ++a) {
    const Site& s = *d.sites[a];
    if (!same_category(s.category, f.fibers[a])) {
      out.push_back({"site-fiber", s.name});
      continue;
    }
    for (const Violation& v : validate_site(s, budget)) {
      out.push_back({v.rule, s.name + ": " + v.where});
    }
  }
  if (!out.empty()) return out;
  const FinCat& one = *f.index->one;
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const SiteMorphism m{d.sites[one.src(u)], d.sites[one.tgt(u)],
                         f.on_cell[u]};
    for (const Violation& v : validate_site_morphism(m, budget)) {
      out.push_back({v.rule, one.morphisms[u].name + ": " + v.where});
    }
  }
  return out;
}

ColimSite build_colim_site(const SiteDiagram& d, BuildOptions options) {
  options.with_limits = true;
  ColimSite out;
  out.colim = build_pseudocolimit(d.diagram, options);
  const PseudocolimitResult& r = out.colim;
  auto site = std::make_shared<Site>();
  site->name = "Colim(" + d.diagram->name + ")";
  site->category = r.colim;
  std::set<Cover> seen;
  std::set<ObjId> gens;
  for (std::size_t a = 0; a < d.sites.size(); ++a) {
    const Functor& leg = r.lambda.legs[a];
    const Site& s = *d.sites[a];
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
      std::vector<MorId> image;
      for (MorId m : s.basis[i].legs) image.push_back(leg.map(m));
      Cover c = make_cover(leg(s.basis[i].target), std::move(image));
      if (seen.insert(c).second) {
        site->basis.push_back(std::move(c));
        out.origin.emplace_back(static_cast<ObjId>(a), i);
      }
    }
    for (ObjId g : s.generators) gens.insert(leg(g));
  }
  site->generators.assign(gens.begin(), gens.end());
  out.site = site;
  for (std::size_t a = 0; a < d.sites.size(); ++a) {
    out.cone.push_back({d.sites[a], out.site, r.lambda.legs[a]});
  }
  return out;
}

MutationResult mutate_colim_basis(const ColimSite& c) {
  MutationResult out;
  const Site& full = *c.site;
  for (std::size_t i = 0; i < full.basis.size(); ++i) {
    Site cut = full;
    cut.basis.erase(cut.basis.begin() + static_cast<std::ptrdiff_t>(i));
    const Cover& b = full.basis[i];
    if (is_cover(cut, b.target, b.legs)) {
      ++out.redundant;
      continue;
    }
    ++out.tested;
    const bool still = std::all_of(
        c.cone.begin(), c.cone.end(), [&](const SiteMorphism& m) {
          return check_continuous(*m.from, cut, m.functor).continuous;
        });
    if (still) out.survivors.push_back(describe(*full.category, b.target, b.legs));
  }
  return out;
}

namespace {

bool site_cone(const SiteDiagram& d, const Site& x, const Pseudocone& h,
               Budget budget) {
  for (std::size_t a = 0; a < h.legs.size(); ++a) {
    if (!check_exact(h.legs[a], budget).exact) return false;
    if (!check_continuous(*d.sites[a], x, h.legs[a]).continuous) return false;
  }
  return true;
}

// Every cover of `s`, found by scanning all families into each object, is
// sent to a cover of `x`.
bool preserves_all_covers(const Site& s, const Site& x, const Functor& f,
                          Budget budget) {
  const FinCat& c = *s.category;
  for (ObjId o = 0; o < c.object_count(); ++o) {
    std::vector<MorId> into;
    for (MorId m = 0; m < c.morphism_count(); ++m) {
      if (c.tgt(m) == o) into.push_back(m);
    }
    const std::size_t n = into.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      budget.charge();
      std::vector<MorId> family;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) family.push_back(into[i]);
      }
      if (!is_cover(s, o, family)) continue;
      std::vector<MorId> image;
      for (MorId m : family) image.push_back(f.map(m));
      if (!is_cover(x, f(o), image)) return false;
    }
  }
  return true;
}

}  // namespace

SiteBicolimReport verify_site_pseudocolimit(const SiteDiagram& d,
                                            const ColimSite& colim,
                                            const Site& x, Budget budget) {
  SiteBicolimReport rep;
  const PseudocolimitResult& r = colim.colim;
  const Site& l = *colim.site;

  std::vector<Functor> functors;
  for (Functor& f : enumerate_functors(l.category, x.category, budget)) {
    if (check_exact(f, budget).exact &&
        check_continuous(l, x, f).continuous) {
      functors.push_back(std::move(f));
    }
  }
  std::vector<Pseudocone> cones;
  for (Pseudocone& h : enumerate_pseudocones(d.diagram, x.category, budget)) {
    if (site_cone(d, x, h, budget)) cones.push_back(std::move(h));
  }
  rep.functor_count = functors.size();
  rep.cone_count = cones.size();

  std::map<std::vector<int>, std::size_t> cone_at;
  for (std::size_t i = 0; i < cones.size(); ++i) cone_at[cone_key(cones[i])] = i;
  std::vector<std::size_t> image(functors.size(), cones.size());
  std::vector<int> hits(cones.size(), 0);
  for (std::size_t i = 0; i < functors.size(); ++i) {
    auto it = cone_at.find(cone_key(postcompose_cone(r.lambda, functors[i])));
    if (it == cone_at.end()) {
      rep.bijective_on_objects = rep.bijective_on_morphisms = false;
      rep.problems.push_back("image of functor " + std::to_string(i) +
                             " is not a site pseudocone");
      continue;
    }
    image[i] = it->second;
    ++hits[it->second];
  }
  for (int h : hits) {
    if (h != 1) rep.bijective_on_objects = false;
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
  std::size_t mapped = 0;
  for (std::size_t i = 0; i < functors.size(); ++i) {
    for (std::size_t j = 0; j < functors.size(); ++j) {
      const auto nats = enumerate_nat_trans(functors[i], functors[j], budget);
      rep.transformation_count += nats.size();
      if (image[i] == cones.size() || image[j] == cones.size()) continue;
      const auto& target = mods[{image[i], image[j]}];
      std::set<std::vector<int>> seen;
      for (const NatTrans& xi : nats) {
        seen.insert(modification_key(postcompose_cell(r.lambda, xi)));
      }
      if (seen.size() != nats.size() || seen != target) {
        rep.bijective_on_morphisms = false;
        rep.problems.push_back("functors " + std::to_string(i) + ", " +
                               std::to_string(j) +
                               ": hom-set not mapped bijectively");
      }
      mapped += seen.size();
    }
  }
  if (mapped != rep.modification_count) rep.bijective_on_morphisms = false;

  for (const Functor& f : functors) {
    if (!preserves_all_covers(l, x, f, budget)) {
      rep.covers_from_basis = false;
      rep.problems.push_back("a basis-preserving factorization misses a cover");
      break;
    }
  }
  return rep;
}

namespace {

void require_square(const Functor& fu, const Functor& ia, const Functor& ib,
                    const Functor& restricted_fu, const std::string& cell) {
  const Functor top = compose(fu, ia);
  const Functor bottom = compose(ib, restricted_fu);
  if (top.on_obj != bottom.on_obj || top.on_mor != bottom.on_mor) {
    throw Error(ErrorKind::ClosureViolation,
                "transition " + cell + " does not restrict");
  }
}

}  // namespace

Pseudocone restrict_pseudocone(const Pseudocone& h,
                               const DiagramRef& restricted,
                               const std::vector<Functor>& inclusions) {
  const TwoDiagram& e = *h.diagram;
  const TwoDiagram& c = *restricted;
  const FinCat& one = *e.index->one;
  Pseudocone out;
  out.diagram = restricted;
  out.vertex = h.vertex;
  for (std::size_t a = 0; a < h.legs.size(); ++a) {
    out.legs.push_back(compose(h.legs[a], inclusions[a]));
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    const ObjId a = one.src(u);
    const ObjId b = one.tgt(u);
    require_square(e.on_cell[u], inclusions[a], inclusions[b], c.on_cell[u],
                   one.morphisms[u].name);
    NatTrans cell = whisker(h.coherence[u], inclusions[a]);
    cell.source = out.legs[a];
    cell.target = compose(out.legs[b], c.on_cell[u]);
    out.coherence.push_back(std::move(cell));
  }
  return out;
}

Modification restrict_modification(const Modification& phi,
                                   const DiagramRef& restricted,
                                   const std::vector<Functor>& inclusions) {
  Modification out;
  out.source = restrict_pseudocone(phi.source, restricted, inclusions);
  out.target = restrict_pseudocone(phi.target, restricted, inclusions);
  for (std::size_t a = 0; a < phi.components.size(); ++a) {
    NatTrans cell = whisker(phi.components[a], inclusions[a]);
    cell.source = out.source.legs[a];
    cell.target = out.target.legs[a];
    out.components.push_back(std::move(cell));
  }
  return out;
}

ValidationReport validate_presheaf(const Presheaf& p) {
  ValidationReport out;
  const FinCat& c = *p.category;
  if (static_cast<int>(p.sizes.size()) != c.object_count() ||
      static_cast<int>(p.maps.size()) != c.morphism_count()) {
    out.push_back({"shape", c.name});
    return out;
  }
  for (ObjId o = 0; o < c.object_count(); ++o) {
    if (p.sizes[o] < 0) out.push_back({"size", c.objects[o]});
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const auto& m = p.maps[f];
    if (static_cast<int>(m.size()) != p.sizes[c.tgt(f)] ||
        std::any_of(m.begin(), m.end(), [&](int x) {
          return x < 0 || x >= p.sizes[c.src(f)];
        })) {
      out.push_back({"map-typing", c.morphisms[f].name});
    }
  }
  if (!out.empty()) return out;
  for (ObjId o = 0; o < c.object_count(); ++o) {
    const auto& m = p.maps[c.id(o)];
    for (int x = 0; x < p.sizes[o]; ++x) {
      if (m[x] != x) {
        out.push_back({"identity", c.objects[o]});
        break;
      }
    }
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    for (MorId g = 0; g < c.morphism_count(); ++g) {
      const MorId gf = c.compose(g, f);
      if (gf == kNone) continue;
      for (int x = 0; x < p.sizes[c.tgt(g)]; ++x) {
        if (p.maps[gf][x] != p.maps[f][p.maps[g][x]]) {
          out.push_back({"composition", c.morphisms[g].name + " o " +
                                            c.morphisms[f].name});
          break;
        }
      }
    }
  }
  return out;
}

SheafCheck check_sheaf(const Presheaf& p, const Site& s, Budget budget) {
  const FinCat& c = *s.category;
  for (const Cover& b : s.basis) {
    const std::size_t n = b.legs.size();
    // chosen pullback legs for every ordered pair of cover legs
    std::vector<std::pair<MorId, MorId>> pulled(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Cone pb = chosen_limit(c, cospan(c, b.legs[i], b.legs[j]));
        pulled[i * n + j] = {pb.legs[0], pb.legs[1]};
      }
    }
    std::vector<int> family(n, 0);
    bool empty_domain = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.sizes[c.src(b.legs[i])] == 0) empty_domain = true;
    }
    while (!empty_domain) {
      budget.charge();
      bool compatible = true;
      for (std::size_t i = 0; i < n && compatible; ++i) {
        for (std::size_t j = 0; j < n && compatible; ++j) {
          const auto [pi, pj] = pulled[i * n + j];
          compatible = p.maps[pi][family[i]] == p.maps[pj][family[j]];
        }
      }
      if (compatible) {
        int glue = 0;
        for (int x = 0; x < p.sizes[b.target]; ++x) {
          bool restricts = true;
          for (std::size_t i = 0; i < n && restricts; ++i) {
            restricts = p.maps[b.legs[i]][x] == family[i];
          }
          glue += restricts;
        }
        if (glue != 1) {
          return {false, describe(c, b.target, b.legs) +
                             (glue == 0 ? ": no amalgamation"
                                        : ": amalgamation not unique")};
        }
      }
      std::size_t k = 0;
      while (k < n && ++family[k] == p.sizes[c.src(b.legs[k])]) {
        family[k++] = 0;
      }
      if (k == n) break;
    }
  }
  return {};
}

}  // namespace fincolim
