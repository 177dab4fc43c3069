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

#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "fincolim/enumerate.hpp"
#include "fincolim/limits.hpp"
#include "fincolim/restriction.hpp"
#include "fincolim/sites.hpp"
#include "oracles.hpp"

using namespace fincolim;

namespace {

MorId mor(const CatRef& c, const std::string& name) {
  return *c->find_morphism(name);
}

ObjId obj(const CatRef& c, const std::string& name) {
  return *c->find_object(name);
}

std::vector<ObjId> all_objects(const FinCat& c) {
  std::vector<ObjId> out;
  for (ObjId o = 0; o < c.object_count(); ++o) out.push_back(o);
  return out;
}

SiteRef trivial_site(const CatRef& c) {
  auto s = std::make_shared<Site>();
  s->name = "Trivial" + c->name;
  s->category = c;
  s->generators = all_objects(*c);
  return s;
}

// Diamond with top covered by a and b; generators bot, a, b.
SiteRef covered_diamond() {
  const CatRef d = corpus::diamond();
  auto s = std::make_shared<Site>();
  s->name = "CoveredDiamond";
  s->category = d;
  s->basis = {make_cover(obj(d, "top"), {mor(d, "a->top"), mor(d, "b->top")})};
  s->generators = {obj(d, "bot"), obj(d, "a"), obj(d, "b")};
  return s;
}

SiteDiagram site_diagram(const DiagramRef& d, const SiteRef& s) {
  return {d, std::vector<SiteRef>(d->fibers.size(), s)};
}

}  // namespace

TEST_CASE("validate_site examples") {
  const CatRef d = corpus::diamond();
  CHECK(validate_site(*trivial_site(d)).empty());
  CHECK(validate_site(*covered_diamond()).empty());

  Site gaps;
  gaps.name = "Gaps";
  gaps.category = d;
  gaps.generators = {obj(d, "a")};
  const ValidationReport r = validate_site(gaps);
  bool at_top = false;
  for (const Violation& v : r) at_top = at_top || (v.rule == "coverage" && v.where == "top");
  CHECK(at_top);

  Site no_limits = *trivial_site(corpus::vee());
  CHECK_FALSE(validate_site(no_limits).empty());

  Site bad_leg = *covered_diamond();
  bad_leg.basis.push_back(make_cover(obj(d, "a"), {mor(d, "b->top")}));
  CHECK_FALSE(validate_site(bad_leg).empty());
}

TEST_CASE("is_cover uses identity covers and refinement") {
  const SiteRef s = covered_diamond();
  const CatRef d = s->category;
  const ObjId top = obj(d, "top");
  CHECK(is_cover(*s, top, {d->id(top)}));
  CHECK(is_cover(*s, top, {mor(d, "a->top"), mor(d, "b->top")}));
  CHECK(is_cover(*s, top, {mor(d, "a->top"), mor(d, "b->top"), mor(d, "bot->top")}));
  CHECK_FALSE(is_cover(*s, top, {mor(d, "a->top")}));
  CHECK_FALSE(is_cover(*s, top, {mor(d, "bot->top")}));
  CHECK_FALSE(is_cover(*s, top, {}));
  CHECK(is_cover(*s, obj(d, "a"), {d->id(obj(d, "a"))}));
  CHECK_FALSE(is_cover(*trivial_site(d), top, {mor(d, "a->top"), mor(d, "b->top")}));
}

TEST_CASE("covered_objects follows covers transitively") {
  const SiteRef s = covered_diamond();
  const auto cov = covered_objects(*s);
  for (bool b : cov) CHECK(b);
  Site only_a = *s;
  only_a.generators = {obj(s->category, "a")};
  const auto part = covered_objects(only_a);
  CHECK(part[obj(s->category, "a")]);
  CHECK_FALSE(part[obj(s->category, "top")]);
  CHECK_FALSE(part[obj(s->category, "bot")]);
}

TEST_CASE("check_continuous examples") {
  const SiteRef s = covered_diamond();
  const CatRef d = s->category;
  CHECK(check_continuous(*s, *s, identity_functor(d)).continuous);
  const Functor swap = corpus::thin_functor(
      d, d, {{"bot", "bot"}, {"a", "b"}, {"b", "a"}, {"top", "top"}});
  CHECK(check_continuous(*s, *s, swap).continuous);
  const ContinuityCheck coarse = check_continuous(*s, *trivial_site(d), identity_functor(d));
  CHECK_FALSE(coarse.continuous);
  CHECK_FALSE(coarse.failing_cover.empty());
  // Sending the cover to an iso family is fine even in the coarse topology.
  const Functor to_top = corpus::thin_functor(
      d, d, {{"bot", "top"}, {"a", "top"}, {"b", "top"}, {"top", "top"}});
  CHECK(check_continuous(*s, *trivial_site(d), to_top).continuous);
}

TEST_CASE("validate_site_morphism flags non-exact functors") {
  const SiteRef s = covered_diamond();
  const CatRef d = s->category;
  const Functor to_a = corpus::thin_functor(
      d, d, {{"bot", "a"}, {"a", "a"}, {"b", "a"}, {"top", "a"}});
  CHECK_FALSE(validate_site_morphism({s, s, to_a}).empty());
  CHECK(validate_site_morphism({s, s, identity_functor(d)}).empty());
}

TEST_CASE("colimit site over a point is the fiber site") {
  const SiteRef s = covered_diamond();
  const ColimSite c =
      build_colim_site(site_diagram(corpus::point("PointDiamond", s->category), s));
  CHECK(validate_site(*c.site).empty());
  CHECK(c.site->basis.size() == s->basis.size());
  CHECK(c.site->generators.size() == s->generators.size());
  const Functor& leg = c.cone[0].functor;
  for (const Cover& b : s->basis) {
    std::vector<MorId> image;
    for (MorId l : b.legs) image.push_back(leg.on_mor[l]);
    CHECK(std::find(c.site->basis.begin(), c.site->basis.end(),
                    make_cover(leg.on_obj[b.target], image)) != c.site->basis.end());
  }
}

TEST_CASE("trivial fiber topologies give a trivial colimit topology") {
  const DiagramRef d = corpus::const_two();
  const ColimSite c = build_colim_site(site_diagram(d, trivial_site(corpus::two())));
  CHECK(c.site->basis.empty());
  CHECK(validate_site(*c.site).empty());
}

TEST_CASE("colimit basis is the image of the fiber bases") {
  const SiteRef s = covered_diamond();
  const SiteDiagram sd = site_diagram(corpus::diamond_chain(), s);
  CHECK(validate_site_diagram(sd).empty());
  const ColimSite c = build_colim_site(sd);
  CHECK(validate_site(*c.site).empty());
  std::set<Cover> expect;
  std::set<ObjId> gens;
  for (std::size_t a = 0; a < sd.sites.size(); ++a) {
    const Functor& leg = c.colim.lambda.legs[a];
    for (const Cover& b : sd.sites[a]->basis) {
      std::vector<MorId> image;
      for (MorId l : b.legs) image.push_back(leg.on_mor[l]);
      expect.insert(make_cover(leg.on_obj[b.target], image));
    }
    for (ObjId g : sd.sites[a]->generators) gens.insert(leg.on_obj[g]);
  }
  CHECK(std::set<Cover>(c.site->basis.begin(), c.site->basis.end()) == expect);
  CHECK(c.site->basis.size() == 3);
  CHECK(std::set<ObjId>(c.site->generators.begin(), c.site->generators.end()) == gens);
  CHECK(gens.size() == 9);
  for (const SiteMorphism& m : c.cone) {
    CHECK(check_continuous(m).continuous);
    CHECK(validate_site_morphism(m).empty());
  }
}

TEST_CASE("removing any generated cover breaks continuity of some leg") {
  const SiteRef s = covered_diamond();
  for (const DiagramRef& d : {corpus::diamond_chain(),
                              corpus::point("PointDiamond", s->category)}) {
    const ColimSite c = build_colim_site(site_diagram(d, s));
    const MutationResult m = mutate_colim_basis(c);
    CAPTURE(d->name);
    CHECK(m.tested + m.redundant == c.site->basis.size());
    CHECK(m.tested > 0);
    CHECK(m.survivors.empty());
  }
}

TEST_CASE("verify_site_pseudocolimit examples") {
  {
    const SiteDiagram sd = site_diagram(corpus::const_two(), trivial_site(corpus::two()));
    const ColimSite c = build_colim_site(sd);
    const SiteBicolimReport one = verify_site_pseudocolimit(sd, c, *trivial_site(corpus::one()));
    CHECK(one.functor_count == 1);
    CHECK(one.cone_count == 1);
    CHECK(one.isomorphism());
    const SiteBicolimReport two = verify_site_pseudocolimit(sd, c, *trivial_site(corpus::two()));
    const BicolimReport plain = verify_bicolimit(c.colim, corpus::two());
    // The trivial topology removes nothing; exactness alone trims the
    // plain tally.
    std::size_t exact = 0;
    for (const Functor& f : enumerate_functors(c.colim.colim, corpus::two())) {
      exact += check_exact(f).exact ? 1 : 0;
    }
    CHECK(two.functor_count == exact);
    CHECK(two.cone_count == exact);
    CHECK(exact < plain.functor_count);
    CHECK(two.isomorphism());
    CHECK(two.covers_from_basis);
  }
  {
    const SiteRef s = covered_diamond();
    const SiteDiagram sd = site_diagram(corpus::diamond_chain(), s);
    const ColimSite c = build_colim_site(sd);
    const SiteBicolimReport rep = verify_site_pseudocolimit(sd, c, *s);
    CHECK(rep.isomorphism());
    CHECK(rep.covers_from_basis);
    CHECK(rep.problems.empty());
    CHECK(rep.functor_count == rep.cone_count);
    CHECK(rep.transformation_count == rep.modification_count);
    CHECK(rep.functor_count > 0);
  }
}

TEST_CASE("site tallies are bounded by the plain tallies") {
  const SiteRef s = covered_diamond();
  for (const DiagramRef& d : {corpus::point("PointDiamond", s->category),
                              corpus::diamond_chain()}) {
    const SiteDiagram sd = site_diagram(d, s);
    const ColimSite c = build_colim_site(sd);
    for (const SiteRef& x : {trivial_site(corpus::two()), covered_diamond()}) {
      if (d == corpus::diamond_chain() && x->category == s->category) continue;
      CAPTURE(d->name);
      CAPTURE(x->name);
      const SiteBicolimReport sr = verify_site_pseudocolimit(sd, c, *x);
      const BicolimReport br = verify_bicolimit(c.colim, x->category);
      CHECK(sr.functor_count <= br.functor_count);
      CHECK(sr.cone_count <= br.cone_count);
      CHECK(sr.isomorphism());
    }
  }
}

TEST_CASE("restricting pseudocones to a closed sub-diagram") {
  const CatRef d = corpus::diamond();
  const DiagramRef amb = corpus::point("PointDiamond", d);
  // C = E: the identity restriction.
  const RestrictionResult whole = make_restriction(amb, {all_objects(*d)});
  REQUIRE(whole.restricted);
  for (const Pseudocone& h : corpus::sample_cones(amb, corpus::two(), 5)) {
    const Pseudocone r = restrict_pseudocone(h, whole.restricted, whole.inclusions);
    CHECK(r.legs[0].on_obj == h.legs[0].on_obj);
    CHECK(r.legs[0].on_mor == h.legs[0].on_mor);
  }
  // The closure of {top} is {top}.
  const AmbientDiagram a{amb, {{obj(d, "top")}}};
  const RestrictionResult res = restrict_diagram(a);
  REQUIRE(res.restricted);
  std::size_t checked = 0;
  const auto cones = corpus::sample_cones(amb, corpus::two(), 10);
  for (const Pseudocone& h : cones) {
    const Pseudocone r = restrict_pseudocone(h, res.restricted, res.inclusions);
    CHECK(check_pseudocone(r).ok);
    CHECK(oracle::pseudocone_holds(r));
    for (const Pseudocone& k : cones) {
      for (const Modification& phi : enumerate_modifications(h, k)) {
        const Modification m =
            restrict_modification(phi, res.restricted, res.inclusions);
        CHECK(check_modification(m).ok);
        CHECK(oracle::modification_holds(m));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("restricting a chain ambient with a collapsing transition") {
  const CatRef d = corpus::diamond();
  const Functor to_top = corpus::thin_functor(
      d, d, {{"bot", "top"}, {"a", "top"}, {"b", "top"}, {"top", "top"}});
  const DiagramRef amb =
      corpus::chain3("Collapse", d, d, d, to_top, identity_functor(d));
  const AmbientDiagram a{amb, {{obj(d, "a")}, {obj(d, "b")}, {obj(d, "b")}}};
  const RestrictionResult res = restrict_diagram(a);
  REQUIRE(res.restricted);
  CHECK(verify_restriction(res, &a).empty());
  for (const Pseudocone& h : corpus::sample_cones(amb, corpus::two(), 10)) {
    CHECK(check_pseudocone(restrict_pseudocone(h, res.restricted, res.inclusions)).ok);
  }
}

TEST_CASE("restrict_pseudocone rejects subsets not closed under transitions") {
  const CatRef d = corpus::diamond();
  const Functor to_top = corpus::thin_functor(
      d, d, {{"bot", "top"}, {"a", "top"}, {"b", "top"}, {"top", "top"}});
  const DiagramRef amb =
      corpus::chain3("Collapse", d, d, d, to_top, identity_functor(d));
  // Hand-built sub-diagram: C_1 = {b, top} but C_2 = {top}.
  const RestrictionResult bad = make_restriction(
      amb, {{obj(d, "a"), obj(d, "top")}, {obj(d, "b"), obj(d, "top")}, {obj(d, "top")}});
  if (!bad.restricted) {
    CHECK_FALSE(verify_restriction(bad).empty());
    return;
  }
  const Pseudocone h = corpus::sample_cones(amb, corpus::two(), 1).front();
  try {
    restrict_pseudocone(h, bad.restricted, bad.inclusions);
    FAIL("expected ClosureViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosureViolation);
  }
}

TEST_CASE("check_sheaf examples") {
  const SiteRef s = covered_diamond();
  const CatRef d = s->category;
  // Representable presheaf of top: one element everywhere.
  Presheaf rep{d, {1, 1, 1, 1}, {}};
  for (MorId f = 0; f < d->morphism_count(); ++f) rep.maps.push_back({0});
  CHECK(validate_presheaf(rep).empty());
  CHECK(check_sheaf(rep, *s).sheaf);

  // Two sections over a and over b but only one over top.
  Presheaf doubled{d, {1, 2, 2, 1}, std::vector<std::vector<int>>(d->morphism_count())};
  for (MorId f = 0; f < d->morphism_count(); ++f) {
    doubled.maps[f].assign(doubled.sizes[d->tgt(f)], 0);
    if (d->is_identity(f)) {
      for (int e = 0; e < doubled.sizes[d->src(f)]; ++e) doubled.maps[f][e] = e;
    }
  }
  CHECK(validate_presheaf(doubled).empty());
  const SheafCheck k = check_sheaf(doubled, *s);
  CHECK_FALSE(k.sheaf);
  CHECK_FALSE(k.failing_cover.empty());
}

TEST_CASE("check_sheaf agrees with the amalgamation oracle on every small presheaf") {
  const SiteRef s = covered_diamond();
  const SiteRef t = trivial_site(s->category);
  std::size_t valid = 0, sheaves = 0, non_sheaves = 0, rejected = 0;
  oracle::each_presheaf(s->category, 2, [&](const Presheaf& p) {
    const bool functorial = oracle::presheaf_functorial(p);
    CHECK(validate_presheaf(p).empty() == functorial);
    if (!functorial) {
      ++rejected;
      return;
    }
    ++valid;
    CHECK(check_sheaf(p, *t).sheaf);
    const bool expect = oracle::thin_sheaf(p, *s);
    CHECK(check_sheaf(p, *s).sheaf == expect);
    (expect ? sheaves : non_sheaves) += 1;
  });
  CHECK(valid > 100);
  CHECK(sheaves > 10);
  CHECK(non_sheaves > 10);
  CHECK(rejected > 100);
}
