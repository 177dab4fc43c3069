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

#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "fincolim/restriction.hpp"

using namespace fincolim;

namespace {

using Subset = std::vector<ObjId>;

ObjId obj(const CatRef& c, const std::string& name) {
  return *c->find_object(name);
}

Subset names(const CatRef& c, std::initializer_list<const char*> ns) {
  Subset out;
  for (const char* n : ns) out.push_back(obj(c, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

bool contains(const Subset& big, const Subset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool member(const Subset& s, ObjId o) {
  return std::binary_search(s.begin(), s.end(), o);
}

// Closedness read directly off the chosen assignment.
bool closed(const FinCat& e, const Subset& s) {
  const LimitAssignment& l = *e.limits;
  if (l.terminal && !member(s, *l.terminal)) return false;
  for (const auto& [pair, cone] : l.products) {
    if (member(s, pair.first) && member(s, pair.second) && !member(s, cone.vertex)) {
      return false;
    }
  }
  for (const auto& [pair, cone] : l.equalizers) {
    const MorId f = pair.first;
    if (member(s, e.src(f)) && member(s, e.tgt(f)) && !member(s, cone.vertex)) {
      return false;
    }
  }
  return true;
}

// Least closed superset, by scanning every subset.
Subset least_closed(const FinCat& e, const Subset& s) {
  Subset best;
  bool found = false;
  for (const Subset& t : all_subsets(e.object_count())) {
    if (!contains(t, s) || !closed(e, t)) continue;
    if (!found || t.size() < best.size()) best = t;
    found = true;
  }
  return best;
}

CatRef diamond() { return corpus::diamond(); }

Functor to_top() {
  const CatRef d = diamond();
  return corpus::thin_functor(
      d, d, {{"bot", "top"}, {"a", "top"}, {"b", "top"}, {"top", "top"}});
}

// The three documented ambient diagrams.
AmbientDiagram chain_ab() {
  const CatRef d = diamond();
  const Subset ab = names(d, {"a", "b"});
  return {corpus::diamond_chain(), {ab, ab, ab}};
}

AmbientDiagram point_top() {
  const CatRef d = diamond();
  return {corpus::point("PointDiamond", d), {names(d, {"top"})}};
}

AmbientDiagram collapse() {
  const CatRef d = diamond();
  const DiagramRef amb = corpus::chain3("Collapse", d, d, d, to_top(), identity_functor(d));
  return {amb, {names(d, {"a"}), names(d, {"b"}), names(d, {"b"})}};
}

std::vector<AmbientDiagram> fixtures() { return {chain_ab(), point_top(), collapse()}; }

}  // namespace

TEST_CASE("finite_limit_closure examples") {
  const CatRef d = diamond();
  const Subset all = names(d, {"bot", "a", "b", "top"});
  CHECK(finite_limit_closure(*d, all) == all);
  CHECK(finite_limit_closure(*d, names(d, {"a", "b"})) == all);
  CHECK(finite_limit_closure(*d, names(d, {"top"})) == names(d, {"top"}));
  CHECK(finite_limit_closure(*d, {}) == names(d, {"top"}));
  CHECK(finite_limit_closure(*d, names(d, {"a"})) == names(d, {"a", "top"}));
}

TEST_CASE("finite_limit_closure is the least closed superset") {
  for (const CatRef& c : {corpus::one(), corpus::two(), corpus::three(), diamond()}) {
    CAPTURE(c->name);
    for (const Subset& s : all_subsets(c->object_count())) {
      const Subset k = finite_limit_closure(*c, s);
      CHECK(k == least_closed(*c, s));
    }
  }
}

TEST_CASE("finite_limit_closure is a closure operator") {
  for (const CatRef& c : {corpus::two(), corpus::three(), diamond()}) {
    const auto subsets = all_subsets(c->object_count());
    for (const Subset& s : subsets) {
      const Subset k = finite_limit_closure(*c, s);
      CHECK(contains(k, s));                          // extensive
      CHECK(finite_limit_closure(*c, k) == k);        // idempotent
      for (const Subset& t : subsets) {
        if (contains(t, s)) CHECK(contains(finite_limit_closure(*c, t), k));  // monotone
      }
    }
  }
}

TEST_CASE("restrict_diagram on the documented fixtures") {
  const CatRef d = diamond();
  const Subset all = names(d, {"bot", "a", "b", "top"});
  {
    const AmbientDiagram a = chain_ab();
    CHECK(validate_ambient(a).empty());
    const RestrictionResult r = restrict_diagram(a);
    CHECK(r.rounds == 1);
    for (const Subset& s : r.subsets) CHECK(s == all);
  }
  {
    const AmbientDiagram a = point_top();
    const RestrictionResult r = restrict_diagram(a);
    REQUIRE(r.subsets.size() == 1);
    CHECK(r.subsets[0] == finite_limit_closure(*d, a.generators[0]));
    CHECK(r.subsets[0] == names(d, {"top"}));
  }
  {
    const AmbientDiagram a = collapse();
    CHECK(validate_ambient(a).empty());
    const RestrictionResult r = restrict_diagram(a);
    CHECK(r.subsets[0] == names(d, {"a", "top"}));
    CHECK(r.subsets[1] == names(d, {"b", "top"}));
    CHECK(r.subsets[2] == names(d, {"b", "top"}));
  }
  for (const AmbientDiagram& a : fixtures()) {
    const RestrictionResult r = restrict_diagram(a);
    CAPTURE(a.diagram->name);
    CHECK(r.rounds <= 3);
    REQUIRE(r.restricted);
    CHECK(verify_restriction(r, &a).empty());
    CHECK(check_two_functor(*r.restricted).ok);
    for (std::size_t x = 0; x < r.subsets.size(); ++x) {
      CHECK(contains(r.subsets[x], a.generators[x]));
      CHECK(closed(*a.diagram->fibers[x], r.subsets[x]));
    }
  }
}

TEST_CASE("one-object index: restriction is the closure") {
  const CatRef d = diamond();
  for (const Subset& s : all_subsets(d->object_count())) {
    if (s.empty()) continue;
    const AmbientDiagram a{corpus::point("PointDiamond", d), {s}};
    const RestrictionResult r = restrict_diagram(a);
    CHECK(r.subsets[0] == finite_limit_closure(*d, s));
  }
}

TEST_CASE("restrict_diagram is idempotent") {
  for (const AmbientDiagram& a : fixtures()) {
    const RestrictionResult r = restrict_diagram(a);
    const RestrictionResult again = restrict_diagram({a.diagram, r.subsets});
    CAPTURE(a.diagram->name);
    CHECK(again.subsets == r.subsets);
    CHECK(again.rounds == 1);  // one transport step confirms the fixpoint
  }
}

TEST_CASE("restrict_diagram is monotone in the generators") {
  // Every nonempty generator choice per fiber of the collapse chain and the
  // constant chain, compared pairwise under inclusion.
  const CatRef d = diamond();
  std::vector<Subset> nonempty;
  for (const Subset& s : all_subsets(d->object_count())) {
    if (!s.empty()) nonempty.push_back(s);
  }
  std::size_t compared = 0;
  for (const DiagramRef& amb : {collapse().diagram, corpus::diamond_chain()}) {
    // Generators equal in fibers 1 and 2 keep the search small.
    std::vector<std::pair<std::vector<Subset>, std::vector<Subset>>> runs;
    for (const Subset& g0 : nonempty) {
      for (const Subset& g1 : nonempty) {
        const std::vector<Subset> gens{g0, g1, g1};
        runs.push_back({gens, restrict_diagram({amb, gens}).subsets});
      }
    }
    for (const auto& [ga, ca] : runs) {
      for (const auto& [gb, cb] : runs) {
        bool smaller = true;
        for (std::size_t x = 0; x < ga.size(); ++x) smaller = smaller && contains(gb[x], ga[x]);
        if (!smaller) continue;
        for (std::size_t x = 0; x < ca.size(); ++x) CHECK(contains(cb[x], ca[x]));
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("every restriction result satisfies its invariants") {
  const CatRef d = diamond();
  std::size_t checked = 0;
  for (const DiagramRef& amb : {collapse().diagram, corpus::diamond_chain()}) {
    for (const Subset& g0 : all_subsets(4)) {
      for (const Subset& g1 : all_subsets(4)) {
        if (g0.empty() || g1.empty()) continue;
        const AmbientDiagram a{amb, {g0, g1, g1}};
        const RestrictionResult r = restrict_diagram(a);
        REQUIRE(r.restricted);
        CHECK(verify_restriction(r, &a).empty());
        CHECK(r.rounds <= 3);
        ++checked;
      }
    }
  }
  CHECK(checked == 2 * 15 * 15);
}

TEST_CASE("verify_restriction reports hand-built violations") {
  const CatRef d = diamond();
  {
    // {a, b, top} misses the product a x b = bot.
    const RestrictionResult r =
        make_restriction(corpus::point("PointDiamond", d), {names(d, {"a", "b", "top"})});
    const ValidationReport v = verify_restriction(r);
    bool closure = false;
    for (const Violation& x : v) closure = closure || x.rule == "closure";
    CHECK(closure);
  }
  {
    // Each subset is closed, but the identity 1 -> 2 carries b out of C_2.
    const AmbientDiagram a = collapse();
    const RestrictionResult r = make_restriction(
        a.diagram, {names(d, {"a", "top"}), names(d, {"b", "top"}), names(d, {"top"})});
    const ValidationReport v = verify_restriction(r);
    bool transition = false, closure = false;
    for (const Violation& x : v) {
      transition = transition || x.rule == "transition";
      closure = closure || x.rule == "closure";
    }
    CHECK(transition);
    CHECK_FALSE(closure);
  }
  {
    // Missing generator.
    const AmbientDiagram a = collapse();
    const RestrictionResult r = make_restriction(
        a.diagram, {names(d, {"top"}), names(d, {"b", "top"}), names(d, {"b", "top"})});
    const ValidationReport v = verify_restriction(r, &a);
    bool missing = false;
    for (const Violation& x : v) missing = missing || x.rule == "generator-missing";
    CHECK(missing);
  }
}

TEST_CASE("validate_ambient rejects bad inputs") {
  const CatRef d = diamond();
  AmbientDiagram empty_gens = point_top();
  empty_gens.generators[0].clear();
  CHECK_FALSE(validate_ambient(empty_gens).empty());

  // Constant at a: not exact (terminal goes to a).
  const Functor to_a = corpus::thin_functor(
      d, d, {{"bot", "a"}, {"a", "a"}, {"b", "a"}, {"top", "a"}});
  const AmbientDiagram bad{corpus::chain3("ToA", d, d, d, to_a, identity_functor(d)),
                           {names(d, {"a"}), names(d, {"a"}), names(d, {"a"})}};
  CHECK_FALSE(validate_ambient(bad).empty());
}

TEST_CASE("full_subcategory keeps induced homs and internal limits") {
  const CatRef d = diamond();
  const CatRef sub = full_subcategory(d, names(d, {"bot", "a", "b", "top"}), "Copy");
  CHECK(validate_category(*sub).empty());
  CHECK(sub->morphism_count() == d->morphism_count());
  REQUIRE(sub->limits);
  CHECK(sub->limits->complete);
  const CatRef at = full_subcategory(d, names(d, {"a", "top"}), "AT");
  CHECK(at->object_count() == 2);
  CHECK(at->morphism_count() == 3);
  CHECK(validate_category(*at).empty());
}
