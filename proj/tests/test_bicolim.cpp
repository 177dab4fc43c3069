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

#include <map>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "fincolim/bicolim.hpp"
#include "fincolim/enumerate.hpp"
#include "fincolim/limits.hpp"
#include "oracles.hpp"
#include "pc_search.hpp"

using namespace fincolim;

namespace {

// Raw-table helpers for the span oracle.
bool raw_invertible(const TwoCat& a, Cell2Id k) {
  const int n = a.cell2_count();
  for (Cell2Id j = 0; j < n; ++j) {
    if (a.vtable[static_cast<std::size_t>(j) * n + k] == a.id2[a.cells[k].src] &&
        a.vtable[static_cast<std::size_t>(k) * n + j] == a.id2[a.cells[k].tgt]) {
      return true;
    }
  }
  return false;
}

std::vector<Cell2Id> raw_isos(const TwoCat& a, CellId u, CellId v) {
  std::vector<Cell2Id> out;
  for (Cell2Id k = 0; k < a.cell2_count(); ++k) {
    if (a.cells[k].src == u && a.cells[k].tgt == v && raw_invertible(a, k)) {
      out.push_back(k);
    }
  }
  return out;
}

// Every premorphism (A, x) -> (B, y) and the partition of them generated by
// the single-step relation, closed with union-find.
struct SpanOracle {
  std::vector<Span> spans;
  std::vector<int> root;
};

int find_root(std::vector<int>& p, int i) {
  while (p[i] != i) i = p[i] = p[p[i]];
  return i;
}

bool raw_related(const TwoDiagram& d, ColimObject from, ColimObject to,
                 const Span& s1, const Span& s2) {
  const TwoCat& a = *d.index;
  const FinCat& one = *a.one;
  for (CellId w1 = 0; w1 < one.morphism_count(); ++w1) {
    if (one.src(w1) != s1.apex) continue;
    for (CellId w2 = 0; w2 < one.morphism_count(); ++w2) {
      if (one.src(w2) != s2.apex || one.tgt(w2) != one.tgt(w1)) continue;
      const FinCat& fd = *d.fibers[one.tgt(w1)];
      for (Cell2Id al : raw_isos(a, one.compose(w1, s1.u), one.compose(w2, s2.u))) {
        for (Cell2Id be : raw_isos(a, one.compose(w1, s1.v), one.compose(w2, s2.v))) {
          const MorId lhs = fd.compose(d.on_cell2[be][to.fiber],
                                       d.on_cell[w1].on_mor[s1.f]);
          const MorId rhs = fd.compose(d.on_cell[w2].on_mor[s2.f],
                                       d.on_cell2[al][from.fiber]);
          if (lhs != kNone && lhs == rhs) return true;
        }
      }
    }
  }
  return false;
}

SpanOracle span_oracle(const TwoDiagram& d, ColimObject from, ColimObject to) {
  const FinCat& one = *d.index->one;
  SpanOracle o;
  for (ObjId c = 0; c < one.object_count(); ++c) {
    const FinCat& fc = *d.fibers[c];
    for (CellId u : oracle::scan_hom(one, from.index, c)) {
      for (CellId v : oracle::scan_hom(one, to.index, c)) {
        const ObjId s = d.on_cell[u].on_obj[from.fiber];
        const ObjId t = d.on_cell[v].on_obj[to.fiber];
        for (MorId f : oracle::scan_hom(fc, s, t)) o.spans.push_back({c, u, v, f});
      }
    }
  }
  o.root.resize(o.spans.size());
  std::iota(o.root.begin(), o.root.end(), 0);
  for (std::size_t i = 0; i < o.spans.size(); ++i) {
    for (std::size_t j = 0; j < o.spans.size(); ++j) {
      if (raw_related(d, from, to, o.spans[i], o.spans[j])) {
        o.root[find_root(o.root, static_cast<int>(i))] =
            find_root(o.root, static_cast<int>(j));
      }
    }
  }
  for (std::size_t i = 0; i < o.spans.size(); ++i) {
    o.root[i] = find_root(o.root, static_cast<int>(i));
  }
  return o;
}

std::size_t class_count(const SpanOracle& o) {
  return std::set<int>(o.root.begin(), o.root.end()).size();
}

// Diagrams whose verifier runs stay fast with every test vertex.
// Every fiber carries a complete limit assignment.
bool has_limits(const TwoDiagram& d) {
  for (const CatRef& f : d.fibers) {
    if (!f->limits || !f->limits->complete) return false;
  }
  return true;
}

bool small_diagram(const std::string& name) {
  return name != "diamond-chain" && name != "grow-chain" && name != "point-diamond";
}

// Index object receiving a 1-cell from every object.
ObjId apex_of(const TwoDiagram& d) {
  const FinCat& one = *d.index->one;
  for (ObjId t = 0; t < one.object_count(); ++t) {
    bool all = true;
    for (ObjId a = 0; a < one.object_count(); ++a) {
      all = all && !oracle::scan_hom(one, a, t).empty();
    }
    if (all) return t;
  }
  return kNone;
}

}  // namespace

TEST_CASE("colimit hom-sets match the brute-force span quotient") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    const TwoDiagram& d = *nd.diagram;
    const FinCat& l = *r.colim;
    CAPTURE(nd.name);
    CHECK(oracle::is_category(l));
    CHECK(validate_category(l).empty());
    std::size_t expected_objects = 0;
    for (const CatRef& f : d.fibers) expected_objects += f->object_count();
    CHECK(l.object_count() == static_cast<int>(expected_objects));
    for (ObjId p = 0; p < l.object_count(); ++p) {
      for (ObjId q = 0; q < l.object_count(); ++q) {
        const SpanOracle o = span_oracle(d, r.objects[p], r.objects[q]);
        CHECK(l.hom(p, q).size() == class_count(o));
        // Same partition: two spans share a library class iff they share an
        // oracle class.
        std::map<int, MorId> seen;
        for (std::size_t i = 0; i < o.spans.size(); ++i) {
          const MorId m = r.class_of(p, q, o.spans[i]);
          REQUIRE(m != kNone);
          const auto [it, fresh] = seen.emplace(o.root[i], m);
          if (!fresh) CHECK(it->second == m);
        }
        std::set<MorId> distinct;
        for (const auto& [_, m] : seen) distinct.insert(m);
        CHECK(distinct.size() == seen.size());
      }
    }
  }
}

TEST_CASE("const-two colimit has the documented shape") {
  const PseudocolimitResult r = build_pseudocolimit(corpus::const_two());
  CHECK(r.colim->object_count() == 6);
  const ObjId p = r.object_of(0, 0);
  const ObjId q = r.object_of(2, 1);
  CHECK(r.colim->hom(p, q).size() == 1);
  CHECK(r.colim->hom(q, p).empty());
  CHECK(equivalence_witness(r.colim, corpus::two()).witness.has_value());
  CHECK(check_span_transitivity(r).empty());
}

TEST_CASE("colimit over a point is the fiber") {
  const PseudocolimitResult r = build_pseudocolimit(corpus::point("PointTwo", corpus::two()));
  const FinCat& l = *r.colim;
  const FinCat& two = *corpus::two();
  CHECK(l.object_count() == 2);
  CHECK(l.morphism_count() == 3);
  // lambda is an isomorphism with identity coherence.
  const Functor& leg = r.lambda.legs[0];
  CHECK(is_fully_faithful(leg));
  for (MorId m = 0; m < two.morphism_count(); ++m) {
    CHECK(l.src(leg.on_mor[m]) == leg.on_obj[two.src(m)]);
  }
  for (const NatTrans& t : r.lambda.coherence) {
    for (MorId k : t.components) CHECK(l.is_identity(k));
  }
}

TEST_CASE("composition agrees with every common refinement") {
  std::size_t checked = 0;
  for (const auto& nd : corpus::filtered_diagrams()) {
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    const TwoDiagram& d = *nd.diagram;
    const TwoCat& a = *d.index;
    const FinCat& one = *a.one;
    const FinCat& l = *r.colim;
    CAPTURE(nd.name);
    for (MorId m1 = 0; m1 < l.morphism_count(); ++m1) {
      for (MorId m2 = 0; m2 < l.morphism_count(); ++m2) {
        if (l.tgt(m1) != l.src(m2)) continue;
        const ColimObject p = r.objects[l.src(m1)];
        const ColimObject q = r.objects[l.tgt(m1)];
        const ColimObject z = r.objects[l.tgt(m2)];
        const Span& s1 = r.classes[m1][0];
        const Span& s2 = r.classes[m2][0];
        const MorId expected = l.compose(m2, m1);
        for (CellId w1 = 0; w1 < one.morphism_count(); ++w1) {
          if (one.src(w1) != s1.apex) continue;
          for (CellId w2 = 0; w2 < one.morphism_count(); ++w2) {
            if (one.src(w2) != s2.apex || one.tgt(w2) != one.tgt(w1)) continue;
            const ObjId dd = one.tgt(w1);
            const FinCat& fd = *d.fibers[dd];
            for (Cell2Id g :
                 raw_isos(a, one.compose(w1, s1.v), one.compose(w2, s2.u))) {
              const MorId f = fd.compose(
                  d.on_cell[w2].on_mor[s2.f],
                  fd.compose(d.on_cell2[g][q.fiber], d.on_cell[w1].on_mor[s1.f]));
              REQUIRE(f != kNone);
              const Span comp{dd, one.compose(w1, s1.u), one.compose(w2, s2.v), f};
              CHECK(r.class_of(l.src(m1), l.tgt(m2), comp) == expected);
              (void)p;
              (void)z;
              ++checked;
            }
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("randomized refinement order yields the same colimit") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    const PseudocolimitResult base = build_pseudocolimit(nd.diagram);
    for (std::uint64_t seed : {1u, 7u, 42u, 1234u}) {
      BuildOptions opt;
      opt.order.seed = seed;
      const PseudocolimitResult r = build_pseudocolimit(nd.diagram, opt);
      CAPTURE(nd.name);
      CAPTURE(seed);
      CHECK(r.classes == base.classes);
      CHECK(r.colim->table == base.colim->table);
      CHECK(same_category(*r.colim, *base.colim));
    }
  }
}

TEST_CASE("span relation is transitive on every fixture") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    CAPTURE(nd.name);
    const auto bad = check_span_transitivity(r);
    CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
  }
}

TEST_CASE("lambda is a pseudocone with invertible coherence") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    CAPTURE(nd.name);
    CHECK(check_pseudocone(r.lambda).ok);
    CHECK(oracle::pseudocone_holds(r.lambda));
    for (std::size_t a = 0; a < r.lambda.legs.size(); ++a) {
      for (ObjId x = 0; x < nd.diagram->fibers[a]->object_count(); ++x) {
        CHECK(r.lambda.legs[a].on_obj[x] == r.object_of(static_cast<ObjId>(a), x));
      }
    }
    for (const NatTrans& t : r.lambda.coherence) {
      for (MorId k : t.components) CHECK(oracle::is_iso(*r.colim, k));
    }
  }
}

TEST_CASE("index with a terminal apex gives a colimit equivalent to its fiber") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    const ObjId t = apex_of(*nd.diagram);
    REQUIRE(t != kNone);
    bool ff = true;
    for (const Functor& f : nd.diagram->on_cell) ff = ff && is_fully_faithful(f);
    if (!ff) continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    CAPTURE(nd.name);
    CHECK(equivalence_witness(r.colim, nd.diagram->fibers[t]).witness.has_value());
  }
  // Inclusion chain One -> Two = Two.
  const PseudocolimitResult r = build_pseudocolimit(corpus::incl_chain());
  CHECK(equivalence_witness(r.colim, corpus::two()).witness.has_value());
}

TEST_CASE("a non-filtered index is rejected") {
  try {
    build_pseudocolimit(corpus::not_filtered());
    FAIL("expected NotFiltered");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiltered);
  }
}

TEST_CASE("factor_cone of lambda is the identity") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    CAPTURE(nd.name);
    CHECK(factor_cone(r, r.lambda) == identity_functor(r.colim));
  }
}

TEST_CASE("factor_cone is the unique strict factorization") {
  std::size_t checked = 0;
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (nd.name == "diamond-chain") continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    for (const CatRef& x : {corpus::two(), corpus::three(), corpus::iso()}) {
      CAPTURE(nd.name);
      CAPTURE(x->name);
      const auto cones = enumerate_pseudocones(nd.diagram, x);
      const auto all = pc_search::functors(r.colim, x);
      for (const Pseudocone& h : cones) {
        const Functor ell = factor_cone(r, h);
        CHECK(postcompose_cone(r.lambda, ell) == h);
        std::size_t solutions = 0;
        for (const Functor& f : all) {
          if (postcompose_cone(r.lambda, f) == h) {
            ++solutions;
            CHECK(oracle::same_functor(f, ell));
          }
        }
        CHECK(solutions == 1);
        ++checked;
      }
      // Every functor out of L is recovered from its restriction.
      for (const Functor& f : all) {
        CHECK(oracle::same_functor(factor_cone(r, postcompose_cone(r.lambda, f)), f));
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("factor_cone of the fold cone is the equivalence to Two") {
  const PseudocolimitResult r = build_pseudocolimit(corpus::const_two());
  const CatRef two = corpus::two();
  const Pseudocone fold =
      strict_cone(corpus::const_two(), two,
                  std::vector<Functor>(3, identity_functor(two)));
  const Functor ell = factor_cone(r, fold);
  CHECK(is_fully_faithful(ell));
  CHECK(is_essentially_surjective(ell));
  std::size_t solutions = 0;
  for (const Functor& f : pc_search::functors(r.colim, two)) {
    solutions += postcompose_cone(r.lambda, f) == fold ? 1 : 0;
  }
  CHECK(solutions == 1);
}

TEST_CASE("factor_cone rejects an ill-formed cone") {
  const PseudocolimitResult r = build_pseudocolimit(corpus::const_two());
  const CatRef two = corpus::two();
  Pseudocone bad = strict_cone(corpus::const_two(), two,
                               std::vector<Functor>(3, identity_functor(two)));
  const FinCat& one = *bad.diagram->index->one;
  bad.coherence[one.id(0)].components[0] = *two->find_morphism("0->1");
  try {
    factor_cone(r, bad);
    FAIL("expected IllFormedCone");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllFormedCone);
  }
}

TEST_CASE("factor_cell gives the unique 2-cell and preserves invertibility") {
  std::size_t checked = 0, invertible = 0;
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (!small_diagram(nd.name)) continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    const FinCat& l = *r.colim;
    for (const CatRef& x : {corpus::two(), corpus::iso()}) {
      CAPTURE(nd.name);
      CAPTURE(x->name);
      const auto ts = pc_search::functors(r.colim, x);
      for (const Pseudocone& h : enumerate_pseudocones(nd.diagram, x)) {
        const Functor ell = factor_cone(r, h);
        // Identity case.
        const NatTrans id = factor_cell(r, ell, identity_modification(h));
        CHECK(id == identity_nat(ell));
        for (const Functor& t : ts) {
          const Pseudocone tl = postcompose_cone(r.lambda, t);
          for (const Modification& phi : enumerate_modifications(h, tl)) {
            const NatTrans xi = factor_cell(r, t, phi);
            CHECK(xi.source == ell);
            // xi lambda = phi.
            for (std::size_t a = 0; a < phi.components.size(); ++a) {
              for (ObjId p = 0; p < nd.diagram->fibers[a]->object_count(); ++p) {
                CHECK(xi[r.object_of(static_cast<ObjId>(a), p)] ==
                      phi.components[a][p]);
              }
            }
            // Uniqueness by exhaustive search over all ell => t.
            std::size_t solutions = 0;
            for (const auto& comps : oracle::nat_trans(ell, t)) {
              bool match = true;
              for (std::size_t a = 0; a < phi.components.size() && match; ++a) {
                for (ObjId p = 0; p < nd.diagram->fibers[a]->object_count(); ++p) {
                  match = match && comps[r.object_of(static_cast<ObjId>(a), p)] ==
                                       phi.components[a][p];
                }
              }
              solutions += match ? 1 : 0;
            }
            CHECK(solutions == 1);
            bool phi_inv = true;
            for (const NatTrans& c : phi.components) {
              for (MorId k : c.components) phi_inv = phi_inv && oracle::is_iso(*x, k);
            }
            if (phi_inv) {
              ++invertible;
              for (MorId k : xi.components) CHECK(oracle::is_iso(*x, k));
            }
            ++checked;
          }
        }
      }
      (void)l;
    }
  }
  CHECK(checked > 50);
  CHECK(invertible > 10);
}

TEST_CASE("verify_bicolimit documented tallies") {
  const PseudocolimitResult point = build_pseudocolimit(corpus::point("PointTwo", corpus::two()));
  const BicolimReport p = verify_bicolimit(point, corpus::two());
  CHECK(p.functor_count == 3);
  CHECK(p.cone_count == 3);
  CHECK(p.isomorphism());

  const PseudocolimitResult r = build_pseudocolimit(corpus::const_two());
  const BicolimReport one = verify_bicolimit(r, corpus::one());
  CHECK(one.functor_count == 1);
  CHECK(one.cone_count == 1);
  CHECK(one.transformation_count == 1);
  CHECK(one.modification_count == 1);
  CHECK(one.isomorphism());

  const BicolimReport two = verify_bicolimit(r, corpus::two());
  CHECK(two.functor_count == two.cone_count);
  CHECK(two.transformation_count == two.modification_count);
  CHECK(two.isomorphism());
  CHECK(two.equivalence());
}

TEST_CASE("verify_bicolimit agrees with independent counts") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (!small_diagram(nd.name)) continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    for (const CatRef& x : {corpus::one(), corpus::two(), corpus::iso(), corpus::z2()}) {
      CAPTURE(nd.name);
      CAPTURE(x->name);
      const BicolimReport rep = verify_bicolimit(r, x);
      CHECK(rep.problems.empty());
      CHECK(rep.isomorphism());
      CHECK(rep.equivalence());
      CHECK(rep.functor_count == rep.cone_count);
      CHECK(rep.transformation_count == rep.modification_count);
      CHECK(rep.cone_count == pc_search::all_cone_keys(nd.diagram, x).size());
      if (x->name != "Z2") {
        CHECK(rep.functor_count == oracle::functors(*r.colim, *x).size());
      }
    }
  }
}

TEST_CASE("verify_bicolimit on larger instances") {
  for (const char* name : {"grow-chain", "point-diamond", "diamond-chain"}) {
    for (const auto& nd : corpus::filtered_diagrams()) {
      if (nd.name != name) continue;
      const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
      for (const CatRef& x : {corpus::one(), corpus::two()}) {
        CAPTURE(nd.name);
        CAPTURE(x->name);
        CHECK(verify_bicolimit(r, x).isomorphism());
      }
    }
  }
}

TEST_CASE("verify_bicolimit detects a non-universal cone") {
  // Replace the colimit by Three with lambda the inclusion of Two: more
  // functors out of the vertex than pseudocones.
  PseudocolimitResult r = build_pseudocolimit(corpus::point("PointTwo", corpus::two()));
  const CatRef three = corpus::three();
  const Functor incl =
      corpus::thin_functor(corpus::two(), three, {{"0", "0"}, {"1", "1"}});
  r.colim = three;
  r.lambda = strict_cone(r.diagram, three, {incl});
  const BicolimReport rep = verify_bicolimit(r, corpus::two());
  CHECK(rep.functor_count == 4);
  CHECK(rep.cone_count == 3);
  CHECK_FALSE(rep.isomorphism());
}

TEST_CASE("colim_finite_limit: terminal object") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (!has_limits(*nd.diagram)) continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    CAPTURE(nd.name);
    const FiniteDiagram empty = empty_diagram();
    const ColimLimit lim = colim_finite_limit(r, empty);
    CHECK(oracle::is_limit(*r.colim, empty, lim.cone));
    CHECK(check_limit(*r.colim, empty, lim.cone).ok);
  }
}

TEST_CASE("colim_finite_limit: every binary product and equalizer is limiting") {
  std::size_t checked = 0;
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (!has_limits(*nd.diagram)) continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    const FinCat& l = *r.colim;
    CAPTURE(nd.name);
    for (ObjId p = 0; p < l.object_count(); ++p) {
      for (ObjId q = 0; q < l.object_count(); ++q) {
        const FiniteDiagram d = discrete_pair(p, q);
        const ColimLimit lim = colim_finite_limit(r, d);
        CHECK(oracle::is_limit(l, d, lim.cone));
        ++checked;
        for (MorId f : l.hom(p, q)) {
          for (MorId g : l.hom(p, q)) {
            const FiniteDiagram e = parallel_pair(l, f, g);
            CHECK(oracle::is_limit(l, e, colim_finite_limit(r, e).cone));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("colim_finite_limit: product across fibers is the meet at the apex") {
  const PseudocolimitResult r = build_pseudocolimit(corpus::diamond_chain());
  const FinCat& dia = *corpus::diamond();
  const ObjId a = *dia.find_object("a");
  const ObjId b = *dia.find_object("b");
  const ObjId bot = *dia.find_object("bot");
  const FiniteDiagram d = discrete_pair(r.object_of(0, a), r.object_of(2, b));
  const ColimLimit lim = colim_finite_limit(r, d);
  CHECK(oracle::is_limit(*r.colim, d, lim.cone));
  // The vertex is isomorphic to the image of the meet at the top fiber.
  const ObjId image = r.object_of(2, bot);
  bool iso = false;
  for (MorId m : r.colim->hom(lim.cone.vertex, image)) iso = iso || oracle::is_iso(*r.colim, m);
  CHECK(iso);
}

TEST_CASE("colim_finite_limit within a point-indexed fiber") {
  const PseudocolimitResult r =
      build_pseudocolimit(corpus::point("PointDiamond", corpus::diamond()));
  const FinCat& dia = *corpus::diamond();
  const FiniteDiagram d = discrete_pair(r.object_of(0, *dia.find_object("a")),
                                        r.object_of(0, *dia.find_object("b")));
  const ColimLimit lim = colim_finite_limit(r, d);
  CHECK(lim.cone.vertex == r.object_of(0, *dia.find_object("bot")));
  CHECK(oracle::is_limit(*r.colim, d, lim.cone));
}

TEST_CASE("colimit limit assignment validates") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (!has_limits(*nd.diagram)) continue;
    BuildOptions opt;
    opt.with_limits = true;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram, opt);
    CAPTURE(nd.name);
    CHECK(r.colim->limits->complete);
    CHECK(validate_limits(*r.colim).empty());
  }
}

TEST_CASE("cone legs are exact") {
  for (const auto& nd : corpus::filtered_diagrams()) {
    if (!has_limits(*nd.diagram)) continue;
    const PseudocolimitResult r = build_pseudocolimit(nd.diagram);
    CAPTURE(nd.name);
    const auto legs = verify_cone_exactness(r);
    CHECK(legs.size() == nd.diagram->fibers.size());
    for (const LegExactness& e : legs) CHECK(e.check.exact);
  }
}

TEST_CASE("corrupting a chosen product breaks exactness") {
  FinCat broken = *corpus::diamond();
  const ObjId a = *broken.find_object("a");
  const ObjId bot = *broken.find_object("bot");
  const MorId to_a = broken.hom(bot, a).front();
  auto& prod = broken.limits->products.at({a, a});
  prod.vertex = bot;
  prod.first = to_a;
  prod.second = to_a;
  const CatRef c = std::make_shared<const FinCat>(broken);
  const PseudocolimitResult r =
      build_pseudocolimit(corpus::point("PointBroken", c));
  const auto legs = verify_cone_exactness(r);
  REQUIRE(legs.size() == 1);
  CHECK_FALSE(legs[0].check.exact);
}
