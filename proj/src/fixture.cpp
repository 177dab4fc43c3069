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

#include "fincolim/fixture.hpp"

#include <fstream>
#include <sstream>

#include "fincolim/limits.hpp"

namespace fs = std::filesystem;

namespace fincolim {

const char* to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::Category: return "category";
    case FixtureKind::TwoCategory: return "twocat";
    case FixtureKind::Diagram: return "diagram";
    case FixtureKind::Site: return "site";
    case FixtureKind::SiteDiagram: return "sitediagram";
    case FixtureKind::Ambient: return "ambient";
    case FixtureKind::Presheaf: return "presheaf";
    case FixtureKind::Cone: return "cone";
  }
  return "?";
}

std::string Fixture::pick(FixtureKind kind, const std::string& name) const {
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (it->first == kind && (name.empty() || it->second == name)) {
      return it->second;
    }
  }
  throw Error(ErrorKind::InvalidInput,
              std::string("no ") + to_string(kind) +
                  (name.empty() ? "" : " named " + name) + " defined");
}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;

  const std::string& operator[](std::size_t i) const { return tokens[i].text; }
  std::size_t size() const { return tokens.size(); }
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      if (i >= raw.size() || raw[i] == '#') break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      line.tokens.push_back({raw.substr(start, i - start),
                             static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Parser {
 public:
  Parser(Fixture& fx, std::string label, std::vector<Line> lines)
      : fx_(fx), label_(std::move(label)), lines_(std::move(lines)) {}

  [[noreturn]] void fail(const Line& l, std::size_t tok,
                         const std::string& msg) const {
    const int col = tok < l.size() ? l.tokens[tok].column : 1;
    throw ParseError(label_, l.number, col, msg);
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& next() { return lines_[pos_++]; }
  const Line& peek() const { return lines_[pos_]; }

  const Line& next_in_block(const Line& header) {
    if (done()) fail(header, 0, "missing 'end' for '" + header[0] + "'");
    return next();
  }

  void arity(const Line& l, std::size_t n) const {
    if (l.size() != n) {
      fail(l, std::min(l.size(), n),
           "'" + l[0] + "' expects " + std::to_string(n - 1) + " arguments");
    }
  }
  void punct(const Line& l, std::size_t i, const char* p) const {
    if (i >= l.size() || l[i] != p) {
      fail(l, i, std::string("expected '") + p + "'");
    }
  }

  ObjId object(const FinCat& c, const Line& l, std::size_t i) const {
    auto o = c.find_object(l[i]);
    if (!o) fail(l, i, "unknown object '" + l[i] + "' in " + c.name);
    return *o;
  }
  MorId morphism(const FinCat& c, const Line& l, std::size_t i) const {
    auto m = c.find_morphism(l[i]);
    if (!m) fail(l, i, "unknown morphism '" + l[i] + "' in " + c.name);
    return *m;
  }
  template <typename Map>
  const typename Map::mapped_type& ref(const Map& m, const Line& l,
                                       std::size_t i, const char* what) const {
    auto it = m.find(l[i]);
    if (it == m.end()) fail(l, i, std::string("unknown ") + what + " '" + l[i] + "'");
    return it->second;
  }

  void define(FixtureKind kind, const Line& header) {
    fx_.order.emplace_back(kind, header[1]);
  }
  template <typename Map>
  void fresh(const Map& m, const Line& header) const {
    if (m.count(header[1])) {
      fail(header, 1, std::string("duplicate ") + header[0] + " '" +
                          header[1] + "'");
    }
  }

  void category(const Line& h);
  void poset(const Line& h);
  void two_cat(const Line& h);
  void diagram(const Line& h);
  void site(const Line& h);
  void site_diagram(const Line& h);
  void ambient(const Line& h);
  void presheaf(const Line& h);
  void cone(const Line& h);

  // Reads `obj`/`mor` lines up to `end` into a functor between given
  // categories; missing morphism images are inferred when forced.
  Functor functor_block(const Line& h, const CatRef& src, const CatRef& tgt);
  // Reads `at` lines up to `end`.
  std::vector<MorId> components_block(const Line& h, const FinCat& src,
                                      const FinCat& tgt);

 private:
  Fixture& fx_;
  std::string label_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void Parser::category(const Line& h) {
  fresh(fx_.categories, h);
  struct Mor {
    std::string name, src, tgt;
    bool identity;
    const Line* line;
  };
  std::vector<std::pair<std::string, const Line*>> objects;
  std::vector<Mor> mors;
  std::vector<const Line*> composes, limit_lines;
  const Line* limits_flag = nullptr;
  for (;;) {
    const Line& l = next_in_block(h);
    const std::string& k = l[0];
    if (k == "end") break;
    if (k == "object") {
      arity(l, 2);
      objects.emplace_back(l[1], &l);
    } else if (k == "morphism") {
      if (l.size() != 6 && !(l.size() == 7 && l[6] == "identity")) {
        fail(l, 0, "expected 'morphism <name> : <src> -> <tgt> [identity]'");
      }
      punct(l, 2, ":");
      punct(l, 4, "->");
      mors.push_back({l[1], l[3], l[5], l.size() == 7, &l});
    } else if (k == "compose") {
      arity(l, 5);
      punct(l, 3, "=");
      composes.push_back(&l);
    } else if (k == "limits") {
      arity(l, 2);
      if (l[1] != "complete" && l[1] != "partial") {
        fail(l, 1, "expected 'complete' or 'partial'");
      }
      limits_flag = &l;
    } else if (k == "terminal" || k == "product" || k == "equalizer") {
      limit_lines.push_back(&l);
    } else {
      fail(l, 0, "unknown category entry '" + k + "'");
    }
  }

  FinCat c;
  c.name = h[1];
  for (auto& [name, line] : objects) {
    if (std::find(c.objects.begin(), c.objects.end(), name) != c.objects.end()) {
      fail(*line, 1, "duplicate object '" + name + "'");
    }
    c.objects.push_back(name);
  }
  c.identities.assign(c.objects.size(), kNone);
  c.reindex();
  std::vector<bool> explicit_id(c.objects.size(), false);
  for (const Mor& m : mors) {
    if (!m.identity) continue;
    const ObjId o = object(c, *m.line, 3);
    if (m.src != m.tgt) fail(*m.line, 5, "identity must be an endomorphism");
    if (explicit_id[o]) fail(*m.line, 1, "second identity on " + m.src);
    explicit_id[o] = true;
  }
  for (ObjId o = 0; o < c.object_count(); ++o) {
    if (explicit_id[o]) continue;
    c.identities[o] = c.morphism_count();
    c.morphisms.push_back({"id_" + c.objects[o], o, o});
  }
  for (const Mor& m : mors) {
    const ObjId s = object(c, *m.line, 3);
    const ObjId t = object(c, *m.line, 5);
    for (const Morphism& e : c.morphisms) {
      if (e.name == m.name) fail(*m.line, 1, "duplicate morphism '" + m.name + "'");
    }
    if (m.identity) c.identities[s] = c.morphism_count();
    c.morphisms.push_back({m.name, s, t});
  }
  c.reset_table();
  c.reindex();
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    c.compose_entry(c.id(c.tgt(f)), f) = f;
    c.compose_entry(f, c.id(c.src(f))) = f;
  }
  for (const Line* l : composes) {
    const MorId g = morphism(c, *l, 1);
    const MorId f = morphism(c, *l, 2);
    const MorId r = morphism(c, *l, 4);
    MorId& slot = c.compose_entry(g, f);
    if ((c.is_identity(g) || c.is_identity(f)) && slot != r) {
      fail(*l, 4, "composite with an identity must be the other morphism");
    }
    slot = r;
  }
  if (limits_flag || !limit_lines.empty()) {
    LimitAssignment lim;
    lim.complete = limits_flag && (*limits_flag)[1] == "complete";
    for (const Line* lp : limit_lines) {
      const Line& l = *lp;
      if (l[0] == "terminal") {
        arity(l, 2);
        lim.terminal = object(c, l, 1);
      } else if (l[0] == "product") {
        arity(l, 7);
        punct(l, 3, "=");
        lim.products[{object(c, l, 1), object(c, l, 2)}] = {
            object(c, l, 4), morphism(c, l, 5), morphism(c, l, 6)};
      } else {
        arity(l, 6);
        punct(l, 3, "=");
        lim.equalizers[{morphism(c, l, 1), morphism(c, l, 2)}] = {
            object(c, l, 4), morphism(c, l, 5)};
      }
    }
    c.limits = std::move(lim);
  }
  fx_.categories[h[1]] = std::make_shared<const FinCat>(std::move(c));
  define(FixtureKind::Category, h);
}

void Parser::poset(const Line& h) {
  fresh(fx_.categories, h);
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> le;
  bool limits = false;
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    if (l[0] == "object") {
      arity(l, 2);
      objects.push_back(l[1]);
    } else if (l[0] == "le") {
      arity(l, 3);
      for (std::size_t i : {1, 2}) {
        if (std::find(objects.begin(), objects.end(), l[i]) == objects.end()) {
          fail(l, i, "unknown object '" + l[i] + "'");
        }
      }
      le.emplace_back(l[1], l[2]);
    } else if (l[0] == "limits") {
      arity(l, 2);
      if (l[1] != "auto") fail(l, 1, "posets only support 'limits auto'");
      limits = true;
    } else {
      fail(l, 0, "unknown poset entry '" + l[0] + "'");
    }
  }
  CatRef c;
  try {
    c = make_poset(h[1], objects, le);
  } catch (const Error& e) {
    fail(h, 1, e.what());
  }
  if (limits) {
    auto lim = poset_limits(*c);
    if (!lim) fail(h, 1, "poset " + h[1] + " lacks finite limits");
    c = with_limits(c, *lim);
  }
  fx_.categories[h[1]] = c;
  define(FixtureKind::Category, h);
}

void Parser::two_cat(const Line& h) {
  fresh(fx_.two_cats, h);
  CatRef one;
  std::vector<const Line*> cells, comps;
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    if (l[0] == "one") {
      arity(l, 2);
      one = ref(fx_.categories, l, 1, "category");
    } else if (l[0] == "cell") {
      arity(l, 6);
      punct(l, 2, ":");
      punct(l, 4, "=>");
      cells.push_back(&l);
    } else if (l[0] == "vcomp" || l[0] == "hcomp") {
      arity(l, 5);
      punct(l, 3, "=");
      comps.push_back(&l);
    } else {
      fail(l, 0, "unknown twocat entry '" + l[0] + "'");
    }
  }
  if (!one) fail(h, 1, "twocat needs a 'one' line");
  TwoCatBuilder b(h[1], one);
  std::map<std::string, Cell2Id> names;
  for (CellId u = 0; u < one->morphism_count(); ++u) {
    names["id2_" + one->morphisms[u].name] = b.id2(u);
  }
  for (const Line* l : cells) {
    if (names.count((*l)[1])) fail(*l, 1, "duplicate 2-cell '" + (*l)[1] + "'");
    names[(*l)[1]] = b.cell((*l)[1], morphism(*one, *l, 3),
                            morphism(*one, *l, 5));
  }
  for (const Line* l : comps) {
    const Cell2Id x = ref(names, *l, 1, "2-cell");
    const Cell2Id y = ref(names, *l, 2, "2-cell");
    const Cell2Id r = ref(names, *l, 4, "2-cell");
    ((*l)[0] == "vcomp") ? b.vcomp(x, y, r) : b.hcomp(x, y, r);
  }
  fx_.two_cats[h[1]] = b.finish();
  define(FixtureKind::TwoCategory, h);
}

Functor Parser::functor_block(const Line& h, const CatRef& src,
                              const CatRef& tgt) {
  Functor f{src, tgt, std::vector<ObjId>(src->object_count(), kNone),
            std::vector<MorId>(src->morphism_count(), kNone)};
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    arity(l, 3);
    if (l[0] == "obj") {
      f.on_obj[object(*src, l, 1)] = object(*tgt, l, 2);
    } else if (l[0] == "mor") {
      f.on_mor[morphism(*src, l, 1)] = morphism(*tgt, l, 2);
    } else {
      fail(l, 0, "expected 'obj' or 'mor'");
    }
  }
  for (ObjId o = 0; o < src->object_count(); ++o) {
    if (f.on_obj[o] == kNone) {
      fail(h, 1, "no image for object '" + src->objects[o] + "'");
    }
  }
  for (MorId m = 0; m < src->morphism_count(); ++m) {
    if (f.on_mor[m] != kNone) continue;
    const ObjId s = f.on_obj[src->src(m)];
    const ObjId t = f.on_obj[src->tgt(m)];
    if (src->is_identity(m)) {
      f.on_mor[m] = tgt->id(s);
    } else if (tgt->hom(s, t).size() == 1) {
      f.on_mor[m] = tgt->hom(s, t).front();
    } else {
      fail(h, 1, "no image for morphism '" + src->morphisms[m].name + "'");
    }
  }
  return f;
}

std::vector<MorId> Parser::components_block(const Line& h, const FinCat& src,
                                            const FinCat& tgt) {
  std::vector<MorId> out(src.object_count(), kNone);
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    arity(l, 3);
    if (l[0] != "at") fail(l, 0, "expected 'at'");
    out[object(src, l, 1)] = morphism(tgt, l, 2);
  }
  for (ObjId o = 0; o < src.object_count(); ++o) {
    if (out[o] == kNone) {
      fail(h, 1, "no component at '" + src.objects[o] + "'");
    }
  }
  return out;
}

void Parser::diagram(const Line& h) {
  fresh(fx_.diagrams, h);
  TwoDiagram d;
  d.name = h[1];
  TwoCatRef declared;
  std::vector<bool> known, known2;
  for (;;) {
    const Line& l = next_in_block(h);
    const std::string& k = l[0];
    if (k == "end") break;
    if (k == "index") {
      arity(l, 2);
      if (declared) fail(l, 0, "index given twice");
      declared = ref(fx_.two_cats, l, 1, "twocat");
      d.index = declared;
    } else if (k == "opposite") {
      arity(l, 1);
      if (!declared) fail(l, 0, "'opposite' must follow 'index'");
      if (!d.on_cell.empty()) fail(l, 0, "'opposite' must precede cell data");
      d.index = opposite_two_cat(*declared);
      d.orientation = Orientation::Opposite;
    } else if (k == "fiber") {
      arity(l, 3);
      if (!d.index) fail(l, 0, "'fiber' must follow 'index'");
      d.fibers.resize(d.index->object_count());
      d.fibers[object(*d.index->one, l, 1)] = ref(fx_.categories, l, 2, "category");
    } else if (k == "on" || k == "on2") {
      arity(l, 2);
      if (!d.index) fail(l, 0, "cell data must follow 'index'");
      const TwoCat& a = *d.index;
      d.fibers.resize(a.object_count());
      for (ObjId x = 0; x < a.object_count(); ++x) {
        if (!d.fibers[x]) fail(l, 0, "fiber at " + a.one->objects[x] + " not given");
      }
      d.on_cell.resize(a.cell_count());
      d.on_cell2.resize(a.cell2_count());
      known.resize(a.cell_count(), false);
      known2.resize(a.cell2_count(), false);
      if (k == "on") {
        const CellId u = morphism(*a.one, l, 1);
        d.on_cell[u] = functor_block(l, d.fibers[a.one->src(u)],
                                     d.fibers[a.one->tgt(u)]);
        known[u] = true;
      } else {
        auto c = a.find_cell2(l[1]);
        if (!c) fail(l, 1, "unknown 2-cell '" + l[1] + "'");
        const TwoCell& cell = a.cells[*c];
        if (!known[cell.src] || !known[cell.tgt]) {
          fail(l, 1, "2-cell data must follow the data of its boundary 1-cells");
        }
        d.on_cell2[*c] = {d.on_cell[cell.src], d.on_cell[cell.tgt],
                          components_block(l, *d.fibers[a.one->src(cell.src)],
                                           *d.fibers[a.one->tgt(cell.src)])};
        known2[*c] = true;
      }
    } else {
      fail(l, 0, "unknown diagram entry '" + k + "'");
    }
  }
  if (!d.index) fail(h, 1, "diagram needs an 'index' line");
  d.fibers.resize(d.index->object_count());
  for (ObjId x = 0; x < d.index->object_count(); ++x) {
    if (!d.fibers[x]) fail(h, 1, "fiber at " + d.index->one->objects[x] + " not given");
  }
  try {
    complete_diagram(d, known, known2);
  } catch (const Error& e) {
    fail(h, 1, e.what());
  }
  fx_.diagrams[h[1]] = std::make_shared<const TwoDiagram>(std::move(d));
  define(FixtureKind::Diagram, h);
}

void Parser::site(const Line& h) {
  fresh(fx_.sites, h);
  auto s = std::make_shared<Site>();
  s->name = h[1];
  std::set<ObjId> gens;
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    if (l[0] == "category") {
      arity(l, 2);
      s->category = ref(fx_.categories, l, 1, "category");
      continue;
    }
    if (!s->category) fail(l, 0, "'category' must come first");
    const FinCat& c = *s->category;
    if (l[0] == "cover") {
      if (l.size() < 3) fail(l, 0, "expected 'cover <object> : <morphism>...'");
      punct(l, 2, ":");
      std::vector<MorId> legs;
      for (std::size_t i = 3; i < l.size(); ++i) legs.push_back(morphism(c, l, i));
      s->basis.push_back(make_cover(object(c, l, 1), std::move(legs)));
    } else if (l[0] == "generators") {
      for (std::size_t i = 1; i < l.size(); ++i) gens.insert(object(c, l, i));
    } else {
      fail(l, 0, "unknown site entry '" + l[0] + "'");
    }
  }
  if (!s->category) fail(h, 1, "site needs a 'category' line");
  s->generators.assign(gens.begin(), gens.end());
  fx_.sites[h[1]] = s;
  define(FixtureKind::Site, h);
}

void Parser::site_diagram(const Line& h) {
  fresh(fx_.site_diagrams, h);
  SiteDiagram sd;
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    if (l[0] == "diagram") {
      arity(l, 2);
      sd.diagram = ref(fx_.diagrams, l, 1, "diagram");
      sd.sites.assign(sd.diagram->fibers.size(), nullptr);
    } else if (l[0] == "site") {
      arity(l, 3);
      if (!sd.diagram) fail(l, 0, "'site' must follow 'diagram'");
      sd.sites[object(*sd.diagram->index->one, l, 1)] =
          ref(fx_.sites, l, 2, "site");
    } else {
      fail(l, 0, "unknown sitediagram entry '" + l[0] + "'");
    }
  }
  if (!sd.diagram) fail(h, 1, "sitediagram needs a 'diagram' line");
  for (std::size_t x = 0; x < sd.sites.size(); ++x) {
    if (!sd.sites[x]) {
      fail(h, 1, "no site at " + sd.diagram->index->one->objects[x]);
    }
  }
  fx_.site_diagrams[h[1]] = std::move(sd);
  define(FixtureKind::SiteDiagram, h);
}

void Parser::ambient(const Line& h) {
  fresh(fx_.ambients, h);
  AmbientDiagram a;
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    if (l[0] == "diagram") {
      arity(l, 2);
      a.diagram = ref(fx_.diagrams, l, 1, "diagram");
      a.generators.assign(a.diagram->fibers.size(), {});
    } else if (l[0] == "generators") {
      if (!a.diagram) fail(l, 0, "'generators' must follow 'diagram'");
      if (l.size() < 3) fail(l, 0, "expected 'generators <index object> : <object>...'");
      punct(l, 2, ":");
      const ObjId x = object(*a.diagram->index->one, l, 1);
      for (std::size_t i = 3; i < l.size(); ++i) {
        a.generators[x].push_back(object(*a.diagram->fibers[x], l, i));
      }
    } else {
      fail(l, 0, "unknown ambient entry '" + l[0] + "'");
    }
  }
  if (!a.diagram) fail(h, 1, "ambient needs a 'diagram' line");
  fx_.ambients[h[1]] = std::move(a);
  define(FixtureKind::Ambient, h);
}

void Parser::presheaf(const Line& h) {
  fresh(fx_.presheaves, h);
  Presheaf p;
  std::vector<const Line*> maps;
  for (;;) {
    const Line& l = next_in_block(h);
    if (l[0] == "end") break;
    if (l[0] == "category") {
      arity(l, 2);
      p.category = ref(fx_.categories, l, 1, "category");
      p.sizes.assign(p.category->object_count(), -1);
      continue;
    }
    if (!p.category) fail(l, 0, "'category' must come first");
    if (l[0] == "set") {
      arity(l, 3);
      int n = -1;
      try {
        n = std::stoi(l[2]);
      } catch (const std::exception&) {
      }
      if (n < 0) fail(l, 2, "expected a size");
      p.sizes[object(*p.category, l, 1)] = n;
    } else if (l[0] == "map") {
      if (l.size() < 2) fail(l, 0, "expected 'map <morphism> <value>...'");
      maps.push_back(&l);
    } else {
      fail(l, 0, "unknown presheaf entry '" + l[0] + "'");
    }
  }
  if (!p.category) fail(h, 1, "presheaf needs a 'category' line");
  const FinCat& c = *p.category;
  for (ObjId o = 0; o < c.object_count(); ++o) {
    if (p.sizes[o] < 0) fail(h, 1, "no set given at '" + c.objects[o] + "'");
  }
  p.maps.assign(c.morphism_count(), {});
  std::vector<bool> given(c.morphism_count(), false);
  for (const Line* lp : maps) {
    const Line& l = *lp;
    const MorId f = morphism(c, l, 1);
    for (std::size_t i = 2; i < l.size(); ++i) {
      int v = -1;
      try {
        v = std::stoi(l[i]);
      } catch (const std::exception&) {
      }
      if (v < 0) fail(l, i, "expected an element index");
      p.maps[f].push_back(v);
    }
    given[f] = true;
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (given[f]) continue;
    const int from = p.sizes[c.tgt(f)];
    const int to = p.sizes[c.src(f)];
    if (c.is_identity(f)) {
      for (int x = 0; x < from; ++x) p.maps[f].push_back(x);
    } else if (from == 0) {
    } else if (to == 1) {
      p.maps[f].assign(from, 0);
    } else {
      fail(h, 1, "no map given for '" + c.morphisms[f].name + "'");
    }
  }
  fx_.presheaves[h[1]] = std::move(p);
  define(FixtureKind::Presheaf, h);
}

void Parser::cone(const Line& h) {
  fresh(fx_.cones, h);
  Pseudocone c;
  std::vector<bool> have_leg, have_cell;
  for (;;) {
    const Line& l = next_in_block(h);
    const std::string& k = l[0];
    if (k == "end") break;
    if (k == "diagram") {
      arity(l, 2);
      c.diagram = ref(fx_.diagrams, l, 1, "diagram");
      c.legs.resize(c.diagram->fibers.size());
      c.coherence.resize(c.diagram->on_cell.size());
      have_leg.assign(c.legs.size(), false);
      have_cell.assign(c.coherence.size(), false);
    } else if (k == "vertex") {
      arity(l, 2);
      c.vertex = ref(fx_.categories, l, 1, "category");
    } else if (k == "leg") {
      arity(l, 2);
      if (!c.diagram || !c.vertex) fail(l, 0, "'leg' must follow 'diagram' and 'vertex'");
      const ObjId x = object(*c.diagram->index->one, l, 1);
      c.legs[x] = functor_block(l, c.diagram->fibers[x], c.vertex);
      have_leg[x] = true;
    } else if (k == "coherence") {
      arity(l, 2);
      if (!c.diagram) fail(l, 0, "'coherence' must follow 'diagram'");
      const FinCat& one = *c.diagram->index->one;
      const CellId u = morphism(one, l, 1);
      if (!have_leg[one.src(u)] || !have_leg[one.tgt(u)]) {
        fail(l, 1, "coherence must follow the legs it relates");
      }
      NatTrans t{c.legs[one.src(u)],
                 compose(c.legs[one.tgt(u)], c.diagram->on_cell[u]), {}};
      t.components = components_block(l, *c.diagram->fibers[one.src(u)], *c.vertex);
      c.coherence[u] = std::move(t);
      have_cell[u] = true;
    } else {
      fail(l, 0, "unknown cone entry '" + k + "'");
    }
  }
  if (!c.diagram || !c.vertex) fail(h, 1, "cone needs 'diagram' and 'vertex'");
  const FinCat& one = *c.diagram->index->one;
  for (ObjId x = 0; x < one.object_count(); ++x) {
    if (!have_leg[x]) fail(h, 1, "no leg at " + one.objects[x]);
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    if (have_cell[u]) continue;
    if (!one.is_identity(u)) {
      fail(h, 1, "no coherence for '" + one.morphisms[u].name + "'");
    }
    c.coherence[u] = identity_nat(c.legs[one.src(u)]);
  }
  fx_.cones[h[1]] = std::move(c);
  define(FixtureKind::Cone, h);
}

}  // namespace

FixtureLoader::FixtureLoader(std::vector<fs::path> search)
    : search_(std::move(search)) {}

fs::path FixtureLoader::resolve(const std::string& path,
                                const fs::path& from) const {
  const fs::path p(path);
  if (p.is_absolute()) return p;
  if (!from.empty() && fs::exists(from / p)) return from / p;
  if (fs::exists(p)) return p;
  for (const fs::path& dir : search_) {
    if (fs::exists(dir / p)) return dir / p;
  }
  return p;
}

void FixtureLoader::load_file(const std::string& path) {
  const fs::path p = resolve(path, {});
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::InvalidInput, "cannot open fixture " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::error_code ec;
  const std::string key = fs::weakly_canonical(p, ec).string();
  if (!seen_.insert(key).second) return;
  fixture_.files.push_back({p.string(), buf.str()});
  parse(buf.str(), p.string(), p.parent_path());
}

void FixtureLoader::load_string(const std::string& text,
                                const std::string& label) {
  fixture_.files.push_back({label, text});
  parse(text, label, {});
}

void FixtureLoader::parse(const std::string& text, const std::string& label,
                          const fs::path& dir) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 2 ||
      lines[0][0] + " " + lines[0][1] != kFixtureHeader) {
    throw ParseError(label, lines.empty() ? 1 : lines[0].number, 1,
                     std::string("expected header '") + kFixtureHeader + "'");
  }
  lines.erase(lines.begin());
  // `use` lines are handled before the parser sees the blocks that follow.
  Parser parser(fixture_, label, {});
  std::vector<Line> pending;
  auto flush = [&] {
    Parser p(fixture_, label, std::move(pending));
    pending.clear();
    while (!p.done()) {
      const Line& h = p.next();
      if (h.size() != 2) p.fail(h, 0, "expected '<kind> <name>'");
      const std::string& k = h[0];
      if (k == "category") p.category(h);
      else if (k == "poset") p.poset(h);
      else if (k == "twocat") p.two_cat(h);
      else if (k == "diagram") p.diagram(h);
      else if (k == "site") p.site(h);
      else if (k == "sitediagram") p.site_diagram(h);
      else if (k == "ambient") p.ambient(h);
      else if (k == "presheaf") p.presheaf(h);
      else if (k == "cone") p.cone(h);
      else p.fail(h, 0, "unknown block kind '" + k + "'");
    }
  };
  int depth = 0;
  for (Line& l : lines) {
    if (depth == 0 && l[0] == "use") {
      if (l.size() != 2) parser.fail(l, 0, "expected 'use <path>'");
      flush();
      const fs::path target = resolve(l[1], dir);
      if (!fs::exists(target)) {
        parser.fail(l, 1, "cannot find '" + l[1] + "'");
      }
      load_file(target.string());
      continue;
    }
    if (l[0] == "end") {
      --depth;
    } else if (l.size() == 2 &&
               (depth == 0 || l[0] == "on" || l[0] == "on2" ||
                l[0] == "leg" || l[0] == "coherence")) {
      ++depth;
    }
    pending.push_back(std::move(l));
  }
  flush();
}

Fixture load_fixture(const std::string& path, std::vector<fs::path> search) {
  FixtureLoader loader(std::move(search));
  loader.load_file(path);
  return loader.take();
}

Fixture parse_fixture(const std::string& text, const std::string& label) {
  FixtureLoader loader;
  loader.load_string(text, label);
  return loader.take();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const std::string& word(const std::string& s) {
  if (s.empty() || s[0] == '#' ||
      std::any_of(s.begin(), s.end(),
                  [](unsigned char ch) { return std::isspace(ch); })) {
    throw Error(ErrorKind::InvalidInput,
                "name '" + s + "' cannot be written to a fixture");
  }
  return s;
}

void print_functor(std::ostringstream& out, const Functor& f,
                   const char* indent) {
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  for (ObjId o = 0; o < s.object_count(); ++o) {
    out << indent << "obj " << word(s.objects[o]) << ' '
        << word(t.objects[f.on_obj[o]]) << '\n';
  }
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    out << indent << "mor " << word(s.morphisms[m].name) << ' '
        << word(t.morphisms[f.on_mor[m]].name) << '\n';
  }
}

}  // namespace

std::string print_category(const FinCat& c) {
  std::ostringstream out;
  out << "category " << word(c.name) << '\n';
  for (const std::string& o : c.objects) out << "  object " << word(o) << '\n';
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const Morphism& m = c.morphisms[f];
    out << "  morphism " << word(m.name) << " : " << c.objects[m.src] << " -> "
        << c.objects[m.tgt] << (c.is_identity(f) ? " identity" : "") << '\n';
  }
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    for (MorId f = 0; f < c.morphism_count(); ++f) {
      const MorId h = c.compose(g, f);
      if (h == kNone || c.is_identity(g) || c.is_identity(f)) continue;
      out << "  compose " << c.morphisms[g].name << ' ' << c.morphisms[f].name
          << " = " << c.morphisms[h].name << '\n';
    }
  }
  if (c.limits) {
    const LimitAssignment& lim = *c.limits;
    out << "  limits " << (lim.complete ? "complete" : "partial") << '\n';
    if (lim.terminal) out << "  terminal " << c.objects[*lim.terminal] << '\n';
    for (const auto& [k, p] : lim.products) {
      out << "  product " << c.objects[k.first] << ' ' << c.objects[k.second]
          << " = " << c.objects[p.vertex] << ' ' << c.morphisms[p.first].name
          << ' ' << c.morphisms[p.second].name << '\n';
    }
    for (const auto& [k, e] : lim.equalizers) {
      out << "  equalizer " << c.morphisms[k.first].name << ' '
          << c.morphisms[k.second].name << " = " << c.objects[e.vertex] << ' '
          << c.morphisms[e.inclusion].name << '\n';
    }
  }
  out << "end\n";
  return out.str();
}

std::string print_two_cat(const TwoCat& a) {
  std::ostringstream out;
  out << "twocat " << word(a.name) << '\n';
  out << "  one " << word(a.one->name) << '\n';
  TwoCatBuilder b(a.name, a.one);
  for (Cell2Id k = 0; k < a.cell2_count(); ++k) {
    const TwoCell& c = a.cells[k];
    if (a.id2[c.src] == k) continue;
    out << "  cell " << word(c.name) << " : " << a.one->morphisms[c.src].name
        << " => " << a.one->morphisms[c.tgt].name << '\n';
    b.cell(c.name, c.src, c.tgt);
  }
  const TwoCat auto_filled = b.finish_value();
  for (Cell2Id y = 0; y < a.cell2_count(); ++y) {
    for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
      const Cell2Id v = a.vcomp(y, x);
      if (v != kNone && auto_filled.vcomp(y, x) != v) {
        out << "  vcomp " << a.cells[y].name << ' ' << a.cells[x].name << " = "
            << a.cells[v].name << '\n';
      }
    }
  }
  for (Cell2Id y = 0; y < a.cell2_count(); ++y) {
    for (Cell2Id x = 0; x < a.cell2_count(); ++x) {
      const Cell2Id h = a.hcomp(y, x);
      if (h != kNone && auto_filled.hcomp(y, x) != h) {
        out << "  hcomp " << a.cells[y].name << ' ' << a.cells[x].name << " = "
            << a.cells[h].name << '\n';
      }
    }
  }
  out << "end\n";
  return out.str();
}

std::string print_diagram(const TwoDiagram& d) {
  std::ostringstream out;
  const bool op = d.orientation == Orientation::Opposite;
  const TwoCatRef declared = op ? opposite_two_cat(*d.index) : d.index;
  const TwoCat& a = *d.index;
  const FinCat& one = *a.one;
  out << "diagram " << word(d.name) << '\n';
  out << "  index " << word(declared->name) << '\n';
  if (op) out << "  opposite\n";
  for (ObjId x = 0; x < one.object_count(); ++x) {
    out << "  fiber " << one.objects[x] << ' ' << word(d.fibers[x]->name) << '\n';
  }
  for (CellId u = 0; u < one.morphism_count(); ++u) {
    out << "  on " << one.morphisms[u].name << '\n';
    print_functor(out, d.on_cell[u], "    ");
    out << "  end\n";
  }
  for (Cell2Id k = 0; k < a.cell2_count(); ++k) {
    const FinCat& src = *d.fibers[one.src(a.cells[k].src)];
    const FinCat& tgt = *d.fibers[one.tgt(a.cells[k].src)];
    out << "  on2 " << a.cells[k].name << '\n';
    for (ObjId o = 0; o < src.object_count(); ++o) {
      out << "    at " << src.objects[o] << ' '
          << tgt.morphisms[d.on_cell2[k][o]].name << '\n';
    }
    out << "  end\n";
  }
  out << "end\n";
  return out.str();
}

std::string print_site(const Site& s) {
  std::ostringstream out;
  const FinCat& c = *s.category;
  out << "site " << word(s.name) << '\n';
  out << "  category " << word(c.name) << '\n';
  for (const Cover& b : s.basis) {
    out << "  cover " << c.objects[b.target] << " :";
    for (MorId leg : b.legs) out << ' ' << c.morphisms[leg].name;
    out << '\n';
  }
  if (!s.generators.empty()) {
    out << "  generators";
    for (ObjId g : s.generators) out << ' ' << c.objects[g];
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::string print_presheaf(const Presheaf& p, const std::string& name) {
  std::ostringstream out;
  const FinCat& c = *p.category;
  out << "presheaf " << word(name) << '\n';
  out << "  category " << word(c.name) << '\n';
  for (ObjId o = 0; o < c.object_count(); ++o) {
    out << "  set " << c.objects[o] << ' ' << p.sizes[o] << '\n';
  }
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    out << "  map " << c.morphisms[f].name;
    for (int v : p.maps[f]) out << ' ' << v;
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

std::string emit_category(const FinCat& c) {
  return std::string(kFixtureHeader) + "\n\n" + print_category(c);
}

std::string emit_site(const Site& s) {
  return std::string(kFixtureHeader) + "\n\n" + print_category(*s.category) +
         "\n" + print_site(s);
}

std::string emit_diagram(const TwoDiagram& d) {
  std::string out = std::string(kFixtureHeader) + "\n";
  std::set<std::string> printed;
  auto cat = [&](const FinCat& c) {
    if (printed.insert(c.name).second) out += "\n" + print_category(c);
  };
  const TwoCatRef declared = d.orientation == Orientation::Opposite
                                 ? opposite_two_cat(*d.index)
                                 : d.index;
  cat(*declared->one);
  out += "\n" + print_two_cat(*declared);
  for (const CatRef& f : d.fibers) cat(*f);
  out += "\n" + print_diagram(d);
  return out;
}

}  // namespace fincolim
