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

#include "fincolim/category.hpp"

#include <algorithm>
#include <set>

namespace fincolim {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SaturationExceeded: return "SaturationExceeded";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorKind::NotFiltered: return "NotFiltered";
    case ErrorKind::IllFormedCone: return "IllFormedCone";
    case ErrorKind::NonInvertibleComponent: return "NonInvertibleComponent";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::NotLiftable: return "NotLiftable";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::AmbiguousSolution: return "AmbiguousSolution";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

ParseError::ParseError(std::string file, int line, int column,
                       const std::string& msg)
    : Error(ErrorKind::Parse, file + ":" + std::to_string(line) + ":" +
                                  std::to_string(column) + ": " + msg),
      file_(std::move(file)),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// FinCat

std::optional<ObjId> FinCat::find_object(std::string_view n) const {
  auto it = object_index_.find(std::string(n));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(std::string_view n) const {
  auto it = morphism_index_.find(std::string(n));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

void FinCat::reset_table() {
  table.assign(morphisms.size() * morphisms.size(), kNone);
}

void FinCat::reindex() {
  const int n = object_count();
  homs_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  object_index_.clear();
  morphism_index_.clear();
  for (int a = 0; a < n; ++a) object_index_.emplace(objects[a], a);
  for (int f = 0; f < morphism_count(); ++f) {
    const auto& m = morphisms[f];
    morphism_index_.emplace(m.name, f);
    if (m.src < 0 || m.src >= n || m.tgt < 0 || m.tgt >= n) continue;
    homs_[static_cast<std::size_t>(m.src) * n + m.tgt].push_back(f);
  }
}

bool same_category(const FinCat& a, const FinCat& b) {
  if (&a == &b) return true;
  return a.objects == b.objects && a.morphisms == b.morphisms &&
         a.identities == b.identities && a.table == b.table;
}

// ---------------------------------------------------------------------------
// CatBuilder

CatBuilder::CatBuilder(std::string name) { cat_.name = std::move(name); }

ObjId CatBuilder::object(const std::string& name) {
  const ObjId a = cat_.object_count();
  cat_.objects.push_back(name);
  const MorId id = cat_.morphism_count();
  cat_.morphisms.push_back({"id_" + name, a, a});
  cat_.identities.push_back(id);
  return a;
}

void CatBuilder::identity_name(ObjId a, const std::string& name) {
  cat_.morphisms[cat_.identities[a]].name = name;
}

MorId CatBuilder::morphism(const std::string& name, ObjId src, ObjId tgt) {
  cat_.morphisms.push_back({name, src, tgt});
  return cat_.morphism_count() - 1;
}

MorId CatBuilder::morphism(const std::string& name, const std::string& src,
                           const std::string& tgt) {
  auto find = [&](const std::string& n) {
    auto it = std::find(cat_.objects.begin(), cat_.objects.end(), n);
    if (it == cat_.objects.end()) {
      throw Error(ErrorKind::InvalidInput, "unknown object " + n);
    }
    return static_cast<ObjId>(it - cat_.objects.begin());
  };
  return morphism(name, find(src), find(tgt));
}

void CatBuilder::compose(MorId g, MorId f, MorId h) {
  pending_.emplace_back(g, f, h);
}

void CatBuilder::compose(const std::string& g, const std::string& f,
                         const std::string& h) {
  auto find = [&](const std::string& n) {
    for (MorId m = 0; m < cat_.morphism_count(); ++m) {
      if (cat_.morphisms[m].name == n) return m;
    }
    throw Error(ErrorKind::InvalidInput, "unknown morphism " + n);
  };
  compose(find(g), find(f), find(h));
}

FinCat CatBuilder::finish_value() {
  FinCat c = cat_;
  c.reset_table();
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    c.compose_entry(c.id(c.tgt(f)), f) = f;
    c.compose_entry(f, c.id(c.src(f))) = f;
  }
  for (auto [g, f, h] : pending_) c.compose_entry(g, f) = h;
  c.reindex();
  return c;
}

CatRef CatBuilder::finish() {
  return std::make_shared<const FinCat>(finish_value());
}

CatRef make_poset(const std::string& name,
                  const std::vector<std::string>& objects,
                  const std::vector<std::pair<std::string, std::string>>& le) {
  const int n = static_cast<int>(objects.size());
  auto index = [&](const std::string& s) {
    auto it = std::find(objects.begin(), objects.end(), s);
    if (it == objects.end()) {
      throw Error(ErrorKind::InvalidInput, "unknown poset element " + s);
    }
    return static_cast<int>(it - objects.begin());
  };
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) rel[a][a] = true;
  for (const auto& [x, y] : le) rel[index(x)][index(y)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rel[i][j] && rel[j][i]) {
        throw Error(ErrorKind::InvalidInput,
                    "order relation is not antisymmetric at " + objects[i]);
      }

  CatBuilder b(name);
  for (const auto& o : objects) b.object(o);
  std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n, kNone));
  for (int i = 0; i < n; ++i) arrow[i][i] = b.raw().identities[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rel[i][j]) {
        arrow[i][j] = b.morphism(objects[i] + "->" + objects[j], i, j);
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k]) {
          b.compose(arrow[j][k], arrow[i][j], arrow[i][k]);
        }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_category(const FinCat& c) {
  ValidationReport out;
  const int n = c.object_count();
  const int m = c.morphism_count();
  auto mor_ok = [&](MorId f) { return f >= 0 && f < m; };

  for (MorId f = 0; f < m; ++f) {
    const auto& mm = c.morphisms[f];
    if (mm.src < 0 || mm.src >= n || mm.tgt < 0 || mm.tgt >= n) {
      out.push_back({"morphism-endpoints", mm.name});
    }
  }
  if (static_cast<int>(c.identities.size()) != n) {
    out.push_back({"identity-count", c.name});
    return out;
  }
  for (ObjId a = 0; a < n; ++a) {
    const MorId i = c.identities[a];
    if (!mor_ok(i) || c.src(i) != a || c.tgt(i) != a) {
      out.push_back({"identity-endo", c.objects[a]});
    }
  }
  if (c.table.size() != static_cast<std::size_t>(m) * m) {
    out.push_back({"table-size", c.name});
  }
  if (!out.empty()) return out;

  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      const MorId h = c.compose(g, f);
      const bool composable = c.tgt(f) == c.src(g);
      const std::string where =
          c.morphisms[g].name + " o " + c.morphisms[f].name;
      if (!composable) {
        if (h != kNone) out.push_back({"composite-of-non-composable", where});
        continue;
      }
      if (h == kNone) {
        out.push_back({"composite-missing", where});
      } else if (!mor_ok(h)) {
        out.push_back({"composite-unknown-morphism", where});
      } else if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        out.push_back({"composite-wrong-hom", where});
      }
    }
  }
  if (!out.empty()) return out;

  for (MorId f = 0; f < m; ++f) {
    if (c.compose(c.id(c.tgt(f)), f) != f) {
      out.push_back({"left-unit", c.morphisms[f].name});
    }
    if (c.compose(f, c.id(c.src(f))) != f) {
      out.push_back({"right-unit", c.morphisms[f].name});
    }
  }
  for (MorId f = 0; f < m; ++f) {
    for (MorId g = 0; g < m; ++g) {
      if (c.src(g) != c.tgt(f)) continue;
      const MorId gf = c.compose(g, f);
      for (MorId h = 0; h < m; ++h) {
        if (c.src(h) != c.tgt(g)) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          out.push_back({"associativity", c.morphisms[h].name + " o " +
                                              c.morphisms[g].name + " o " +
                                              c.morphisms[f].name});
        }
      }
    }
  }
  return out;
}

std::optional<MorId> inverse_of(const FinCat& c, MorId f) {
  for (MorId g : c.hom(c.tgt(f), c.src(f))) {
    if (c.compose(g, f) == c.id(c.src(f)) &&
        c.compose(f, g) == c.id(c.tgt(f))) {
      return g;
    }
  }
  return std::nullopt;
}

bool is_iso(const FinCat& c, MorId f) { return inverse_of(c, f).has_value(); }

// ---------------------------------------------------------------------------
// Functors

bool operator==(const Functor& a, const Functor& b) {
  return a.on_obj == b.on_obj && a.on_mor == b.on_mor &&
         same_category(a.source, b.source) && same_category(a.target, b.target);
}

Functor identity_functor(const CatRef& c) {
  Functor f{c, c, {}, {}};
  f.on_obj.resize(c->object_count());
  f.on_mor.resize(c->morphism_count());
  for (int i = 0; i < c->object_count(); ++i) f.on_obj[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i) f.on_mor[i] = i;
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) {
    throw Error(ErrorKind::BoundaryMismatch,
                "cannot compose functors through " + f.target->name + " and " +
                    g.source->name);
  }
  Functor h{f.source, g.target, {}, {}};
  h.on_obj.reserve(f.on_obj.size());
  for (ObjId a : f.on_obj) h.on_obj.push_back(g.on_obj[a]);
  h.on_mor.reserve(f.on_mor.size());
  for (MorId m : f.on_mor) h.on_mor.push_back(g.on_mor[m]);
  return h;
}

Functor constant_functor(const CatRef& source, const CatRef& target,
                         ObjId value) {
  Functor f{source, target, {}, {}};
  f.on_obj.assign(source->object_count(), value);
  f.on_mor.assign(source->morphism_count(), target->id(value));
  return f;
}

std::optional<std::string> check_functor(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  if (static_cast<int>(f.on_obj.size()) != c.object_count() ||
      static_cast<int>(f.on_mor.size()) != c.morphism_count()) {
    return "map sizes do not match source category";
  }
  for (ObjId a = 0; a < c.object_count(); ++a) {
    if (f.on_obj[a] < 0 || f.on_obj[a] >= d.object_count()) {
      return "object " + c.objects[a] + " mapped outside target";
    }
  }
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const MorId fm = f.on_mor[m];
    if (fm < 0 || fm >= d.morphism_count()) {
      return "morphism " + c.morphisms[m].name + " mapped outside target";
    }
    if (d.src(fm) != f.on_obj[c.src(m)] || d.tgt(fm) != f.on_obj[c.tgt(m)]) {
      return "morphism " + c.morphisms[m].name + " mapped to wrong hom-set";
    }
  }
  for (ObjId a = 0; a < c.object_count(); ++a) {
    if (f.on_mor[c.id(a)] != d.id(f.on_obj[a])) {
      return "identity of " + c.objects[a] + " not preserved";
    }
  }
  for (MorId g = 0; g < c.morphism_count(); ++g) {
    for (MorId h = 0; h < c.morphism_count(); ++h) {
      const MorId gh = c.compose(g, h);
      if (gh == kNone) continue;
      if (f.on_mor[gh] != d.compose(f.on_mor[g], f.on_mor[h])) {
        return "composite " + c.morphisms[g].name + " o " +
               c.morphisms[h].name + " not preserved";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Natural transformations

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && a.source == b.source &&
         a.target == b.target;
}

NatTrans identity_nat(const Functor& f) {
  NatTrans t{f, f, {}};
  t.components.reserve(f.on_obj.size());
  for (ObjId a : f.on_obj) t.components.push_back(f.target->id(a));
  return t;
}

NatTrans vcompose(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.target == beta.source)) {
    throw Error(ErrorKind::BoundaryMismatch,
                "vertical composite of non-adjacent transformations");
  }
  const FinCat& d = *alpha.source.target;
  NatTrans t{alpha.source, beta.target, {}};
  t.components.resize(alpha.components.size());
  for (std::size_t a = 0; a < alpha.components.size(); ++a) {
    t.components[a] = d.compose(beta.components[a], alpha.components[a]);
  }
  return t;
}

NatTrans whisker(const Functor& h, const NatTrans& alpha) {
  NatTrans t{compose(h, alpha.source), compose(h, alpha.target), {}};
  t.components.reserve(alpha.components.size());
  for (MorId m : alpha.components) t.components.push_back(h.on_mor[m]);
  return t;
}

NatTrans whisker(const NatTrans& alpha, const Functor& k) {
  NatTrans t{compose(alpha.source, k), compose(alpha.target, k), {}};
  t.components.reserve(k.on_obj.size());
  for (ObjId b : k.on_obj) t.components.push_back(alpha.components[b]);
  return t;
}

NatTrans hcompose(const NatTrans& beta, const NatTrans& alpha) {
  const Functor& g = alpha.target;
  const Functor& h = beta.source;
  NatTrans t{compose(beta.source, alpha.source),
             compose(beta.target, alpha.target),
             {}};
  const FinCat& e = *beta.source.target;
  t.components.resize(alpha.components.size());
  for (std::size_t c = 0; c < alpha.components.size(); ++c) {
    t.components[c] = e.compose(beta.components[g.on_obj[c]],
                                h.on_mor[alpha.components[c]]);
  }
  return t;
}

bool is_invertible(const NatTrans& alpha) {
  const FinCat& d = *alpha.source.target;
  return std::all_of(alpha.components.begin(), alpha.components.end(),
                     [&](MorId m) { return is_iso(d, m); });
}

NatTrans inverse(const NatTrans& alpha) {
  const FinCat& d = *alpha.source.target;
  NatTrans t{alpha.target, alpha.source, {}};
  t.components.reserve(alpha.components.size());
  for (std::size_t a = 0; a < alpha.components.size(); ++a) {
    auto inv = inverse_of(d, alpha.components[a]);
    if (!inv) {
      throw Error(ErrorKind::NonInvertibleComponent,
                  "component " + d.morphisms[alpha.components[a]].name +
                      " is not invertible");
    }
    t.components.push_back(*inv);
  }
  return t;
}

std::optional<std::string> check_natural(const NatTrans& alpha) {
  const Functor& f = alpha.source;
  const Functor& g = alpha.target;
  if (!same_category(f.source, g.source) ||
      !same_category(f.target, g.target)) {
    return "transformation between non-parallel functors";
  }
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  if (static_cast<int>(alpha.components.size()) != c.object_count()) {
    return "component count does not match source category";
  }
  for (ObjId a = 0; a < c.object_count(); ++a) {
    const MorId m = alpha.components[a];
    if (m < 0 || m >= d.morphism_count() || d.src(m) != f.on_obj[a] ||
        d.tgt(m) != g.on_obj[a]) {
      return "component at " + c.objects[a] + " has the wrong boundary";
    }
  }
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    const ObjId a = c.src(m);
    const ObjId b = c.tgt(m);
    if (d.compose(g.on_mor[m], alpha.components[a]) !=
        d.compose(alpha.components[b], f.on_mor[m])) {
      return "naturality square at " + c.morphisms[m].name + " fails";
    }
  }
  return std::nullopt;
}

}  // namespace fincolim
