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

#include "fincolim/presentation.hpp"

#include <algorithm>
#include <map>

namespace fincolim {

namespace {

using Word = std::vector<int>;

struct Rule {
  Word from;
  Word to;
};

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ObjId path_end(const Presentation& p, const Path& path) {
  ObjId at = path.start;
  for (int g : path.generators) {
    if (g < 0 || g >= static_cast<int>(p.generators.size()) ||
        p.generators[g].src != at) {
      throw Error(ErrorKind::InvalidPresentation,
                  "ill-typed path in presentation " + p.name);
    }
    at = p.generators[g].tgt;
  }
  return at;
}

// Rewrites to normal form. Every rule strictly decreases shortlex order, so
// this terminates.
Word normalize(Word w, const std::vector<Rule>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rules) {
      auto it = std::search(w.begin(), w.end(), r.from.begin(), r.from.end());
      if (it == w.end() || r.from.empty()) continue;
      Word next(w.begin(), it);
      next.insert(next.end(), r.to.begin(), r.to.end());
      next.insert(next.end(), it + static_cast<long>(r.from.size()), w.end());
      w = std::move(next);
      changed = true;
      break;
    }
  }
  return w;
}

}  // namespace

CatRef build_category(const Presentation& p, int bound) {
  std::vector<Rule> rules;
  for (const Relation& rel : p.relations) {
    if (rel.lhs.start != rel.rhs.start ||
        path_end(p, rel.lhs) != path_end(p, rel.rhs)) {
      throw Error(ErrorKind::InvalidPresentation,
                  "relation sides are not parallel in " + p.name);
    }
    if (rel.lhs.generators == rel.rhs.generators) continue;
    if (shortlex_less(rel.lhs.generators, rel.rhs.generators)) {
      rules.push_back({rel.rhs.generators, rel.lhs.generators});
    } else {
      rules.push_back({rel.lhs.generators, rel.rhs.generators});
    }
  }

  // Normal forms keyed by (start object, word).
  std::map<std::pair<ObjId, Word>, int> seen;
  std::vector<std::pair<ObjId, Word>> forms;
  std::vector<int> frontier;
  const int n = static_cast<int>(p.objects.size());
  for (ObjId a = 0; a < n; ++a) {
    seen[{a, {}}] = static_cast<int>(forms.size());
    frontier.push_back(static_cast<int>(forms.size()));
    forms.push_back({a, {}});
  }
  auto end_of = [&](const std::pair<ObjId, Word>& f) {
    return path_end(p, Path{f.first, f.second});
  };
  for (int length = 0; !frontier.empty(); ++length) {
    std::vector<int> next;
    for (int idx : frontier) {
      const auto base = forms[idx];
      const ObjId at = end_of(base);
      for (int g = 0; g < static_cast<int>(p.generators.size()); ++g) {
        if (p.generators[g].src != at) continue;
        Word w = base.second;
        w.push_back(g);
        w = normalize(std::move(w), rules);
        if (seen.count({base.first, w})) continue;
        if (length >= bound) {
          throw Error(ErrorKind::SaturationExceeded,
                      "normal forms of " + p.name + " still growing at length " +
                          std::to_string(bound));
        }
        seen[{base.first, w}] = static_cast<int>(forms.size());
        next.push_back(static_cast<int>(forms.size()));
        forms.push_back({base.first, std::move(w)});
      }
    }
    frontier = std::move(next);
  }

  FinCat c;
  c.name = p.name;
  c.objects = p.objects;
  c.identities.resize(n);
  for (int i = 0; i < static_cast<int>(forms.size()); ++i) {
    const auto& [start, word] = forms[i];
    std::string name;
    if (word.empty()) {
      name = "id_" + p.objects[start];
      c.identities[start] = i;
    } else {
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!name.empty()) name += "*";
        name += p.generators[*it].name;
      }
    }
    c.morphisms.push_back({name, start, end_of(forms[i])});
  }
  c.reset_table();
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      Word w = forms[f].second;
      w.insert(w.end(), forms[g].second.begin(), forms[g].second.end());
      w = normalize(std::move(w), rules);
      c.compose_entry(g, f) = seen.at({forms[f].first, w});
    }
  }
  c.reindex();
  const ValidationReport report = validate_category(c);
  if (!report.empty()) {
    throw Error(ErrorKind::InvalidPresentation,
                "saturated table of " + p.name + " is not a category (" +
                    report.front().rule + " at " + report.front().where + ")");
  }
  return std::make_shared<const FinCat>(std::move(c));
}

}  // namespace fincolim
