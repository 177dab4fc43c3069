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

#include "fincolim/commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fincolim/bicolim.hpp"
#include "fincolim/fixture.hpp"
#include "fincolim/limits.hpp"
#include "fincolim/restriction.hpp"
#include "fincolim/sites.hpp"

namespace fs = std::filesystem;

namespace fincolim {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::InputError: return "input-error";
    case Outcome::Budget: return "budget";
  }
  return "?";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string RunReport::render() const {
  std::ostringstream out;
  out << kReportHeader << '\n';
  out << "command " << command << '\n';
  for (const auto& [name, digest] : inputs) {
    out << "input " << name << " sha256:" << digest << '\n';
  }
  out << "budget " << budget << '\n';
  out << "seed " << (seed ? std::to_string(*seed) : "none") << '\n';
  out << "outcome " << to_string(outcome) << '\n';
  if (!error_kind.empty()) {
    out << "error " << error_kind << ' ' << error_message << '\n';
  }
  for (const auto& [k, v] : tallies) out << "tally " << k << ' ' << v << '\n';
  for (const auto& [rule, where] : violations) {
    out << "violation " << rule << ' ' << where << '\n';
  }
  if (time_ms) out << "time-ms " << *time_ms << '\n';
  return out.str();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "validate",       "colim",       "site-colim", "restrict",
      "verify-bicolim", "verify-site", "sheaf-check"};
  return names;
}

namespace {

// Input problems detected after parsing; reported as input-error.
struct InvalidStructure {
  ValidationReport violations;
};

class Context {
 public:
  Context(const RunOptions& options, RunReport& report)
      : options_(options), report_(report) {
    if (!options.fixture_dir.empty()) search_.push_back(options.fixture_dir);
  }

  Fixture load(const std::vector<std::string>& paths) {
    FixtureLoader loader(search_);
    for (const std::string& p : paths) loader.load_file(p);
    record(loader.fixture());
    return loader.take();
  }

  Fixture load_one(const std::string& path) { return load({path}); }

  Budget budget() const { return Budget(options_.budget); }
  BuildOptions build(bool with_limits) const {
    return {budget(), RefinementOrder{options_.seed}, with_limits};
  }

  std::string arg(const std::string& key) const {
    auto it = options_.args.find(key);
    return it == options_.args.end() ? std::string() : it->second;
  }

  template <typename T>
  void tally(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    report_.tallies.emplace_back(key, s.str());
  }
  void violation(const std::string& rule, const std::string& where) {
    report_.violations.emplace_back(rule, where.empty() ? "-" : where);
  }
  void fail_if_violations() {
    if (!report_.violations.empty()) report_.outcome = Outcome::Fail;
  }

 private:
  void record(const Fixture& fx) {
    for (std::size_t i = 0; i < fx.files.size(); ++i) {
      std::pair<std::string, std::string> entry{
          fs::path(fx.files[i].path).filename().string(),
          sha256_hex(fx.files[i].bytes)};
      // A vertex file may repeat one the main inputs already pulled in.
      if (std::find(report_.inputs.begin(), report_.inputs.end(), entry) ==
          report_.inputs.end()) {
        report_.inputs.push_back(std::move(entry));
      }
    }
  }

  const RunOptions& options_;
  RunReport& report_;
  std::vector<fs::path> search_;
};

void require_valid(const ValidationReport& v) {
  if (!v.empty()) throw InvalidStructure{v};
}

bool complete_limits(const TwoDiagram& d) {
  for (const CatRef& f : d.fibers) {
    if (!f->limits || !f->limits->complete) return false;
  }
  return true;
}

std::size_t span_count(const PseudocolimitResult& r) {
  std::size_t n = 0;
  for (const auto& c : r.classes) n += c.size();
  return n;
}

// Picks a category either defined in `fx` under `name` or, when `name` names
// a file, the last category defined by that file.
CatRef vertex_category(Context& ctx, const Fixture& fx, const std::string& name) {
  if (name.empty()) {
    throw Error(ErrorKind::InvalidInput, "--vertex is required");
  }
  if (auto it = fx.categories.find(name); it != fx.categories.end()) {
    return it->second;
  }
  Fixture v = ctx.load_one(name);
  return v.categories.at(v.pick(FixtureKind::Category));
}

SiteRef vertex_site(Context& ctx, const Fixture& fx, const std::string& name) {
  if (name.empty()) {
    throw Error(ErrorKind::InvalidInput, "--vertex is required");
  }
  if (auto it = fx.sites.find(name); it != fx.sites.end()) return it->second;
  Fixture v = ctx.load_one(name);
  return v.sites.at(v.pick(FixtureKind::Site));
}

void prefixed(Context& ctx, const std::string& prefix,
              const ValidationReport& v) {
  for (const Violation& x : v) ctx.violation(x.rule, prefix + " " + x.where);
}

void cmd_validate(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  std::map<FixtureKind, int> counts;
  for (const auto& [kind, name] : fx.order) {
    ++counts[kind];
    const std::string where = std::string(to_string(kind)) + ":" + name;
    switch (kind) {
      case FixtureKind::Category: {
        const FinCat& c = *fx.categories.at(name);
        ValidationReport v = validate_category(c);
        if (v.empty() && c.limits) v = validate_limits(c, ctx.budget());
        prefixed(ctx, where, v);
        break;
      }
      case FixtureKind::TwoCategory:
        prefixed(ctx, where, validate_two_cat(*fx.two_cats.at(name)));
        break;
      case FixtureKind::Diagram:
        prefixed(ctx, where, validate_diagram(*fx.diagrams.at(name)));
        break;
      case FixtureKind::Site:
        prefixed(ctx, where, validate_site(*fx.sites.at(name), ctx.budget()));
        break;
      case FixtureKind::SiteDiagram:
        prefixed(ctx, where,
                 validate_site_diagram(fx.site_diagrams.at(name), ctx.budget()));
        break;
      case FixtureKind::Ambient:
        prefixed(ctx, where, validate_ambient(fx.ambients.at(name), ctx.budget()));
        break;
      case FixtureKind::Presheaf:
        prefixed(ctx, where, validate_presheaf(fx.presheaves.at(name)));
        break;
      case FixtureKind::Cone: {
        const EquationCheck e = check_pseudocone(fx.cones.at(name));
        if (!e.ok) ctx.violation("pseudocone", where + " " + e.violation);
        break;
      }
    }
  }
  for (const auto& [kind, n] : counts) ctx.tally(to_string(kind), n);
  ctx.fail_if_violations();
}

void cmd_colim(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  const DiagramRef d = fx.diagrams.at(fx.pick(FixtureKind::Diagram, ctx.arg("diagram")));
  require_valid(validate_diagram(*d));
  const bool limits = complete_limits(*d);
  std::optional<PseudocolimitResult> r;
  if (limits) {
    try {
      r = build_pseudocolimit(d, ctx.build(true));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::NotFiltered) throw;
      ctx.violation("limits", e.what());
    }
  }
  if (!r) r = build_pseudocolimit(d, ctx.build(false));
  ctx.tally("diagram", d->name);
  ctx.tally("index-objects", d->index->object_count());
  ctx.tally("objects", r->colim->object_count());
  ctx.tally("morphisms", r->colim->morphism_count());
  ctx.tally("spans", span_count(*r));
  ctx.tally("limits", r->colim->limits ? "chosen" : "none");
  for (const std::string& p : check_span_transitivity(*r, ctx.budget())) {
    ctx.violation("span-transitivity", p);
  }
  prefixed(ctx, "colim", validate_category(*r->colim));
  if (r->colim->limits) {
    std::size_t exact = 0;
    const auto legs = verify_cone_exactness(*r, ctx.budget());
    for (const LegExactness& l : legs) {
      if (l.check.exact) {
        ++exact;
      } else {
        ctx.violation("leg-exactness", l.index_object + " " + l.check.counterexample);
      }
    }
    ctx.tally("exact-legs", std::to_string(exact) + "/" + std::to_string(legs.size()));
  }
  if (const std::string path = ctx.arg("emit"); !path.empty()) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    out << emit_category(*r->colim);
    ctx.tally("emitted", fs::path(path).filename().string());
  }
  ctx.fail_if_violations();
}

void cmd_site_colim(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  const SiteDiagram& sd =
      fx.site_diagrams.at(fx.pick(FixtureKind::SiteDiagram, ctx.arg("sitediagram")));
  require_valid(validate_site_diagram(sd, ctx.budget()));
  const ColimSite c = build_colim_site(sd, ctx.build(true));
  const Site& s = *c.site;
  ctx.tally("diagram", sd.diagram->name);
  ctx.tally("objects", s.category->object_count());
  ctx.tally("morphisms", s.category->morphism_count());
  ctx.tally("basis-covers", s.basis.size());
  ctx.tally("generators", s.generators.size());
  prefixed(ctx, "site", validate_site(s, ctx.budget()));
  std::size_t continuous = 0;
  for (const SiteMorphism& m : c.cone) {
    const ContinuityCheck k = check_continuous(m);
    if (k.continuous) {
      ++continuous;
    } else {
      ctx.violation("leg-continuity", m.from->name + " " + k.failing_cover);
    }
  }
  ctx.tally("continuous-legs",
            std::to_string(continuous) + "/" + std::to_string(c.cone.size()));
  const MutationResult mut = mutate_colim_basis(c);
  ctx.tally("mutation-tested", mut.tested);
  ctx.tally("mutation-redundant", mut.redundant);
  for (const std::string& s2 : mut.survivors) ctx.violation("mutation-survivor", s2);
  if (const std::string path = ctx.arg("emit"); !path.empty()) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    out << emit_site(s);
    ctx.tally("emitted", fs::path(path).filename().string());
  }
  ctx.fail_if_violations();
}

void cmd_restrict(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  const AmbientDiagram& a = fx.ambients.at(fx.pick(FixtureKind::Ambient, ctx.arg("ambient")));
  require_valid(validate_ambient(a, ctx.budget()));
  const RestrictionResult r = restrict_diagram(a);
  const TwoDiagram& d = *a.diagram;
  ctx.tally("diagram", d.name);
  ctx.tally("rounds", r.rounds);
  for (ObjId x = 0; x < d.index->object_count(); ++x) {
    std::string objs;
    for (ObjId o : r.subsets[x]) {
      objs += (objs.empty() ? "" : ",") + d.fibers[x]->objects[o];
    }
    ctx.tally("fiber:" + d.index->one->objects[x],
              std::to_string(r.subsets[x].size()) + "/" +
                  std::to_string(d.fibers[x]->object_count()) + " {" + objs + "}");
  }
  for (const Violation& v : verify_restriction(r, &a)) ctx.violation(v.rule, v.where);
  if (!r.restricted) ctx.violation("transition", "restricted diagram not formed");
  ctx.fail_if_violations();
}

void cmd_verify_bicolim(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  const DiagramRef d = fx.diagrams.at(fx.pick(FixtureKind::Diagram, ctx.arg("diagram")));
  require_valid(validate_diagram(*d));
  const CatRef x = vertex_category(ctx, fx, ctx.arg("vertex"));
  require_valid(validate_category(*x));
  const PseudocolimitResult r = build_pseudocolimit(d, ctx.build(false));
  const BicolimReport b = verify_bicolimit(r, x, ctx.budget());
  ctx.tally("diagram", d->name);
  ctx.tally("vertex", x->name);
  ctx.tally("functors", b.functor_count);
  ctx.tally("cones", b.cone_count);
  ctx.tally("transformations", b.transformation_count);
  ctx.tally("modifications", b.modification_count);
  ctx.tally("equivalence", b.equivalence() ? "yes" : "no");
  ctx.tally("isomorphism", b.isomorphism() ? "yes" : "no");
  for (const std::string& p : b.problems) ctx.violation("bicolimit", p);
  if (!b.isomorphism()) ctx.violation("bicolimit", "precomposition is not an isomorphism");
  ctx.fail_if_violations();
}

void cmd_verify_site(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  const SiteDiagram& sd =
      fx.site_diagrams.at(fx.pick(FixtureKind::SiteDiagram, ctx.arg("sitediagram")));
  require_valid(validate_site_diagram(sd, ctx.budget()));
  const SiteRef x = vertex_site(ctx, fx, ctx.arg("vertex"));
  require_valid(validate_site(*x, ctx.budget()));
  const ColimSite c = build_colim_site(sd, ctx.build(true));
  const SiteBicolimReport b = verify_site_pseudocolimit(sd, c, *x, ctx.budget());
  ctx.tally("diagram", sd.diagram->name);
  ctx.tally("vertex", x->name);
  ctx.tally("functors", b.functor_count);
  ctx.tally("cones", b.cone_count);
  ctx.tally("transformations", b.transformation_count);
  ctx.tally("modifications", b.modification_count);
  ctx.tally("isomorphism", b.isomorphism() ? "yes" : "no");
  ctx.tally("covers-from-basis", b.covers_from_basis ? "yes" : "no");
  for (const std::string& p : b.problems) ctx.violation("site-bicolimit", p);
  if (!b.isomorphism()) {
    ctx.violation("site-bicolimit", "precomposition is not an isomorphism");
  }
  ctx.fail_if_violations();
}

void cmd_sheaf_check(Context& ctx, const std::vector<std::string>& inputs) {
  Fixture fx = ctx.load(inputs);
  const std::string pname = fx.pick(FixtureKind::Presheaf, ctx.arg("presheaf"));
  const Presheaf& p = fx.presheaves.at(pname);
  require_valid(validate_presheaf(p));
  SiteRef s;
  if (const std::string name = ctx.arg("site"); !name.empty()) {
    s = fx.sites.at(fx.pick(FixtureKind::Site, name));
  } else {
    for (auto it = fx.order.rbegin(); it != fx.order.rend() && !s; ++it) {
      if (it->first != FixtureKind::Site) continue;
      const SiteRef& cand = fx.sites.at(it->second);
      if (same_category(cand->category, p.category)) s = cand;
    }
  }
  if (!s) {
    auto trivial = std::make_shared<Site>();
    trivial->name = "trivial";
    trivial->category = p.category;
    s = trivial;
  } else {
    require_valid(validate_site(*s, ctx.budget()));
    if (!same_category(s->category, p.category)) {
      throw Error(ErrorKind::InvalidInput, "site " + s->name +
                                               " is not over the category of " + pname);
    }
  }
  const SheafCheck k = check_sheaf(p, *s, ctx.budget());
  ctx.tally("presheaf", pname);
  ctx.tally("site", s->name);
  ctx.tally("basis-covers", s->basis.size());
  ctx.tally("sheaf", k.sheaf ? "yes" : "no");
  if (!k.sheaf) ctx.violation("sheaf", k.failing_cover);
  ctx.fail_if_violations();
}

}  // namespace

RunReport run_command(const std::string& command,
                      const std::vector<std::string>& inputs,
                      const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command;
  report.budget = options.budget;
  report.seed = options.seed;
  Context ctx(options, report);
  try {
    if (inputs.empty()) {
      throw Error(ErrorKind::InvalidInput, "no input files");
    }
    if (command == "validate") cmd_validate(ctx, inputs);
    else if (command == "colim") cmd_colim(ctx, inputs);
    else if (command == "site-colim") cmd_site_colim(ctx, inputs);
    else if (command == "restrict") cmd_restrict(ctx, inputs);
    else if (command == "verify-bicolim") cmd_verify_bicolim(ctx, inputs);
    else if (command == "verify-site") cmd_verify_site(ctx, inputs);
    else if (command == "sheaf-check") cmd_sheaf_check(ctx, inputs);
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + command + "'");
  } catch (const InvalidStructure& bad) {
    report.outcome = Outcome::InputError;
    report.error_kind = "InvalidInput";
    report.error_message = "input fails validation";
    report.tallies.clear();
    report.violations.clear();
    for (const Violation& v : bad.violations) {
      report.violations.emplace_back(v.rule, v.where.empty() ? "-" : v.where);
    }
  } catch (const Error& e) {
    report.outcome = e.kind() == ErrorKind::BudgetExceeded ? Outcome::Budget
                                                           : Outcome::InputError;
    report.error_kind = to_string(e.kind());
    report.error_message = e.what();
    report.tallies.clear();
    report.violations.clear();
  }
  if (options.timing) {
    report.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return report;
}

}  // namespace fincolim
