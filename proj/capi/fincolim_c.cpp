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

#include "fincolim.h"

#include <exception>
#include <string>
#include <vector>

#include "fincolim/bicolim.hpp"
#include "fincolim/commands.hpp"
#include "fincolim/fixture.hpp"

struct fc_session {
  fincolim::RunOptions options;
  std::string error;
};

struct fc_report {
  std::string text;
  int exit_code = 0;
};

struct fc_colim {
  fincolim::PseudocolimitResult result;
  std::string emitted;
};

namespace {

fc_status internal(fc_session* s, const char* msg) {
  if (s) s->error = msg;
  return FC_INTERNAL;
}

template <typename F>
fc_status guarded(fc_session* s, F&& body) {
  if (!s) return FC_INTERNAL;
  try {
    s->error.clear();
    return body();
  } catch (const fincolim::Error& e) {
    s->error = e.what();
    return e.kind() == fincolim::ErrorKind::BudgetExceeded ? FC_BUDGET
                                                           : FC_INPUT;
  } catch (const std::exception& e) {
    return internal(s, e.what());
  } catch (...) {
    return internal(s, "unknown error");
  }
}

fc_status run_one(fc_session* s, const char* command, const char* path,
                  fc_report** out) {
  const char* inputs[] = {path};
  return fc_run(s, command, inputs, 1, out);
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

fc_session* fc_session_new(void) {
  try {
    return new fc_session();
  } catch (...) {
    return nullptr;
  }
}

void fc_session_free(fc_session* s) { delete s; }

fc_status fc_session_set_budget(fc_session* s, uint64_t cap) {
  if (!s) return FC_INTERNAL;
  if (cap == 0) return internal(s, "budget must be positive");
  s->options.budget = cap;
  return FC_OK;
}

fc_status fc_session_set_seed(fc_session* s, uint64_t seed) {
  if (!s) return FC_INTERNAL;
  s->options.seed = seed;
  return FC_OK;
}

fc_status fc_session_clear_seed(fc_session* s) {
  if (!s) return FC_INTERNAL;
  s->options.seed.reset();
  return FC_OK;
}

fc_status fc_session_set_fixture_dir(fc_session* s, const char* dir) {
  return guarded(s, [&] {
    s->options.fixture_dir = dir ? dir : "";
    return FC_OK;
  });
}

fc_status fc_session_set_timing(fc_session* s, int enabled) {
  if (!s) return FC_INTERNAL;
  s->options.timing = enabled != 0;
  return FC_OK;
}

fc_status fc_session_set_arg(fc_session* s, const char* key,
                             const char* value) {
  if (!key) return internal(s, "null key");
  return guarded(s, [&] {
    if (value) {
      s->options.args[key] = value;
    } else {
      s->options.args.erase(key);
    }
    return FC_OK;
  });
}

const char* fc_last_error(const fc_session* s) {
  return s ? s->error.c_str() : "null session";
}

size_t fc_command_count(void) { return fincolim::command_names().size(); }

const char* fc_command_name(size_t i) {
  const auto& names = fincolim::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

fc_status fc_run(fc_session* s, const char* command, const char* const* inputs,
                 size_t n, fc_report** out) {
  if (!out) return internal(s, "null output pointer");
  *out = nullptr;
  if (!command || (n > 0 && !inputs)) return internal(s, "null argument");
  return guarded(s, [&] {
    std::vector<std::string> files;
    for (size_t i = 0; i < n; ++i) {
      if (!inputs[i]) return internal(s, "null input path");
      files.emplace_back(inputs[i]);
    }
    const fincolim::RunReport r =
        fincolim::run_command(command, files, s->options);
    auto* rep = new fc_report{r.render(), r.exit_code()};
    if (r.outcome != fincolim::Outcome::Pass) {
      s->error = r.error_message.empty() ? "command failed" : r.error_message;
    }
    *out = rep;
    return static_cast<fc_status>(rep->exit_code);
  });
}

fc_status fc_validate(fc_session* s, const char* path, fc_report** out) {
  return run_one(s, "validate", path, out);
}

fc_status fc_colim_report(fc_session* s, const char* path, fc_report** out) {
  return run_one(s, "colim", path, out);
}

fc_status fc_site_colim(fc_session* s, const char* path, fc_report** out) {
  return run_one(s, "site-colim", path, out);
}

fc_status fc_restrict(fc_session* s, const char* path, fc_report** out) {
  return run_one(s, "restrict", path, out);
}

fc_status fc_verify_bicolim(fc_session* s, const char* path, const char* vertex,
                            fc_report** out) {
  const fc_status st = fc_session_set_arg(s, "vertex", vertex);
  return st == FC_OK ? run_one(s, "verify-bicolim", path, out) : st;
}

fc_status fc_verify_site(fc_session* s, const char* path, const char* vertex,
                         fc_report** out) {
  const fc_status st = fc_session_set_arg(s, "vertex", vertex);
  return st == FC_OK ? run_one(s, "verify-site", path, out) : st;
}

fc_status fc_sheaf_check(fc_session* s, const char* path, fc_report** out) {
  return run_one(s, "sheaf-check", path, out);
}

const char* fc_report_text(const fc_report* r) { return r ? r->text.c_str() : ""; }

int fc_report_exit_code(const fc_report* r) { return r ? r->exit_code : FC_INTERNAL; }

void fc_report_free(fc_report* r) { delete r; }

fc_status fc_colim_build(fc_session* s, const char* path, const char* diagram,
                         fc_colim** out) {
  if (!out) return internal(s, "null output pointer");
  *out = nullptr;
  if (!path) return internal(s, "null path");
  return guarded(s, [&] {
    std::vector<std::filesystem::path> search;
    if (!s->options.fixture_dir.empty()) search.push_back(s->options.fixture_dir);
    const fincolim::Fixture fx = fincolim::load_fixture(path, search);
    const auto d = fx.diagrams.at(
        fx.pick(fincolim::FixtureKind::Diagram, diagram ? diagram : ""));
    fincolim::BuildOptions options;
    options.budget = fincolim::Budget(s->options.budget);
    options.order.seed = s->options.seed;
    // Attach chosen limits when every fiber has them, as the colim command does.
    options.with_limits = true;
    for (const auto& f : d->fibers) {
      options.with_limits = options.with_limits && f->limits && f->limits->complete;
    }
    *out = new fc_colim{fincolim::build_pseudocolimit(d, options), {}};
    return FC_OK;
  });
}

int fc_colim_object_count(const fc_colim* c) {
  return c ? c->result.colim->object_count() : -1;
}

int fc_colim_morphism_count(const fc_colim* c) {
  return c ? c->result.colim->morphism_count() : -1;
}

int fc_colim_hom_size(const fc_colim* c, int from, int to) {
  if (!c) return -1;
  const int n = c->result.colim->object_count();
  if (from < 0 || to < 0 || from >= n || to >= n) return -1;
  return static_cast<int>(c->result.colim->hom(from, to).size());
}

const char* fc_colim_object_name(const fc_colim* c, int i) {
  if (!c || i < 0 || i >= c->result.colim->object_count()) return nullptr;
  return c->result.colim->objects[i].c_str();
}

const char* fc_colim_emit(fc_colim* c) {
  if (!c) return nullptr;
  try {
    c->emitted = fincolim::emit_category(*c->result.colim);
  } catch (...) {
    return nullptr;
  }
  return c->emitted.c_str();
}

void fc_colim_free(fc_colim* c) { delete c; }

}  // extern "C"
