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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "fincolim.h"

namespace {

const std::string kDir = FINCOLIM_FIXTURE_DIR;

std::string fixture(const char* name) { return kDir + "/" + name; }

// Owning wrappers so failed checks do not leak.
struct Session {
  fc_session* s = fc_session_new();
  ~Session() { fc_session_free(s); }
};

struct Report {
  fc_report* r = nullptr;
  ~Report() { fc_report_free(r); }
  std::string text() const { return r ? fc_report_text(r) : ""; }
};

bool has_line(const std::string& text, const std::string& line) {
  return text.find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("version and command table") {
  CHECK(std::string(fc_version()).size() > 0);
  REQUIRE(fc_command_count() == 7);
  std::vector<std::string> names;
  for (size_t i = 0; i < fc_command_count(); ++i) names.push_back(fc_command_name(i));
  CHECK(names == std::vector<std::string>{"validate", "colim", "site-colim", "restrict",
                                          "verify-bicolim", "verify-site", "sheaf-check"});
  CHECK(fc_command_name(99) == nullptr);
}

TEST_CASE("null and bad arguments are reported, not crashed on") {
  Session s;
  fc_report* out = nullptr;
  CHECK(fc_run(nullptr, "validate", nullptr, 0, &out) == FC_INTERNAL);
  CHECK(out == nullptr);
  CHECK(fc_session_set_budget(nullptr, 5) == FC_INTERNAL);
  CHECK(fc_session_set_budget(s.s, 0) == FC_INTERNAL);
  CHECK(fc_session_set_arg(s.s, nullptr, "x") == FC_INTERNAL);
  CHECK(fc_run(s.s, "validate", nullptr, 0, nullptr) == FC_INTERNAL);
  fc_report_free(nullptr);
  fc_colim_free(nullptr);
  fc_session_free(nullptr);
}

TEST_CASE("unknown commands and missing files are input errors") {
  Session s;
  Report r;
  const std::string p = fixture("one.cat");
  const char* in[] = {p.c_str()};
  CHECK(fc_run(s.s, "frobnicate", in, 1, &r.r) == FC_INPUT);
  REQUIRE(r.r);
  CHECK(fc_report_exit_code(r.r) == 2);
  CHECK(has_line(r.text(), "outcome input-error"));

  Report m;
  CHECK(fc_validate(s.s, "/nonexistent/file.cat", &m.r) == FC_INPUT);
  REQUIRE(m.r);
  CHECK(m.text().find("error ") != std::string::npos);
}

TEST_CASE("commands map to exit codes") {
  Session s;
  {
    Report r;
    CHECK(fc_validate(s.s, fixture("one.cat").c_str(), &r.r) == FC_OK);
    CHECK(fc_report_exit_code(r.r) == 0);
    CHECK(r.text().rfind("fincolim-report 1\ncommand validate\n", 0) == 0);
  }
  {
    Report r;
    CHECK(fc_colim_report(s.s, fixture("consttwo.diag").c_str(), &r.r) == FC_OK);
    CHECK(has_line(r.text(), "tally objects 6"));
    CHECK(has_line(r.text(), "tally morphisms 27"));
  }
  {
    Report r;
    CHECK(fc_colim_report(s.s, fixture("notfiltered.diag").c_str(), &r.r) == FC_INPUT);
    CHECK(r.text().find("error NotFiltered F1") != std::string::npos);
  }
  {
    Report r;
    CHECK(fc_verify_bicolim(s.s, fixture("consttwo.diag").c_str(), fixture("two.cat").c_str(),
                            &r.r) == FC_OK);
    CHECK(has_line(r.text(), "tally functors 3"));
    CHECK(has_line(r.text(), "tally cones 3"));
    CHECK(has_line(r.text(), "tally isomorphism yes"));
  }
  {
    Report r;
    CHECK(fc_site_colim(s.s, fixture("covered_chain.sitediag").c_str(), &r.r) == FC_OK);
    CHECK(has_line(r.text(), "tally mutation-tested 3"));
  }
  {
    Report r;
    CHECK(fc_verify_site(s.s, fixture("covered_chain.sitediag").c_str(),
                         fixture("two.site").c_str(), &r.r) == FC_OK);
    CHECK(has_line(r.text(), "tally isomorphism yes"));
  }
  {
    Report r;
    CHECK(fc_restrict(s.s, fixture("restrict_collapse.amb").c_str(), &r.r) == FC_OK);
    CHECK(has_line(r.text(), "tally rounds 1"));
  }
  {
    Report r;
    CHECK(fc_sheaf_check(s.s, fixture("diamond.psh").c_str(), &r.r) == FC_FAIL);
    CHECK(fc_report_exit_code(r.r) == 1);
    CHECK(r.text().find("violation sheaf top") != std::string::npos);
  }
  {
    Report r;
    CHECK(fc_sheaf_check(s.s, fixture("terminal.psh").c_str(), &r.r) == FC_OK);
  }
}

TEST_CASE("a tiny budget yields the budget exit code") {
  Session s;
  REQUIRE(fc_session_set_budget(s.s, 3) == FC_OK);
  Report r;
  CHECK(fc_verify_bicolim(s.s, fixture("consttwo.diag").c_str(), fixture("two.cat").c_str(),
                          &r.r) == FC_BUDGET);
  CHECK(fc_report_exit_code(r.r) == 3);
  CHECK(has_line(r.text(), "budget 3"));
  CHECK(has_line(r.text(), "outcome budget"));
}

TEST_CASE("reports are deterministic and seeds are recorded") {
  Session s;
  Report a, b;
  fc_colim_report(s.s, fixture("diamondchain.diag").c_str(), &a.r);
  fc_colim_report(s.s, fixture("diamondchain.diag").c_str(), &b.r);
  CHECK(a.text() == b.text());
  CHECK(a.text().find("time-ms") == std::string::npos);

  REQUIRE(fc_session_set_seed(s.s, 17) == FC_OK);
  Report c;
  fc_colim_report(s.s, fixture("diamondchain.diag").c_str(), &c.r);
  CHECK(has_line(c.text(), "seed 17"));
  // The seed changes only the refinement order, never the answer.
  auto strip = [](std::string t) { return t.substr(t.find("outcome")); };
  CHECK(strip(c.text()) == strip(a.text()));
  REQUIRE(fc_session_clear_seed(s.s) == FC_OK);

  REQUIRE(fc_session_set_timing(s.s, 1) == FC_OK);
  Report d;
  fc_colim_report(s.s, fixture("consttwo.diag").c_str(), &d.r);
  CHECK(d.text().find("\ntime-ms ") != std::string::npos);
}

TEST_CASE("fixture dir and named arguments") {
  Session s;
  REQUIRE(fc_session_set_fixture_dir(s.s, kDir.c_str()) == FC_OK);
  Report r;
  CHECK(fc_validate(s.s, "diamond.cat", &r.r) == FC_OK);

  REQUIRE(fc_session_set_arg(s.s, "diagram", "ConstTwo") == FC_OK);
  const std::string a = fixture("consttwo.diag"), b = fixture("growchain.diag");
  const char* in[] = {a.c_str(), b.c_str()};
  Report two;
  CHECK(fc_run(s.s, "colim", in, 2, &two.r) == FC_OK);
  CHECK(has_line(two.text(), "tally diagram ConstTwo"));

  REQUIRE(fc_session_set_arg(s.s, "diagram", "Missing") == FC_OK);
  Report bad;
  CHECK(fc_run(s.s, "colim", in, 2, &bad.r) == FC_INPUT);
}

TEST_CASE("colimit accessors") {
  Session s;
  fc_colim* c = nullptr;
  REQUIRE(fc_colim_build(s.s, fixture("consttwo.diag").c_str(), nullptr, &c) == FC_OK);
  REQUIRE(c);
  CHECK(fc_colim_object_count(c) == 6);
  CHECK(fc_colim_morphism_count(c) == 27);
  CHECK(fc_colim_hom_size(c, 0, 0) == 1);
  CHECK(fc_colim_hom_size(c, -1, 0) == -1);
  CHECK(fc_colim_hom_size(c, 0, 6) == -1);
  int total = 0;
  for (int p = 0; p < 6; ++p) {
    for (int q = 0; q < 6; ++q) total += fc_colim_hom_size(c, p, q);
  }
  CHECK(total == 27);
  CHECK(fc_colim_object_name(c, 0) != nullptr);
  CHECK(fc_colim_object_name(c, 6) == nullptr);
  const std::string text = fc_colim_emit(c);
  CHECK(text.rfind("fincolim-fixture 1\n", 0) == 0);
  CHECK(text.find("limits") != std::string::npos);
  fc_colim_free(c);

  fc_colim* bad = nullptr;
  CHECK(fc_colim_build(s.s, fixture("notfiltered.diag").c_str(), nullptr, &bad) == FC_INPUT);
  CHECK(bad == nullptr);
  CHECK(std::string(fc_last_error(s.s)).find("F1") != std::string::npos);
}
