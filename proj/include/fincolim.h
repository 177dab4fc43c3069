/*
 *  Copyright 2026 The fincolim Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

/* C interface to the fincolim library. All handles are opaque and owned by
 * the caller; every function that can fail returns an fc_status and leaves
 * a message retrievable with fc_last_error. Strings returned by the library
 * stay valid until the owning handle is freed or reused. */

#ifndef FINCOLIM_H_
#define FINCOLIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Matches the process exit codes of the command-line tool. */
typedef enum fc_status {
  FC_OK = 0,       /* pass */
  FC_FAIL = 1,     /* verified failure or counterexample */
  FC_INPUT = 2,    /* parse error, unknown reference or invalid input */
  FC_BUDGET = 3,   /* enumeration budget exhausted */
  FC_INTERNAL = 4  /* bad arguments or an unexpected library error */
} fc_status;

typedef struct fc_session fc_session;
typedef struct fc_report fc_report;
typedef struct fc_colim fc_colim;

FC_API const char* fc_version(void);

FC_API fc_session* fc_session_new(void);
FC_API void fc_session_free(fc_session* s);

/* Cap per enumeration; default 1000000. */
FC_API fc_status fc_session_set_budget(fc_session* s, uint64_t cap);
/* Seeds the randomized refinement order; fc_session_clear_seed restores
 * the deterministic id order. */
FC_API fc_status fc_session_set_seed(fc_session* s, uint64_t seed);
FC_API fc_status fc_session_clear_seed(fc_session* s);
FC_API fc_status fc_session_set_fixture_dir(fc_session* s, const char* dir);
FC_API fc_status fc_session_set_timing(fc_session* s, int enabled);
/* Command arguments: diagram, sitediagram, ambient, presheaf, site, vertex,
 * emit. A NULL value removes the key. */
FC_API fc_status fc_session_set_arg(fc_session* s, const char* key,
                                    const char* value);
FC_API const char* fc_last_error(const fc_session* s);

/* Number of commands and their names, in a fixed order. */
FC_API size_t fc_command_count(void);
FC_API const char* fc_command_name(size_t i);

/* Runs a command on `n` fixture files. On return *out holds the report
 * (also for FC_FAIL, FC_INPUT and FC_BUDGET); the return value is the
 * report outcome, or FC_INTERNAL with *out NULL. */
FC_API fc_status fc_run(fc_session* s, const char* command,
                        const char* const* inputs, size_t n, fc_report** out);

/* Convenience wrappers around fc_run with a single input. */
FC_API fc_status fc_validate(fc_session* s, const char* path, fc_report** out);
FC_API fc_status fc_colim_report(fc_session* s, const char* path,
                                 fc_report** out);
FC_API fc_status fc_site_colim(fc_session* s, const char* path,
                               fc_report** out);
FC_API fc_status fc_restrict(fc_session* s, const char* path, fc_report** out);
FC_API fc_status fc_verify_bicolim(fc_session* s, const char* path,
                                   const char* vertex, fc_report** out);
FC_API fc_status fc_verify_site(fc_session* s, const char* path,
                                const char* vertex, fc_report** out);
FC_API fc_status fc_sheaf_check(fc_session* s, const char* path,
                                fc_report** out);

FC_API const char* fc_report_text(const fc_report* r);
FC_API int fc_report_exit_code(const fc_report* r);
FC_API void fc_report_free(fc_report* r);

/* Direct access to a built colimit. `diagram` may be NULL for the last
 * diagram defined in the file. Chosen limits are attached when every fiber
 * carries a complete assignment. */
FC_API fc_status fc_colim_build(fc_session* s, const char* path,
                                const char* diagram, fc_colim** out);
FC_API int fc_colim_object_count(const fc_colim* c);
FC_API int fc_colim_morphism_count(const fc_colim* c);
/* Size of the hom-set between two colimit objects, -1 when out of range. */
FC_API int fc_colim_hom_size(const fc_colim* c, int from, int to);
FC_API const char* fc_colim_object_name(const fc_colim* c, int i);
/* Canonical fixture text of the colimit category. */
FC_API const char* fc_colim_emit(fc_colim* c);
FC_API void fc_colim_free(fc_colim* c);

#ifdef __cplusplus
}
#endif

#endif /* FINCOLIM_H_ */
