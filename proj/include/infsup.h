/*
 * Copyright 2026 The infsup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libinfsup.
 *
 * The library computes LP-backed certificates and counterexample witnesses
 * for sample-discretized semi-infinite programs: matrix-game minimax values
 * over probability simplices, infsup-convexity verdicts, dominated
 * functionals, and Fritz John / KKT multiplier pairs.
 *
 * Conventions:
 *  - All handles are opaque and freed with their *_free function.
 *  - All numeric inputs are text so the exact-rational mode never rounds:
 *    numbers look like "2", "-0.5", "1e-3" or "2/3"; lists are
 *    comma-separated. NULL selects the documented default.
 *  - Operations write a JSON report (caller frees with isx_string_free) and
 *    a verdict flag: 0 when the report is positive (certificate / convex /
 *    holds / value), 1 when it is negative (witness / fails).
 *  - The return status is ISX_OK when the operation ran, ISX_INVALID_INPUT
 *    for malformed or precondition-violating input, ISX_NUMERICAL for a
 *    solver failure; isx_last_error() returns a thread-local message for
 *    the most recent failure on this thread.
 */

#ifndef INFSUP_H
#define INFSUP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isx_status {
  ISX_OK = 0,
  ISX_INVALID_INPUT = 2, /* matches the CLI exit code */
  ISX_NUMERICAL = 3
} isx_status;

typedef struct isx_instance isx_instance;
typedef struct isx_matrix isx_matrix;

const char* isx_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
const char* isx_last_error(void);

void isx_string_free(char* s);

/* ------------------------------------------------------------------ */
/* inputs                                                              */
/* ------------------------------------------------------------------ */

/* CSV matrix: one comma-separated row per line. exact != 0 selects
 * exact-rational arithmetic for every operation on the handle. */
isx_status isx_matrix_parse_csv(const char* text, int exact, isx_matrix** out);
void isx_matrix_free(isx_matrix* m);

/* Instance JSON:
 *   {"lambda_labels": [string]?, "x_labels": [string]?,
 *    "objective": [number], "constraints": [[number]], "x0_index": int?}
 * Numbers may also be strings such as "2/3". */
isx_status isx_instance_parse_json(const char* text, int exact,
                                   isx_instance** out);

/* Builtin generators; name is "paper" (uses n_trunc) or "convex-demo".
 * grid is a comma-separated number list. */
isx_status isx_instance_example(const char* name, const char* grid,
                                size_t n_trunc, int exact, isx_instance** out);

isx_status isx_instance_to_json(const isx_instance* inst, char** out_json);
void isx_instance_free(isx_instance* inst);

/* ------------------------------------------------------------------ */
/* operations                                                          */
/* ------------------------------------------------------------------ */

/* tol is the float-mode tolerance (default "1e-9"); exact-rational handles
 * ignore it and compare exactly. */

/* Mixed and pure game values of the matrix with optimal mixture mu and dual
 * functional phi. */
isx_status isx_minimax(const isx_matrix* m, const char* tol, char** report,
                       int* verdict);

/* Infsup-convexity of the matrix rows over the sampled columns; a negative
 * verdict carries the witness mixture. */
isx_status isx_convexity(const isx_matrix* m, const char* tol, char** report,
                         int* verdict);

/* Functional on the coordinate simplex matching the minimum of the
 * coordinate-max over the convex hull of the matrix columns. */
isx_status isx_mazur_orlicz(const isx_matrix* m, const char* tol, char** report,
                            int* verdict);

/* Dominated functional phi with f + alpha <= phi . G columnwise, or the
 * witness ruling it out. alpha defaults to "0". */
isx_status isx_konig(const isx_instance* inst, const char* alpha,
                     const char* tol, char** report, int* verdict);

isx_status isx_fritz_john(const isx_instance* inst, const char* tol,
                          char** report, int* verdict);

isx_status isx_kkt(const isx_instance* inst, const char* tol, char** report,
                   int* verdict);

isx_status isx_slater(const isx_instance* inst, const char* tol, char** report,
                      int* verdict);

/* phi is a comma-separated nonnegative weight list, one entry per
 * constraint row. */
isx_status isx_saddle(const isx_instance* inst, const char* phi,
                      const char* tol, char** report, int* verdict);

/* Truncation study of the builtin counterexample family on the given grid;
 * n_list like "1,2,4,8". exact selects the arithmetic. */
isx_status isx_study(const char* n_list, const char* grid, const char* tol,
                     int exact, char** report, int* verdict);

/* Re-checks an emitted report by direct arithmetic (no LP). Pass the same
 * instance or matrix the original command consumed; either pointer may be
 * NULL when unused (study reports need neither). */
isx_status isx_verify(const isx_instance* inst, const isx_matrix* m,
                      const char* report_json, const char* tol, char** report,
                      int* verdict);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INFSUP_H */
