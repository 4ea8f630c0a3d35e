/* Copyright 2026 The tracewit developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API for the tracewit library: nonlinear entanglement witnesses from
 * trace-polynomial and immanant inequalities, evaluated on multiple state
 * copies by dense, symbolic (group-ring), and simulated-measurement
 * backends.
 *
 * Conventions: every function returns a tracewit_status; outputs come back
 * through pointers and are owned by the caller. Strings returned through
 * char** must be released with tracewit_string_free, handles with their
 * _free function. On any non-OK status the thread-local message from
 * tracewit_last_error() describes the failure.
 */

#ifndef TRACEWIT_TRACEWIT_H_
#define TRACEWIT_TRACEWIT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tracewit_status {
  TRACEWIT_OK = 0,
  /* Malformed input: spec text, state descriptor, or argument ranges. */
  TRACEWIT_USAGE_ERROR = 2,
  /* A configured numerical cap (dimension or support size) was exceeded. */
  TRACEWIT_CAP_ERROR = 3,
  /* Anything else (I/O failures, internal invariant violations). */
  TRACEWIT_INTERNAL_ERROR = 4
} tracewit_status;

/* Thread-local message describing the most recent failure in this thread.
 * Valid until the next tracewit call on the same thread; never NULL. */
const char* tracewit_last_error(void);

/* Releases strings returned through char** out-parameters. */
void tracewit_string_free(char* s);

/* ---- Witness specs ----------------------------------------------------- */

/* A parsed multi-copy witness: one factor per party acting on `copies`
 * copies of that party's system. See the text grammar in the project
 * documentation (`parties`/`copies`/`dims`/`factor` lines). */
typedef struct tracewit_spec tracewit_spec;

tracewit_status tracewit_spec_parse(const char* text, tracewit_spec** out);
tracewit_status tracewit_spec_load(const char* path, tracewit_spec** out);
/* Round-trip stable rendering of the spec's text form. */
tracewit_status tracewit_spec_print(const tracewit_spec* spec, char** out);
void tracewit_spec_free(tracewit_spec* spec);

/* ---- States ------------------------------------------------------------ */

/* A state named by a descriptor:
 *   ghz:n=3,d=2,p=1.0      bell:phi_plus[,d=2]      bell:psi_plus
 *   mixed:n=2,d=2          werner:n=3,d=3,seed=7    file:rho.csv[,dims=2x2]
 */
typedef struct tracewit_state tracewit_state;

tracewit_status tracewit_state_from_descriptor(const char* descriptor,
                                               tracewit_state** out);
void tracewit_state_free(tracewit_state* state);

/* ---- Evaluation -------------------------------------------------------- */

typedef struct tracewit_eval_result {
  /* tr(W rho^(x k)). */
  double value;
  /* Numerical error budget of the backend; the verdict uses value < -bound. */
  double error_bound;
  /* 1 when the witness certifies entanglement, 0 when inconclusive. */
  int entangled_certified;
  /* "dense" or "group-ring". */
  char backend[16];
} tracewit_eval_result;

/* Evaluates the spec on k copies of the state. The group-ring backend is
 * chosen for werner: states with all-symbolic factors; everything else runs
 * densely. mem_cap > 0 overrides the backend cap (dense: Hilbert dimension;
 * group-ring: support size). */
tracewit_status tracewit_witness_eval(const tracewit_spec* spec,
                                      const tracewit_state* state,
                                      long long mem_cap,
                                      tracewit_eval_result* out);

/* ---- Reports and tables ------------------------------------------------ */

/* Human-readable catalog of the immanant-inequality witness families on n
 * letters, with inequalities, proof status, and expansions. */
tracewit_status tracewit_catalog_text(int n, char** out);

/* Noisy-GHZ detection curves: CSV with columns
 * d,k,p,witness_value,p3ppt_value,ppt_threshold over d in [d_min, d_max]
 * and the given copy counts (pairs with k > d are skipped). */
tracewit_status tracewit_ghz_curve(int n, int d_min, int d_max,
                                   const int* copies, int n_copies,
                                   int p_steps, char** csv_out);

/* Random Werner scatter: CSV with columns
 * id,p,q,linear_value,nonlinear_value. Only n = d = k = 3 is supported. */
tracewit_status tracewit_werner_scatter(int n, int d, int k, int samples,
                                        uint64_t seed, char** csv_out);

/* Simulated randomized measurements on `rounds` copies of the state,
 * followed by the U-statistic estimate of the spec. CSV columns:
 * estimate,stderr,m,tuples_used. tuple_budget <= 0 selects the default. */
tracewit_status tracewit_shadow_estimate(const tracewit_spec* spec,
                                         const tracewit_state* state,
                                         int rounds, uint64_t seed,
                                         long long tuple_budget,
                                         char** csv_out);

/* Monte Carlo verification of the immanant inequalities on random PSD Gram
 * matrices: per-row minimum slack and violation counts, proven rows and the
 * conjectured ones tagged. */
tracewit_status tracewit_verify_inequalities(int trials, int n, uint64_t seed,
                                             char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRACEWIT_TRACEWIT_H_ */
