// Copyright 2026 The photon-purify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the photon-purify simulator.
 *
 * Every function returns a pp_status. On failure a human-readable message is
 * available from pp_last_error() on the calling thread until the next call.
 * Objects behind opaque handles are owned by the caller and released with the
 * matching *_free function; passing NULL to a *_free function is allowed.
 */
#ifndef PHOTON_PURIFY_H
#define PHOTON_PURIFY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PHOTON_PURIFY_BUILDING)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_INVALID_ARGUMENT = 1,
  PP_ERR_NOT_NORMALIZED = 2,
  PP_ERR_OUT_OF_RANGE = 3,
  PP_ERR_MODE_MISMATCH = 4,
  PP_ERR_CUTOFF_EXCEEDED = 5,
  PP_ERR_ZERO_STATE = 6,
  PP_ERR_NOT_UNITARY = 7,
  PP_ERR_NOT_SQUARE = 8,
  PP_ERR_INDEX_OUT_OF_RANGE = 9,
  PP_ERR_DUPLICATE_MODE = 10,
  PP_ERR_PURITY_VIOLATED = 11,
  PP_ERR_INTERNAL = 99
} pp_status;

typedef enum pp_degeneracy {
  PP_DEGENERATE_NONE = 0,
  PP_DEGENERATE_BOTH_VACUOUS_TERMS = 1,
  PP_DEGENERATE_NO_PHOTON_PAIR = 2,
  PP_DEGENERATE_NO_VACUUM_PAIR = 3
} pp_degeneracy;

/* sqrt(1-p)|0> + sqrt(p) e^{i phase}|1> */
typedef struct pp_input {
  double p;
  double phase;
} pp_input;

typedef struct pp_beamsplitter {
  double theta;
  double phi;
} pp_beamsplitter;

typedef struct pp_scheme_report {
  pp_input input1;
  pp_input input2;
  pp_beamsplitter lambda1;
  pp_beamsplitter lambda2;
  double stage_one_probability;
  double stage_two_probability;
  double p_success;
  double output_fidelity;
  pp_degeneracy degeneracy;
} pp_scheme_report;

typedef struct pp_range {
  double start;
  double stop;
  int steps;
} pp_range;

typedef struct pp_sweep_spec {
  pp_range p1;
  pp_range p2;
  pp_range phase1;
  pp_range phase2;
  int diagonal; /* nonzero: input 2 mirrors input 1 */
  int cutoff;
  int threads; /* 0: hardware concurrency */
} pp_sweep_spec;

typedef struct pp_state pp_state;
typedef struct pp_sweep pp_sweep;
typedef struct pp_verify_report pp_verify_report;

#define PP_FAULT_NONE 0u
#define PP_FAULT_PERTURB_UNITARY 1u

PP_API const char* pp_version(void);
PP_API const char* pp_status_string(pp_status status);
PP_API const char* pp_last_error(void);
PP_API const char* pp_degeneracy_string(pp_degeneracy degeneracy);

/* Purification scheme */
PP_API pp_status pp_run_scheme(pp_input in1, pp_input in2, int cutoff, pp_scheme_report* out);
PP_API pp_status pp_solve_cancellation(pp_input in1, pp_input in2, pp_beamsplitter* out,
                                       int* degenerate);
PP_API pp_status pp_success_curve_new(double p, double* out);
PP_API pp_status pp_success_curve_old(double p, double* out);

/* Fock states */
PP_API pp_status pp_state_from_input(pp_input in, int cutoff, pp_state** out);
PP_API pp_status pp_state_basis(const int* counts, int modes, int cutoff, pp_state** out);
PP_API void pp_state_free(pp_state* state);
PP_API int pp_state_modes(const pp_state* state);
PP_API size_t pp_state_size(const pp_state* state);
/* i-th stored basis element in lexicographic order; counts must hold modes ints. */
PP_API pp_status pp_state_entry(const pp_state* state, size_t i, int* counts, double* re, double* im);
PP_API pp_status pp_state_amplitude(const pp_state* state, const int* counts, double* re,
                                    double* im);
PP_API pp_status pp_state_tensor(const pp_state* a, const pp_state* b, pp_state** out);
PP_API pp_status pp_state_apply_beamsplitter(const pp_state* state, pp_beamsplitter bs, int mode_a,
                                             int mode_b, pp_state** out);
/* Apply a dim x dim row-major matrix given as separate real/imag arrays. */
PP_API pp_status pp_state_apply_unitary(const pp_state* state, const double* re, const double* im,
                                        int dim, pp_state** out);
/* Post-selects on counts[i] photons in modes[i]. An impossible outcome returns
 * PP_OK with *probability == 0 and *out == NULL. */
PP_API pp_status pp_state_condition(const pp_state* state, const int* modes, const int* counts,
                                    size_t n, double* probability, pp_state** out);
PP_API pp_status pp_state_fidelity(const pp_state* a, const pp_state* b, double* out);

/* Parameter sweeps */
PP_API pp_status pp_sweep_run(const pp_sweep_spec* spec, pp_sweep** out);
PP_API size_t pp_sweep_size(const pp_sweep* sweep);
PP_API pp_status pp_sweep_row(const pp_sweep* sweep, size_t i, pp_scheme_report* out);
PP_API void pp_sweep_free(pp_sweep* sweep);

/* Invariant checks */
PP_API pp_status pp_verify_run(uint64_t seed, int trials, unsigned faults, pp_verify_report** out);
PP_API size_t pp_verify_count(const pp_verify_report* report);
PP_API pp_status pp_verify_check(const pp_verify_report* report, size_t i, const char** name,
                                 int* passed, const char** detail);
PP_API int pp_verify_all_passed(const pp_verify_report* report);
PP_API void pp_verify_free(pp_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PHOTON_PURIFY_H */
