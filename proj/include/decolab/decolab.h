/*
 * Copyright 2026 The decoherence-lab Authors
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
 * C interface to decoherence-lab.
 *
 * All functions return a dl_status. On failure a message is available from
 * dl_last_error() on the calling thread until the next failing call. Objects
 * are opaque and owned by the caller once returned; release them with the
 * matching *_free function. Passing NULL to a *_free function is a no-op.
 */

#ifndef DECOLAB_DECOLAB_H_
#define DECOLAB_DECOLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DECOLAB_BUILDING)
#define DL_API __declspec(dllexport)
#else
#define DL_API __declspec(dllimport)
#endif
#else
#define DL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int dl_status;

enum {
  DL_OK = 0,
  DL_ERR_EMPTY_INPUT = 1,
  DL_ERR_ZERO_VECTOR = 2,
  DL_ERR_DIMENSION_MISMATCH = 3,
  DL_ERR_NON_HERMITIAN = 4,
  DL_ERR_NON_UNITARY = 5,
  DL_ERR_NOT_NORMALIZED = 6,
  DL_ERR_INVALID_ARGUMENT = 7,
  DL_ERR_INVALID_GRID = 8,
  DL_ERR_PACKET_OUTSIDE_GRID = 9,
  DL_ERR_DERIVATIVE_UNDEFINED = 10,
  DL_ERR_EMPTY_TIMES = 11,
  DL_ERR_INDEX_OUT_OF_RANGE = 12,
  DL_ERR_NONLINEAR_POTENTIAL = 13,
  DL_ERR_MISSING_ENVIRONMENT = 14,
  DL_ERR_TOO_MANY_PARTICLES = 15,
  DL_ERR_NON_COMMUTING = 16,
  DL_ERR_DEGENERATE_SPECTRUM = 17,
  DL_ERR_CONDITION_VIOLATED = 18,
  DL_ERR_NON_POSITIVE_INPUT = 19,
  DL_ERR_TMAX_BEFORE_CRITICAL = 20,
  DL_ERR_UNKNOWN_KEY = 21,
  DL_ERR_TYPE_MISMATCH = 22,
  DL_ERR_MISSING_REQUIRED = 23,
  DL_ERR_IO = 24,
  DL_ERR_INTERNAL = 25,
  DL_ERR_USAGE = 26,
  /* Not a failure: the usage text is in dl_last_error(). */
  DL_HELP_REQUESTED = 27
};

typedef struct dl_config dl_config;
typedef struct dl_result dl_result;
typedef struct dl_state dl_state;

DL_API const char* dl_version(void);

/* Message for the last failure on this thread; "" if none. */
DL_API const char* dl_last_error(void);

/* Process exit code for a status: 0 success or help, 2 usage errors
 * (unknown key, type mismatch, missing key, malformed command line),
 * 1 everything else. */
DL_API int dl_exit_code(dl_status status);

/* Command line: argv[0] is the program name. */
DL_API dl_status dl_config_parse(int argc, const char* const* argv, dl_config** out);
DL_API void dl_config_free(dl_config* config);

DL_API dl_status dl_run(const dl_config* config, dl_result** out);
DL_API void dl_result_free(dl_result* result);

/* Writes summary.json and the selected CSV / JSON files to the configured
 * output directory. */
DL_API dl_status dl_result_emit(const dl_result* result, const dl_config* config);

/* Summary document as a NUL-terminated string; free with dl_string_free. */
DL_API dl_status dl_result_summary_json(const dl_result* result, char** out);
DL_API void dl_string_free(char* s);

/* Scalar physics. paper_constants != 0 selects the round constants table. */
DL_API dl_status dl_sg_critical_time(double delta_z, double mass, double mu_b, double beta_z,
                                     double* out_seconds);
DL_API dl_status dl_thermal_de_broglie(double mass, double temperature, int paper_constants,
                                       double* out_meters);
DL_API dl_status dl_bose_critical_temperature(double mass, double spacing, int paper_constants,
                                              double* out_kelvin);

/* State vectors. dl_state_new normalizes the given amplitudes; im may be
 * NULL for real input. */
DL_API dl_status dl_state_new(const double* re, const double* im, size_t dim, dl_state** out);
DL_API void dl_state_free(dl_state* state);
DL_API size_t dl_state_dim(const dl_state* state);
DL_API dl_status dl_state_amplitudes(const dl_state* state, double* re, double* im, size_t capacity);

/* exp(i eps |psi><psi|) applied to chi. */
DL_API dl_status dl_apply_w(const dl_state* psi, const dl_state* chi, double eps, dl_state** out);
/* sum_n c_n exp(i eps |c_n|^2) |n>. */
DL_API dl_status dl_approx_w(const dl_state* psi, double eps, dl_state** out);
DL_API dl_status dl_decoherence_phase_spread(const dl_state* psi, double eps, double* out);
DL_API dl_status dl_sample_collapse(const dl_state* psi, uint64_t seed, size_t* out_branch,
                                    double* out_prior);
DL_API uint64_t dl_split_seed(uint64_t base, uint64_t index);

#ifdef __cplusplus
}
#endif

#endif /* DECOLAB_DECOLAB_H_ */
