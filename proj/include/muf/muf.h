/* Copyright 2026 The MUF Authors
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

/* C interface to libmuf. Every fallible call returns a muf_status; on a
 * nonzero status the message is available from muf_last_error() on the same
 * thread until the next call. Handles are owned by the caller and released
 * with the matching *_free function. */

#ifndef MUF_MUF_H_
#define MUF_MUF_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MUF_BUILDING_LIBRARY)
#define MUF_API __attribute__((visibility("default")))
#else
#define MUF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum muf_status {
  MUF_OK = 0,
  MUF_ERR_INVALID_ARGUMENT = 1,
  MUF_ERR_DIMENSION = 2,
  MUF_ERR_RANGE = 3,
  MUF_ERR_NORMALIZATION = 4,
  MUF_ERR_PARSE = 5,
  MUF_ERR_IO = 6,
  MUF_ERR_PRECONDITION = 7,
  MUF_ERR_GENERATION = 8,
  MUF_ERR_UNSUPPORTED_WEIGHTS = 9,
  MUF_ERR_NOT_A_SOLUTION = 10,
  MUF_ERR_INTERNAL = 99
} muf_status;

typedef enum muf_ansatz { MUF_ANSATZ_GENERAL = 0, MUF_ANSATZ_COVARIANT = 1 } muf_ansatz;

typedef enum muf_pair_kind {
  MUF_PAIR_FOURIER = 0,
  MUF_PAIR_PRODUCT = 1,
  MUF_PAIR_EVADING = 2
} muf_pair_kind;

typedef enum muf_format { MUF_FORMAT_TEXT = 0, MUF_FORMAT_JSON = 1 } muf_format;

typedef struct muf_pair muf_pair_t;
typedef struct muf_report muf_report_t;

typedef struct muf_search_config {
  int d;
  double t;
  muf_ansatz ansatz;
  int restarts;
  uint64_t master_seed;
  int max_iterations;
  double success_tolerance;
  double stationarity_tolerance;
  int threads; /* 0: MUF_THREADS or hardware concurrency */
  int polish;
} muf_search_config;

MUF_API const char* muf_version(void);
MUF_API const char* muf_last_error(void);
MUF_API const char* muf_status_name(muf_status s);

/* Fills cfg with library defaults. */
MUF_API void muf_search_config_init(muf_search_config* cfg);
MUF_API muf_status muf_parse_ansatz(const char* name, muf_ansatz* out);
MUF_API muf_status muf_parse_pair_kind(const char* name, muf_pair_kind* out);

/* Pairs. Vectors are exchanged as interleaved (re, im) doubles. */
MUF_API muf_status muf_pair_load(const char* path, muf_pair_t** out);
MUF_API muf_status muf_pair_save(const muf_pair_t* p, const char* path);
MUF_API muf_status muf_pair_reference(muf_pair_kind kind, int d, uint64_t seed,
                                      muf_pair_t** out);
MUF_API void muf_pair_free(muf_pair_t* p);
MUF_API int muf_pair_dimension(const muf_pair_t* p);
MUF_API size_t muf_pair_size(const muf_pair_t* p);
MUF_API double muf_pair_t_value(const muf_pair_t* p);
/* which: 0 for x, 1 for y. buf receives 2*d doubles. */
MUF_API muf_status muf_pair_get_vector(const muf_pair_t* p, int which, size_t index,
                                       double* buf, size_t buf_len);
MUF_API muf_status muf_pair_residual(const muf_pair_t* p, double* out);

/* Commands. Each produces a report whose exit code follows the CLI
 * contract: 0 verified/found/informational, 2 failed/not found. Errors are
 * returned as a status and no report is created. */
MUF_API muf_status muf_verify(const char* path, const double* t_override,
                              double residual_tol, double conclusion_tol,
                              muf_report_t** out);
MUF_API muf_status muf_search(const muf_search_config* cfg, const char* output,
                              muf_report_t** out);
MUF_API muf_status muf_sic(const muf_search_config* cfg, const char* output,
                           muf_report_t** out);
MUF_API muf_status muf_sweep(const muf_search_config* cfg, double t_end, int steps,
                             const char* output, muf_report_t** out);
MUF_API muf_status muf_twirl_check(int d, int trials, uint64_t seed,
                                   muf_report_t** out);
MUF_API muf_status muf_obstruction(int d, muf_pair_kind kind, uint64_t seed,
                                   muf_report_t** out);
MUF_API muf_status muf_example(int d, muf_pair_kind kind, uint64_t seed,
                               const char* output, muf_report_t** out);

/* Reports. */
MUF_API int muf_report_exit_code(const muf_report_t* r);
MUF_API const char* muf_report_verdict(const muf_report_t* r);
MUF_API muf_status muf_report_set_command(muf_report_t* r, const char* echo);
/* Looks up a number by dotted path into the result section, e.g.
 * "best_loss" or "theorem1.weights_dev". */
MUF_API muf_status muf_report_get_number(const muf_report_t* r, const char* path,
                                         double* out);
/* Writes the rendering into buf (NUL terminated) when it fits and stores the
 * required size including the terminator in needed. include_runtime = 0
 * omits wall time and thread count. */
MUF_API muf_status muf_report_render(const muf_report_t* r, muf_format fmt,
                                     int include_runtime, char* buf, size_t buf_len,
                                     size_t* needed);
MUF_API void muf_report_free(muf_report_t* r);

#ifdef __cplusplus
}
#endif

#endif /* MUF_MUF_H_ */
