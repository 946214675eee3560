/* Copyright (c) 2026, The specgap Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 the "License";
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
 * C interface of libspecgap.
 *
 * Every fallible call returns a specgap_status. On failure the message is
 * available from specgap_last_error() on the calling thread until the next
 * failing call. Handles are opaque and owned by the caller; release them
 * with the matching *_free function. Strings returned through char** are
 * released with specgap_string_free.
 */

#ifndef SPECGAP_SPECGAP_H
#define SPECGAP_SPECGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPECGAP_BUILDING_LIBRARY)
#    define SPECGAP_API __declspec(dllexport)
#  else
#    define SPECGAP_API __declspec(dllimport)
#  endif
#else
#  define SPECGAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum specgap_status {
    SPECGAP_OK = 0,
    SPECGAP_ERR_INVALID_ARGUMENT = 1,
    SPECGAP_ERR_DOMAIN = 2,
    SPECGAP_ERR_COERCIVITY = 3,
    SPECGAP_ERR_BRACKET = 4,
    SPECGAP_ERR_CONVERGENCE = 5,
    SPECGAP_ERR_STAGNATION = 6,
    SPECGAP_ERR_PARSE = 7,
    SPECGAP_ERR_IO = 8,
    SPECGAP_ERR_FIT = 9,
    SPECGAP_ERR_SAMPLE_FAILED = 10,
    SPECGAP_ERR_INTERNAL = 99
} specgap_status;

typedef struct specgap_config specgap_config;
typedef struct specgap_survey specgap_survey;

typedef struct specgap_level {
    int m;
    uint64_t n;
    double delta;
    uint64_t argmin_index;
    double diff;
} specgap_level;

typedef struct specgap_fit {
    double alpha;
    double beta;
    double residual_ss;
    int used;
    int filtered;
} specgap_fit;

SPECGAP_API const char *specgap_version(void);
SPECGAP_API const char *specgap_status_string(specgap_status status);
/* Message of the last failure on this thread ("" if none). */
SPECGAP_API const char *specgap_last_error(void);
SPECGAP_API void specgap_string_free(char *str);

/* ---- configuration ---------------------------------------------------- */

SPECGAP_API specgap_status specgap_config_load(const char *path, specgap_config **out);
/* base_dir resolves a relative qmc.genvec; may be NULL. */
SPECGAP_API specgap_status specgap_config_parse(const char *json, const char *base_dir,
                                                specgap_config **out);
SPECGAP_API void specgap_config_free(specgap_config *config);

/* Overrides, applied on top of the loaded file (command-line flags). */
SPECGAP_API specgap_status specgap_config_set_seed(specgap_config *config, uint64_t seed);
SPECGAP_API specgap_status specgap_config_set_genvec(specgap_config *config, const char *path);
SPECGAP_API specgap_status specgap_config_set_m_max(specgap_config *config, int m_max);
SPECGAP_API specgap_status specgap_config_set_shift(specgap_config *config, int enabled);
SPECGAP_API specgap_status specgap_config_set_workers(specgap_config *config, int workers);
SPECGAP_API specgap_status specgap_config_set_residual_audit(specgap_config *config, int enabled);
/* path NULL clears the output. */
SPECGAP_API specgap_status specgap_config_set_dump_gaps(specgap_config *config, const char *path);
SPECGAP_API specgap_status specgap_config_set_levels_csv(specgap_config *config, const char *path);
SPECGAP_API specgap_status specgap_config_set_report_json(specgap_config *config, const char *path);
SPECGAP_API specgap_status specgap_config_set_svg(specgap_config *config, const char *path);

/* 16 hex digits identifying the semantic configuration. */
SPECGAP_API specgap_status specgap_config_hash(const specgap_config *config, char **out);

/* ---- survey ----------------------------------------------------------- */

/* Runs the survey. A strict-policy sample failure returns
 * SPECGAP_ERR_SAMPLE_FAILED and leaves *out NULL. */
SPECGAP_API specgap_status specgap_survey_run(const specgap_config *config, specgap_survey **out);
SPECGAP_API void specgap_survey_free(specgap_survey *survey);

SPECGAP_API size_t specgap_survey_level_count(const specgap_survey *survey);
SPECGAP_API specgap_status specgap_survey_level(const specgap_survey *survey, size_t i,
                                                specgap_level *out);
/* *has_fit is 0 when fewer than two positive diffs were available. */
SPECGAP_API specgap_status specgap_survey_fit(const specgap_survey *survey, int *has_fit,
                                              specgap_fit *out);
SPECGAP_API uint64_t specgap_survey_failed_count(const specgap_survey *survey);
SPECGAP_API uint64_t specgap_survey_clustered_count(const specgap_survey *survey);
SPECGAP_API specgap_status specgap_survey_audit(const specgap_survey *survey, uint64_t *audited,
                                                double *max_residual);
/* Writes every output configured in `config` (levels CSV, samples CSV,
 * SVG, report JSON). */
SPECGAP_API specgap_status specgap_survey_write_outputs(const specgap_survey *survey,
                                                        const specgap_config *config);
SPECGAP_API specgap_status specgap_survey_levels_csv(const specgap_survey *survey, char **out);

/* ---- other commands ---------------------------------------------------- */

SPECGAP_API specgap_status specgap_theory_report(const specgap_config *config, char **out_json);
SPECGAP_API specgap_status specgap_points_csv(const specgap_config *config, uint64_t count,
                                              char **out_csv);
SPECGAP_API specgap_status specgap_fit_levels_csv(const char *path, specgap_fit *out);

/* ---- numerical kernels ------------------------------------------------- */

SPECGAP_API specgap_status specgap_inverse_normal_cdf(double u, double *out);
SPECGAP_API specgap_status specgap_discrete_laplacian_eigenvalue(int cells, int k, double *out);
/* k smallest eigenvalues of the tridiagonal pencil (A, M); n diagonal and
 * n-1 off-diagonal entries each. The bracket [lo, hi] must hold the bottom
 * of the spectrum. */
SPECGAP_API specgap_status specgap_tridiagonal_eigenvalues(size_t n, const double *a_diag,
                                                           const double *a_off, const double *m_diag,
                                                           const double *m_off, int k, double lo,
                                                           double hi, double *values_out);
SPECGAP_API specgap_status specgap_power_law_fit(size_t count, const double *n, const double *d,
                                                 specgap_fit *out);

#ifdef __cplusplus
}
#endif

#endif /* SPECGAP_SPECGAP_H */
