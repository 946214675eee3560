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

/* Exercises libspecgap through its C header only, compiled as C. */

#include "specgap/specgap.h"

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                                  \
    do {                                                                             \
        if (!(cond)) {                                                               \
            fprintf(stderr, "%s:%d: CHECK failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                              \
        }                                                                            \
    } while (0)

#define CHECK_OK(call)                                                                    \
    do {                                                                                  \
        specgap_status st_ = (call);                                                      \
        if (st_ != SPECGAP_OK) {                                                          \
            fprintf(stderr, "%s:%d: %s returned %s: %s\n", __FILE__, __LINE__, #call,     \
                    specgap_status_string(st_), specgap_last_error());                    \
            ++failures;                                                                   \
        }                                                                                 \
    } while (0)

static void test_kernels(void) {
    double v = 0.0;
    CHECK_OK(specgap_inverse_normal_cdf(0.975, &v));
    CHECK(fabs(v - 1.95996398454005424) < 1e-12);
    CHECK(specgap_inverse_normal_cdf(1.0, &v) == SPECGAP_ERR_DOMAIN);
    CHECK(strlen(specgap_last_error()) > 0);

    CHECK_OK(specgap_discrete_laplacian_eigenvalue(64, 1, &v));
    CHECK(fabs(v - 9.87158635325673231) < 1e-12);
    CHECK(specgap_discrete_laplacian_eigenvalue(64, 0, &v) == SPECGAP_ERR_INVALID_ARGUMENT);
    CHECK(specgap_discrete_laplacian_eigenvalue(1, 1, &v) == SPECGAP_ERR_INVALID_ARGUMENT);

    {
        const double ad[3] = {2, 2, 2}, ao[2] = {-1, -1}, md[3] = {1, 1, 1}, mo[2] = {0, 0};
        double out[2];
        CHECK_OK(specgap_tridiagonal_eigenvalues(3, ad, ao, md, mo, 2, -1.0, 5.0, out));
        CHECK(fabs(out[0] - (2.0 - sqrt(2.0))) < 1e-12);
        CHECK(fabs(out[1] - 2.0) < 1e-12);
        CHECK(specgap_tridiagonal_eigenvalues(3, ad, ao, md, mo, 2, 0.7, 5.0, out) == SPECGAP_ERR_BRACKET);
        CHECK(specgap_tridiagonal_eigenvalues(0, ad, ao, md, mo, 1, 0.0, 5.0, out) ==
              SPECGAP_ERR_INVALID_ARGUMENT);
    }
    {
        const double ad[1] = {3}, md[1] = {2};
        double out[1];
        CHECK_OK(specgap_tridiagonal_eigenvalues(1, ad, NULL, md, NULL, 1, 0.0, 5.0, out));
        CHECK(fabs(out[0] - 1.5) < 1e-12);
    }
    {
        const double n[3] = {2, 4, 8};
        double d[3];
        specgap_fit fit;
        for (int i = 0; i < 3; ++i)
            d[i] = 3.0 * pow(n[i], -0.5);
        CHECK_OK(specgap_power_law_fit(3, n, d, &fit));
        CHECK(fabs(fit.alpha - 3.0) < 1e-10);
        CHECK(fabs(fit.beta - 0.5) < 1e-10);
        CHECK(fit.used == 3);
        CHECK(specgap_power_law_fit(1, n, d, &fit) == SPECGAP_ERR_FIT);
    }
}

static void test_config(void) {
    specgap_config *cfg = NULL;
    char *hash = NULL, *hash2 = NULL;

    CHECK(specgap_config_parse("{\"mesh\": {\"n\": 1}}", NULL, &cfg) == SPECGAP_ERR_PARSE);
    CHECK(cfg == NULL);
    CHECK(strstr(specgap_last_error(), "mesh.n") != NULL);
    CHECK(specgap_config_parse("{\"bogus\": 1}", NULL, &cfg) == SPECGAP_ERR_PARSE);
    CHECK(specgap_config_load("/no/such/config.json", &cfg) == SPECGAP_ERR_IO);
    CHECK(specgap_config_parse(NULL, NULL, &cfg) == SPECGAP_ERR_INVALID_ARGUMENT);

    CHECK_OK(specgap_config_parse("{\"coefficient\": {\"c0\": 1, \"s\": 10}, \"qmc\": {\"m_max\": 4}}", NULL, &cfg));
    CHECK_OK(specgap_config_hash(cfg, &hash));
    CHECK(hash != NULL && strlen(hash) == 16);
    CHECK_OK(specgap_config_set_seed(cfg, 99));
    CHECK_OK(specgap_config_hash(cfg, &hash2));
    CHECK(strcmp(hash, hash2) != 0);

    /* rejected overrides leave the handle untouched */
    CHECK(specgap_config_set_m_max(cfg, 40) == SPECGAP_ERR_INVALID_ARGUMENT);
    CHECK(specgap_config_set_workers(cfg, 0) == SPECGAP_ERR_INVALID_ARGUMENT);
    specgap_string_free(hash);
    CHECK_OK(specgap_config_hash(cfg, &hash));
    CHECK(strcmp(hash, hash2) == 0);

    specgap_string_free(hash);
    specgap_string_free(hash2);
    specgap_config_free(cfg);
    specgap_config_free(NULL);
}

static void test_points(void) {
    specgap_config *cfg = NULL;
    char *csv = NULL;
    CHECK_OK(specgap_config_parse("{\"coefficient\": {\"s\": 2}, \"qmc\": {\"m_max\": 3}}", NULL, &cfg));
    CHECK_OK(specgap_config_set_shift(cfg, 0));
    CHECK_OK(specgap_points_csv(cfg, 2, &csv));
    CHECK(csv != NULL && strstr(csv, "index,y1,y2\n0,-0.5,-0.5\n1,0,0\n") != NULL);
    specgap_string_free(csv);
    CHECK(specgap_points_csv(cfg, 9, &csv) == SPECGAP_ERR_INVALID_ARGUMENT);
    specgap_config_free(cfg);
}

static void test_survey(void) {
    specgap_config *cfg = NULL;
    specgap_survey *survey = NULL;
    specgap_level level;
    specgap_fit fit;
    int has_fit = -1;
    char *csv1 = NULL, *csv2 = NULL, *report = NULL;

    CHECK_OK(specgap_config_parse("{\"coefficient\": {\"c0\": 1, \"s\": 20}, \"mesh\": {\"n\": 16},"
                                  " \"qmc\": {\"m_max\": 8, \"seed\": 2}}",
                                  NULL, &cfg));
    CHECK_OK(specgap_survey_run(cfg, &survey));
    CHECK(specgap_survey_level_count(survey) == 9);
    CHECK_OK(specgap_survey_level(survey, 8, &level));
    CHECK(level.m == 8 && level.n == 256 && level.diff == 0.0 && level.delta > 0.0);
    CHECK(specgap_survey_level(survey, 9, &level) == SPECGAP_ERR_INVALID_ARGUMENT);
    CHECK_OK(specgap_survey_fit(survey, &has_fit, &fit));
    CHECK(has_fit == 1 || has_fit == 0);
    CHECK(specgap_survey_failed_count(survey) == 0);
    CHECK_OK(specgap_survey_levels_csv(survey, &csv1));
    specgap_survey_free(survey);

    CHECK_OK(specgap_config_set_workers(cfg, 4));
    CHECK_OK(specgap_survey_run(cfg, &survey));
    CHECK_OK(specgap_survey_levels_csv(survey, &csv2));
    CHECK(csv1 && csv2 && strcmp(csv1, csv2) == 0);
    specgap_survey_free(survey);
    specgap_string_free(csv1);
    specgap_string_free(csv2);

    CHECK_OK(specgap_theory_report(cfg, &report));
    CHECK(report && strstr(report, "\"condition_holds\": false") != NULL);
    specgap_string_free(report);
    specgap_config_free(cfg);

    /* m_max = 0: one level, no fit */
    CHECK_OK(specgap_config_parse("{\"coefficient\": {\"s\": 5}, \"mesh\": {\"n\": 8}, \"qmc\": {\"m_max\": 0}}",
                                  NULL, &cfg));
    CHECK_OK(specgap_survey_run(cfg, &survey));
    CHECK(specgap_survey_level_count(survey) == 1);
    CHECK_OK(specgap_survey_fit(survey, &has_fit, &fit));
    CHECK(has_fit == 0);
    CHECK(strlen(specgap_last_error()) > 0);
    specgap_survey_free(survey);
    specgap_config_free(cfg);

    /* strict policy failure: unshifted log-normal lattice starts on the boundary */
    CHECK_OK(specgap_config_parse("{\"coefficient\": {\"family\": \"lognormal\", \"s\": 3},"
                                  " \"mesh\": {\"n\": 8}, \"qmc\": {\"m_max\": 2, \"shift\": false},"
                                  " \"survey\": {\"fail_policy\": \"strict\"}}",
                                  NULL, &cfg));
    survey = (specgap_survey *)1;
    CHECK(specgap_survey_run(cfg, &survey) == SPECGAP_ERR_SAMPLE_FAILED);
    CHECK(survey == NULL);
    specgap_config_free(cfg);
}

int main(void) {
    CHECK(strcmp(specgap_version(), "1.0.0") == 0);
    CHECK(strcmp(specgap_status_string(SPECGAP_OK), "ok") == 0);
    test_kernels();
    test_config();
    test_points();
    test_survey();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("all C API checks passed\n");
    return 0;
}
