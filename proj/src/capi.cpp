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

#include "specgap/specgap.h"

#include "specgap/coefficient.hpp"
#include "specgap/config.hpp"
#include "specgap/eigensolve.hpp"
#include "specgap/error.hpp"
#include "specgap/fit.hpp"
#include "specgap/survey.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

struct specgap_config {
    specgap::SurveyConfig config;
};

struct specgap_survey {
    specgap::SurveyResult result;
};

namespace {

thread_local std::string last_error;

specgap_status to_status(specgap::ErrorCode code) {
    using specgap::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return SPECGAP_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return SPECGAP_ERR_DOMAIN;
    case ErrorCode::Coercivity: return SPECGAP_ERR_COERCIVITY;
    case ErrorCode::Bracket: return SPECGAP_ERR_BRACKET;
    case ErrorCode::Convergence: return SPECGAP_ERR_CONVERGENCE;
    case ErrorCode::Stagnation: return SPECGAP_ERR_STAGNATION;
    case ErrorCode::Parse: return SPECGAP_ERR_PARSE;
    case ErrorCode::Io: return SPECGAP_ERR_IO;
    case ErrorCode::Fit: return SPECGAP_ERR_FIT;
    case ErrorCode::SampleFailed: return SPECGAP_ERR_SAMPLE_FAILED;
    }
    return SPECGAP_ERR_INTERNAL;
}

template <typename F>
specgap_status guarded(F &&body) noexcept {
    try {
        body();
        return SPECGAP_OK;
    } catch (const specgap::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return SPECGAP_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return SPECGAP_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SPECGAP_ERR_INTERNAL;
    }
}

void require(const void *p, const char *what) {
    if (!p)
        throw specgap::InvalidArgument(std::string(what) + " must not be NULL");
}

char *duplicate(const std::string &s) {
    auto *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::optional<std::string> optional_path(const char *path) {
    return path ? std::optional<std::string>(path) : std::nullopt;
}

specgap_fit to_c(const specgap::PowerLawFit &f) {
    return {f.alpha, f.beta, f.residual_ss, f.used, f.filtered};
}

template <typename F>
specgap_status mutate(specgap_config *config, F &&change) noexcept {
    return guarded([&] {
        require(config, "config");
        auto updated = config->config;
        change(updated);
        updated.validate();
        config->config = std::move(updated);
    });
}

} // namespace

extern "C" {

const char *specgap_version(void) { return "1.0.0"; }

const char *specgap_status_string(specgap_status status) {
    switch (status) {
    case SPECGAP_OK: return "ok";
    case SPECGAP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SPECGAP_ERR_DOMAIN: return "domain error";
    case SPECGAP_ERR_COERCIVITY: return "coercivity error";
    case SPECGAP_ERR_BRACKET: return "bracket error";
    case SPECGAP_ERR_CONVERGENCE: return "convergence error";
    case SPECGAP_ERR_STAGNATION: return "stagnation";
    case SPECGAP_ERR_PARSE: return "parse error";
    case SPECGAP_ERR_IO: return "I/O error";
    case SPECGAP_ERR_FIT: return "fit error";
    case SPECGAP_ERR_SAMPLE_FAILED: return "sample failed";
    case SPECGAP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *specgap_last_error(void) { return last_error.c_str(); }

void specgap_string_free(char *str) { std::free(str); }

specgap_status specgap_config_load(const char *path, specgap_config **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = nullptr;
        *out = new specgap_config{specgap::load_config(path)};
    });
}

specgap_status specgap_config_parse(const char *json, const char *base_dir, specgap_config **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = nullptr;
        *out = new specgap_config{specgap::parse_config_text(json, base_dir ? base_dir : "")};
    });
}

void specgap_config_free(specgap_config *config) { delete config; }

specgap_status specgap_config_set_seed(specgap_config *config, uint64_t seed) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.qmc.seed = seed; });
}

specgap_status specgap_config_set_genvec(specgap_config *config, const char *path) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.qmc.genvec = optional_path(path); });
}

specgap_status specgap_config_set_m_max(specgap_config *config, int m_max) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.qmc.m_max = m_max; });
}

specgap_status specgap_config_set_shift(specgap_config *config, int enabled) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.qmc.shift = enabled != 0; });
}

specgap_status specgap_config_set_workers(specgap_config *config, int workers) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.workers = workers; });
}

specgap_status specgap_config_set_residual_audit(specgap_config *config, int enabled) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.solver.residual_audit = enabled != 0; });
}

specgap_status specgap_config_set_dump_gaps(specgap_config *config, const char *path) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.survey.dump_gaps = optional_path(path); });
}

specgap_status specgap_config_set_levels_csv(specgap_config *config, const char *path) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.output.levels_csv = optional_path(path); });
}

specgap_status specgap_config_set_report_json(specgap_config *config, const char *path) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.output.report_json = optional_path(path); });
}

specgap_status specgap_config_set_svg(specgap_config *config, const char *path) {
    return mutate(config, [&](specgap::SurveyConfig &c) { c.output.svg = optional_path(path); });
}

specgap_status specgap_config_hash(const specgap_config *config, char **out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = duplicate(config->config.hash());
    });
}

specgap_status specgap_survey_run(const specgap_config *config, specgap_survey **out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = nullptr;
        *out = new specgap_survey{specgap::run_configured_survey(config->config)};
    });
}

void specgap_survey_free(specgap_survey *survey) { delete survey; }

size_t specgap_survey_level_count(const specgap_survey *survey) {
    return survey ? survey->result.levels.size() : 0;
}

specgap_status specgap_survey_level(const specgap_survey *survey, size_t i, specgap_level *out) {
    return guarded([&] {
        require(survey, "survey");
        require(out, "out");
        if (i >= survey->result.levels.size())
            throw specgap::InvalidArgument("level index " + std::to_string(i) + " out of range");
        const auto &l = survey->result.levels[i];
        *out = {l.m, l.n, l.delta, l.argmin, l.diff};
    });
}

specgap_status specgap_survey_fit(const specgap_survey *survey, int *has_fit, specgap_fit *out) {
    return guarded([&] {
        require(survey, "survey");
        require(has_fit, "has_fit");
        require(out, "out");
        *has_fit = survey->result.fit.has_value() ? 1 : 0;
        *out = survey->result.fit ? to_c(*survey->result.fit) : specgap_fit{0, 0, 0, 0, 0};
        if (!*has_fit)
            last_error = survey->result.fit_note;
    });
}

uint64_t specgap_survey_failed_count(const specgap_survey *survey) {
    return survey ? survey->result.failed : 0;
}

uint64_t specgap_survey_clustered_count(const specgap_survey *survey) {
    return survey ? survey->result.clustered : 0;
}

specgap_status specgap_survey_audit(const specgap_survey *survey, uint64_t *audited, double *max_residual) {
    return guarded([&] {
        require(survey, "survey");
        require(audited, "audited");
        require(max_residual, "max_residual");
        *audited = survey->result.audited;
        *max_residual = survey->result.max_audit_residual;
    });
}

specgap_status specgap_survey_write_outputs(const specgap_survey *survey, const specgap_config *config) {
    return guarded([&] {
        require(survey, "survey");
        require(config, "config");
        specgap::write_survey_outputs(config->config, survey->result);
    });
}

specgap_status specgap_survey_levels_csv(const specgap_survey *survey, char **out) {
    return guarded([&] {
        require(survey, "survey");
        require(out, "out");
        *out = duplicate(specgap::levels_csv(survey->result.levels, survey->result.provenance));
    });
}

specgap_status specgap_theory_report(const specgap_config *config, char **out_json) {
    return guarded([&] {
        require(config, "config");
        require(out_json, "out_json");
        *out_json = duplicate(specgap::configured_theory_report(config->config).dump(2));
    });
}

specgap_status specgap_points_csv(const specgap_config *config, uint64_t count, char **out_csv) {
    return guarded([&] {
        require(config, "config");
        require(out_csv, "out_csv");
        *out_csv = duplicate(specgap::points_csv(config->config, count));
    });
}

specgap_status specgap_fit_levels_csv(const char *path, specgap_fit *out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = to_c(specgap::fit_levels(specgap::read_levels_csv(path)));
    });
}

specgap_status specgap_inverse_normal_cdf(double u, double *out) {
    return guarded([&] {
        require(out, "out");
        *out = specgap::inverse_normal_cdf(u);
    });
}

specgap_status specgap_discrete_laplacian_eigenvalue(int cells, int k, double *out) {
    return guarded([&] {
        require(out, "out");
        *out = specgap::discrete_laplacian_eigenvalue(specgap::UniformMesh(cells), k);
    });
}

specgap_status specgap_tridiagonal_eigenvalues(size_t n, const double *a_diag, const double *a_off,
                                               const double *m_diag, const double *m_off, int k,
                                               double lo, double hi, double *values_out) {
    return guarded([&] {
        require(a_diag, "a_diag");
        require(m_diag, "m_diag");
        require(values_out, "values_out");
        if (n == 0)
            throw specgap::InvalidArgument("pencil size must be >= 1");
        if (n > 1) {
            require(a_off, "a_off");
            require(m_off, "m_off");
        }
        std::vector<double> ao, mo;
        if (n > 1) {
            ao.assign(a_off, a_off + (n - 1));
            mo.assign(m_off, m_off + (n - 1));
        }
        specgap::TridiagonalSymmetric a(std::vector<double>(a_diag, a_diag + n), std::move(ao));
        specgap::TridiagonalSymmetric m(std::vector<double>(m_diag, m_diag + n), std::move(mo));
        const auto result = specgap::smallest_eigenvalues(a, m, k, {lo, hi});
        std::copy(result.values.begin(), result.values.end(), values_out);
    });
}

specgap_status specgap_power_law_fit(size_t count, const double *n, const double *d, specgap_fit *out) {
    return guarded([&] {
        require(out, "out");
        if (count > 0) {
            require(n, "n");
            require(d, "d");
        }
        std::vector<specgap::FitPoint> points;
        for (size_t i = 0; i < count; ++i)
            points.push_back({n[i], d[i]});
        *out = to_c(specgap::power_law_fit(points));
    });
}

} // extern "C"
