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

// specgap: spectral-gap surveys over QMC parameter realisations.
//
//   specgap survey --config cfg.json [--seed N] [--genvec PATH] [--workers N]
//                  [--no-shift] [--dump-gaps PATH] [--m-max M] [--levels-csv PATH]
//                  [--svg PATH] [--report-json PATH] [--residual-audit]
//   specgap theory --config cfg.json [--out PATH]
//   specgap points --config cfg.json --count N [--no-shift] [--seed N] [--genvec PATH] [--out PATH]
//   specgap fit LEVELS_CSV
//
// Exit codes: 0 success, 1 runtime failure, 2 bad configuration or input,
// 3 sample failure under the strict policy.

#include "specgap/specgap.h"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <string>

namespace {

struct ConfigDeleter {
    void operator()(specgap_config *c) const { specgap_config_free(c); }
};
struct SurveyDeleter {
    void operator()(specgap_survey *s) const { specgap_survey_free(s); }
};
struct StringDeleter {
    void operator()(char *s) const { specgap_string_free(s); }
};

using ConfigPtr = std::unique_ptr<specgap_config, ConfigDeleter>;
using SurveyPtr = std::unique_ptr<specgap_survey, SurveyDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

class Failure {
public:
    explicit Failure(specgap_status status) : status_(status) {}
    specgap_status status() const { return status_; }

private:
    specgap_status status_;
};

void check(specgap_status status) {
    if (status != SPECGAP_OK)
        throw Failure(status);
}

int exit_code(specgap_status status) {
    switch (status) {
    case SPECGAP_OK:
        return 0;
    case SPECGAP_ERR_PARSE:
    case SPECGAP_ERR_INVALID_ARGUMENT:
    case SPECGAP_ERR_FIT:
    case SPECGAP_ERR_IO:
        return 2;
    case SPECGAP_ERR_SAMPLE_FAILED:
        return 3;
    default:
        return 1;
    }
}

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> genvec;
    std::optional<int> workers;
    std::optional<int> m_max;
    bool no_shift = false;
    std::optional<std::string> dump_gaps;
    std::optional<std::string> levels_csv;
    std::optional<std::string> svg;
    std::optional<std::string> report_json;
    bool residual_audit = false;
};

ConfigPtr load(const std::string &path, const Overrides &o) {
    specgap_config *raw = nullptr;
    check(specgap_config_load(path.c_str(), &raw));
    ConfigPtr cfg(raw);
    if (o.seed)
        check(specgap_config_set_seed(cfg.get(), *o.seed));
    if (o.genvec)
        check(specgap_config_set_genvec(cfg.get(), o.genvec->c_str()));
    if (o.m_max)
        check(specgap_config_set_m_max(cfg.get(), *o.m_max));
    if (o.workers)
        check(specgap_config_set_workers(cfg.get(), *o.workers));
    if (o.no_shift)
        check(specgap_config_set_shift(cfg.get(), 0));
    if (o.dump_gaps)
        check(specgap_config_set_dump_gaps(cfg.get(), o.dump_gaps->c_str()));
    if (o.levels_csv)
        check(specgap_config_set_levels_csv(cfg.get(), o.levels_csv->c_str()));
    if (o.svg)
        check(specgap_config_set_svg(cfg.get(), o.svg->c_str()));
    if (o.report_json)
        check(specgap_config_set_report_json(cfg.get(), o.report_json->c_str()));
    if (o.residual_audit)
        check(specgap_config_set_residual_audit(cfg.get(), 1));
    return cfg;
}

void emit(const char *text, const std::string &out_path) {
    if (out_path.empty()) {
        std::fputs(text, stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
        std::fprintf(stderr, "specgap: cannot write '%s'\n", out_path.c_str());
        throw Failure(SPECGAP_ERR_IO);
    }
}

int cmd_survey(const std::string &config_path, const Overrides &o) {
    auto cfg = load(config_path, o);
    specgap_survey *raw = nullptr;
    check(specgap_survey_run(cfg.get(), &raw));
    SurveyPtr survey(raw);
    check(specgap_survey_write_outputs(survey.get(), cfg.get()));

    std::printf("%4s %10s %24s %12s %24s\n", "m", "N", "delta_N", "argmin", "diff");
    const size_t count = specgap_survey_level_count(survey.get());
    specgap_level level{};
    for (size_t i = 0; i < count; ++i) {
        check(specgap_survey_level(survey.get(), i, &level));
        std::printf("%4d %10" PRIu64 " %24.17g %12" PRIu64 " %24.17g\n", level.m, level.n, level.delta,
                    level.argmin_index, level.diff);
    }
    std::printf("delta_N* = %.17g (N* = %" PRIu64 ")\n", level.delta, level.n);

    int has_fit = 0;
    specgap_fit fit{};
    check(specgap_survey_fit(survey.get(), &has_fit, &fit));
    if (has_fit)
        std::printf("fit: alpha = %.17g, beta = %.17g (%d points)\n", fit.alpha, fit.beta, fit.used);
    else
        std::printf("fit: none (%s)\n", specgap_last_error());

    const auto failed = specgap_survey_failed_count(survey.get());
    if (failed > 0)
        std::printf("failed samples: %" PRIu64 " (excluded from the minimum)\n", failed);
    const auto clustered = specgap_survey_clustered_count(survey.get());
    if (clustered > 0)
        std::printf("clustered samples (gap below tolerance): %" PRIu64 "\n", clustered);
    if (o.residual_audit) {
        std::uint64_t audited = 0;
        double residual = 0.0;
        check(specgap_survey_audit(survey.get(), &audited, &residual));
        std::printf("residual audit: %" PRIu64 " samples, max residual %.3g\n", audited, residual);
    }
    return 0;
}

int cmd_theory(const std::string &config_path, const std::string &out_path) {
    auto cfg = load(config_path, {});
    char *raw = nullptr;
    check(specgap_theory_report(cfg.get(), &raw));
    StringPtr json(raw);
    emit(json.get(), out_path);
    if (out_path.empty())
        std::fputc('\n', stdout);
    return 0;
}

int cmd_points(const std::string &config_path, const Overrides &o, std::uint64_t count,
               const std::string &out_path) {
    auto cfg = load(config_path, o);
    char *raw = nullptr;
    check(specgap_points_csv(cfg.get(), count, &raw));
    StringPtr csv(raw);
    emit(csv.get(), out_path);
    return 0;
}

int cmd_fit(const std::string &levels_path) {
    specgap_fit fit{};
    check(specgap_fit_levels_csv(levels_path.c_str(), &fit));
    std::printf("fit: alpha = %.17g, beta = %.17g (%d points, %d filtered)\n", fit.alpha, fit.beta,
                fit.used, fit.filtered);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Spectral-gap survey of a stochastic elliptic eigenvalue problem"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(specgap_version()));

    Overrides survey_o, points_o;
    std::string config_path, out_path, levels_path;
    std::uint64_t count = 0;

    auto *survey = app.add_subcommand("survey", "run a gap survey and write CSV / SVG / JSON outputs");
    survey->add_option("--config", config_path, "JSON configuration file")->required()->check(CLI::ExistingFile);
    survey->add_option("--seed", survey_o.seed, "random shift seed");
    survey->add_option("--genvec", survey_o.genvec, "generating vector file");
    survey->add_option("--workers", survey_o.workers, "worker threads")->check(CLI::PositiveNumber);
    survey->add_option("--m-max", survey_o.m_max, "survey up to N = 2^m_max points")->check(CLI::Range(0, 32));
    survey->add_flag("--no-shift", survey_o.no_shift, "use the unshifted lattice");
    survey->add_option("--dump-gaps", survey_o.dump_gaps, "write every sample to this CSV");
    survey->add_option("--levels-csv", survey_o.levels_csv, "levels CSV output");
    survey->add_option("--svg", survey_o.svg, "SVG chart output");
    survey->add_option("--report-json", survey_o.report_json, "theory report output");
    survey->add_flag("--residual-audit", survey_o.residual_audit,
                     "compute eigenvector residuals for every 1024th sample");

    auto *theory = app.add_subcommand("theory", "print the theoretical diagnostics as JSON");
    theory->add_option("--config", config_path, "JSON configuration file")->required()->check(CLI::ExistingFile);
    theory->add_option("--out", out_path, "write to file instead of stdout");

    auto *points = app.add_subcommand("points", "dump the first lattice points as CSV");
    points->add_option("--config", config_path, "JSON configuration file")->required()->check(CLI::ExistingFile);
    points->add_option("--count", count, "number of points")->required();
    points->add_option("--seed", points_o.seed, "random shift seed");
    points->add_option("--genvec", points_o.genvec, "generating vector file");
    points->add_option("--m-max", points_o.m_max, "lattice capacity 2^m_max")->check(CLI::Range(0, 32));
    points->add_flag("--no-shift", points_o.no_shift, "use the unshifted lattice");
    points->add_option("--out", out_path, "write to file instead of stdout");

    auto *fit = app.add_subcommand("fit", "refit alpha N^-beta to the diff column of a levels CSV");
    fit->add_option("levels_csv", levels_path, "levels CSV from a survey")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*survey)
            return cmd_survey(config_path, survey_o);
        if (*theory)
            return cmd_theory(config_path, out_path);
        if (*points)
            return cmd_points(config_path, points_o, count, out_path);
        if (*fit)
            return cmd_fit(levels_path);
    } catch (const Failure &f) {
        std::fflush(stdout);
        std::fprintf(stderr, "specgap: %s: %s\n", specgap_status_string(f.status()), specgap_last_error());
        return exit_code(f.status());
    }
    return 1;
}
