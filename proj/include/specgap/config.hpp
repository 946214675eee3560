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

#pragma once

#include "specgap/coefficient.hpp"
#include "specgap/eigensolve.hpp"
#include "specgap/qmc.hpp"
#include "specgap/survey.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace specgap {

/// Everything needed to reproduce one survey. Loaded from JSON; see
/// docs/config.md for the schema.
struct SurveyConfig {
    struct Coefficient {
        Family family = Family::Affine;
        double a0 = 1.0;
        double c0 = 1.0;
        int s = 100;
        double a_star = 0.0;
    } coefficient;

    struct Mesh {
        int n = 64;
    } mesh;

    struct Qmc {
        std::optional<std::string> genvec; ///< path; Korobov fallback when empty
        std::uint64_t korobov_a = kDefaultKorobovMultiplier;
        int m_max = 20;
        std::uint64_t seed = 0;
        bool shift = true;
    } qmc;

    struct Solver {
        double abs_tol = 1e-12;
        double rel_tol = 1e-12;
        bool residual_audit = false;
    } solver;

    struct Survey {
        std::optional<FailPolicy> fail_policy; ///< family default when empty
        std::optional<std::string> dump_gaps;
    } survey;

    struct Output {
        std::optional<std::string> levels_csv;
        std::optional<std::string> report_json;
        std::optional<std::string> svg;
    } output;

    /// Not part of the configuration identity: results never depend on it.
    int workers = 1;

    CoefficientModel model() const;
    UniformMesh uniform_mesh() const { return UniformMesh(mesh.n); }
    ToleranceSpec tolerance() const { return {solver.abs_tol, solver.rel_tol, 200}; }
    FailPolicy policy() const { return survey.fail_policy.value_or(default_fail_policy(coefficient.family)); }

    /// Generating vector of dimension s (file or Korobov).
    std::vector<std::uint64_t> generating_vector() const;
    std::string genvec_source() const;
    LatticeSequence lattice() const;

    /// Checks cross-field invariants (n >= 3, 0 <= m_max <= 32, tolerances > 0).
    void validate() const;

    /// Semantic fields only (no output paths, no workers), with the
    /// generating vector identified by checksum.
    nlohmann::json canonical_json() const;
    /// FNV-1a 64 of canonical_json().dump(), as 16 hex digits.
    std::string hash() const;
    Provenance provenance() const;
};

/// Parses the JSON config. Unknown keys and type mismatches throw
/// ParseError naming the offending field path. Relative genvec paths are
/// resolved against `base_dir` when it is non-empty.
SurveyConfig parse_config(const nlohmann::json &doc, const std::string &base_dir = {});
SurveyConfig parse_config_text(const std::string &text, const std::string &base_dir = {});
SurveyConfig load_config(const std::string &path);

std::string hex64(std::uint64_t value);

/// Runs the configured survey and attaches provenance to the result.
SurveyResult run_configured_survey(const SurveyConfig &config);

/// Writes every output named in config.output / config.survey.dump_gaps.
void write_survey_outputs(const SurveyConfig &config, const SurveyResult &result);

/// Theory report JSON with a provenance block.
nlohmann::json configured_theory_report(const SurveyConfig &config);

/// First `count` lattice points as CSV (header j1..js), provenance lines
/// first. Throws InvalidArgument if count > 2^m_max.
std::string points_csv(const SurveyConfig &config, std::uint64_t count);

} // namespace specgap
