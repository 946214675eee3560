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
#include "specgap/discretization.hpp"
#include "specgap/eigensolve.hpp"
#include "specgap/fit.hpp"
#include "specgap/qmc.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specgap {

struct GapSample {
    std::uint64_t index = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double gap = 0.0;
    double coeff_lo = 0.0;
    double coeff_hi = 0.0;
};

/// Relative slack used when asserting lo chi_k^h <= lambda_k <= hi chi_k^h.
inline constexpr double kBracketSlack = 1e-9;

/// Computes lambda_1, lambda_2 of the FEM pencil (A(y), M) for one
/// realisation. Holds the cached assembler, the mass matrix, and the
/// discrete Laplacian eigenvalues; safe for concurrent const use.
class GapSampler {
public:
    GapSampler(const UniformMesh &mesh, const CoefficientModel &model, ToleranceSpec tol = {});

    const StiffnessAssembler &assembler() const noexcept { return assembler_; }
    const TridiagonalSymmetric &mass() const noexcept { return mass_; }
    double chi_h(int k) const { return k == 1 ? chi1_ : chi2_; }

    struct Extras {
        bool audit = false;      ///< in: compute eigenvectors and residuals
        double residual = 0.0;   ///< out: larger of the two residuals
        bool clustered = false;  ///< out: lambda_1, lambda_2 within tolerance
    };

    /// Throws CoercivityError / ConvergenceError on solver failure and
    /// SampleFailed if the realised-bound bracket invariant does not hold.
    GapSample sample(std::uint64_t index, const ParameterPoint &y, Extras *extras = nullptr) const;

private:
    StiffnessAssembler assembler_;
    TridiagonalSymmetric mass_;
    ToleranceSpec tol_;
    double chi1_;
    double chi2_;
};

GapSample sample_gap(const CoefficientModel &model, const UniformMesh &mesh,
                     const ParameterPoint &y, const ToleranceSpec &tol = {});

enum class FailPolicy { Strict, Record };

std::string_view to_string(FailPolicy policy);
FailPolicy fail_policy_from_string(std::string_view name);
/// Strict for affine, record for log-normal.
FailPolicy default_fail_policy(Family family);

struct SurveyOptions {
    FailPolicy policy = FailPolicy::Strict;
    int workers = 1;
    bool keep_samples = false;
    bool residual_audit = false;
    /// Every audit_stride-th index is audited when residual_audit is set.
    std::uint64_t audit_stride = 1024;
};

struct SurveyLevel {
    int m = 0;
    std::uint64_t n = 1;
    double delta = 0.0;
    std::uint64_t argmin = 0;
    double diff = 0.0;
};

struct FailedSample {
    std::uint64_t index = 0;
    std::string reason;
};

struct SurveyResult {
    std::vector<SurveyLevel> levels;
    std::uint64_t n_star = 1;
    std::optional<PowerLawFit> fit;
    std::string fit_note; ///< why fit is empty
    std::uint64_t failed = 0;
    std::vector<FailedSample> failures; ///< lowest indices first, capped
    std::uint64_t clustered = 0;
    std::uint64_t audited = 0;
    double max_audit_residual = 0.0;
    std::vector<GapSample> samples; ///< lattice order, when keep_samples
    std::vector<std::pair<std::string, std::string>> provenance;
};

/// Runs the sampler over lattice indices 0 .. 2^m_max - 1 and snapshots the
/// running minimum of the gap over each prefix of length N = 2^m. Results
/// do not depend on the worker count.
SurveyResult run_survey(const GapSampler &sampler, const LatticeSequence &lattice,
                        const SurveyOptions &options = {});

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

using Provenance = std::vector<std::pair<std::string, std::string>>;

/// Columns m,N,delta_N,argmin_index,diff; provenance as leading '#' lines.
void write_levels_csv(std::span<const SurveyLevel> levels, const std::string &path,
                      const Provenance &provenance = {});
std::string levels_csv(std::span<const SurveyLevel> levels, const Provenance &provenance = {});
std::vector<SurveyLevel> parse_levels_csv(std::string_view text);
std::vector<SurveyLevel> read_levels_csv(const std::string &path);

/// Columns index,lambda1,lambda2,gap,coeff_lo,coeff_hi.
void write_samples_csv(std::span<const GapSample> samples, const std::string &path,
                       const Provenance &provenance = {});

/// Fit of the diff column over levels with diff > 0.
PowerLawFit fit_levels(std::span<const SurveyLevel> levels);

} // namespace specgap
