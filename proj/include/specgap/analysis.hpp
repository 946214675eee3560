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

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace specgap {

struct GapCondition {
    bool holds = false;
    double ratio = 0.0;          ///< a_min / a_max
    double threshold = 0.0;      ///< chi1 / chi2
    std::optional<double> floor; ///< a_min chi2 - a_max chi1, when holds
};

/// Sufficient gap condition a_min / a_max > chi1 / chi2. Throws DomainError
/// for log-normal or non-coercive models, where it does not apply.
GapCondition gap_condition_report(const CoefficientModel &model, double chi1, double chi2);

/// [a_min chi_k, a_max chi_k] for each chi_k.
std::vector<Interval> eigenvalue_brackets(double a_min, double a_max, std::span<const double> chi);

struct LipschitzReport {
    double p = 0.0;
    double epsilon = 0.0;       ///< 1 - p
    double q = 0.0;             ///< p / (1 - p)
    double prefactor = 0.0;     ///< a_max^2 chi_k^2 / (a_min^2 chi_1)
    double weighted_sum = 0.0;  ///< sum_j ||a_j|| / alpha_j
    double c_tilde = 0.0;       ///< prefactor * weighted_sum
    std::vector<double> alpha_preview; ///< alpha_1 .. alpha_5
};

/// Lipschitz constant of lambda_k after reparametrising with
/// alpha_j = ||a_j||^eps + 1/j, eps = 1 - p. Needs 1/2 < p < 1 and an affine
/// model with a_min > 0.
LipschitzReport lipschitz_report(const CoefficientModel &model, double p, double chi1, double chik);

/// alpha_j = ||a_j||^eps + 1/j.
double reparametrisation_weight(const CoefficientModel &model, int j, double epsilon);

/// a_max^2 chi_k^2 / (a_min^2 chi_1) * sum_j ||a_j||: the Lipschitz bound for
/// lambda_k in the l^inf norm on y.
double lipschitz_bound(const CoefficientModel &model, double chi1, double chik);

struct LipschitzCheck {
    double max_ratio = 0.0;
    double bound = 0.0;
    int pairs_used = 0;
    int pairs_skipped = 0; ///< y == y'
};

/// Largest |lambda_k(y) - lambda_k(y')| / ||y - y'||_inf over random pairs,
/// compared with lipschitz_bound using the discrete chi^h.
LipschitzCheck empirical_lipschitz_check(const CoefficientModel &model, const UniformMesh &mesh,
                                         int pairs, std::uint64_t seed, int k = 1);

struct TheoryOptions {
    std::vector<double> summability_p{0.5, 0.6, 0.75, 0.9, 1.0};
    std::vector<double> lipschitz_p{0.6, 0.75, 0.9};
};

/// The full computable diagnostic set as JSON. Log-normal and non-coercive
/// affine models get a partial report with the inapplicable parts marked.
nlohmann::json theory_report(const CoefficientModel &model, const UniformMesh &mesh,
                             const TheoryOptions &options = {});

} // namespace specgap
