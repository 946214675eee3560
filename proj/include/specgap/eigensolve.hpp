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

#include "specgap/discretization.hpp"

#include <vector>

namespace specgap {

struct ToleranceSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_bisections = 200;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct EigenResult {
    std::vector<double> values;               ///< ascending
    std::vector<int> iterations;              ///< bisection steps per value
    std::vector<std::vector<double>> vectors; ///< M-normalised, only when requested
    std::vector<double> residuals;            ///< ||A u - lambda M u||_2, only when requested
    bool clustered = false;                   ///< two values closer than the tolerance
};

/// Number of eigenvalues of the pencil (A, M) strictly below sigma: the
/// count of negative pivots of the LDL^T recurrence on A - sigma M. An exact
/// zero pivot raises sigma by 4 eps max(|sigma|, |A|/|M|) and retries, at
/// most 3 times, before throwing ConvergenceError.
int inertia(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m, double sigma);

/// Interval that contains the whole spectrum of (A, M), seeded from
/// Gershgorin discs and widened until inertia counts confirm it.
Interval spectral_enclosure(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m);

/// The k smallest eigenvalues of (A, M) by bisection on inertia counts.
/// The bracket must hold the bottom of the spectrum: inertia(lo) == 0 and
/// inertia(hi) >= k, otherwise BracketError carries both counts. Each value
/// is bisected until the interval width is <= max(abs_tol, rel_tol |mid|).
EigenResult smallest_eigenvalues(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m,
                                 int k, Interval bracket, const ToleranceSpec &tol = {},
                                 bool want_vectors = false);

struct EigenPair {
    std::vector<double> vector; ///< ||u||_M = 1, first significant entry positive
    double residual = 0.0;      ///< ||A u - lambda_hat M u||_2
    int iterations = 0;
};

/// Shifted inverse iteration at lambda_hat. Converges once the residual is
/// <= 1e-8 ||A||_inf (at most 50 steps); throws StagnationError if the
/// residual stops decreasing for 10 consecutive steps.
EigenPair inverse_iteration(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m,
                            double lambda_hat, int max_iterations = 50);

/// k-th eigenvalue of the P1 Dirichlet Laplacian pencil on a uniform mesh:
/// (6/h^2) (1 - cos(k pi h)) / (2 + cos(k pi h)).
double discrete_laplacian_eigenvalue(const UniformMesh &mesh, int k);

/// (k pi)^2, the continuum Dirichlet Laplacian eigenvalue on (0,1).
double laplacian_eigenvalue(int k);

} // namespace specgap
