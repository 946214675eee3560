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

#include <span>

namespace specgap {

struct FitPoint {
    double n = 0.0;
    double d = 0.0;
};

/// d ~ alpha N^-beta
struct PowerLawFit {
    double alpha = 0.0;
    double beta = 0.0;
    double residual_ss = 0.0; ///< sum of squared log residuals
    int used = 0;
    int filtered = 0;         ///< points dropped for d <= 0 or non-finite d
};

/// Unweighted least squares on (log N, log d). Points with d <= 0 are
/// dropped first; FitError if fewer than 2 usable points with distinct N
/// remain.
PowerLawFit power_law_fit(std::span<const FitPoint> points);

} // namespace specgap
