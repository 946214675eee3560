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

#include "specgap/fit.hpp"

#include "specgap/error.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace specgap {

PowerLawFit power_law_fit(std::span<const FitPoint> points) {
    PowerLawFit fit;
    std::vector<double> xs, ys;
    for (const auto &p : points) {
        if (!(p.d > 0.0) || !std::isfinite(p.d)) {
            ++fit.filtered;
            continue;
        }
        if (!(p.n > 0.0))
            throw FitError("sample count N must be positive");
        xs.push_back(std::log(p.n));
        ys.push_back(std::log(p.d));
    }
    fit.used = static_cast<int>(xs.size());
    if (fit.used < 2)
        throw FitError("power-law fit needs at least 2 points with d > 0, have " +
                       std::to_string(fit.used));

    const double count = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (!(sxx > 0.0))
        throw FitError("power-law fit needs at least 2 distinct values of N");

    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    fit.beta = -slope;
    fit.alpha = std::exp(intercept);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        fit.residual_ss += r * r;
    }
    return fit;
}

} // namespace specgap
