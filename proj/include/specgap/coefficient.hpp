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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace specgap {

enum class Family { Affine, LogNormal };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

/// A point y in the parameter box [-1/2, 1/2]^s. Construction rejects
/// components outside the box.
class ParameterPoint {
public:
    ParameterPoint() = default;
    explicit ParameterPoint(std::vector<double> y);

    static ParameterPoint zeros(int s);
    static ParameterPoint filled(int s, double value);

    int dim() const noexcept { return static_cast<int>(y_.size()); }
    double operator[](int j) const { return y_[static_cast<std::size_t>(j)]; }
    std::span<const double> values() const noexcept { return y_; }

private:
    std::vector<double> y_;
};

/// a_min and a_max of the coefficient. `a_max` is empty for the
/// log-normal family, which is unbounded above.
struct CoefficientBounds {
    double a_min = 0.0;
    std::optional<double> a_max;

    bool bounded() const noexcept { return a_max.has_value(); }
    /// a_min > 0 and a_max finite.
    bool uniformly_elliptic() const noexcept { return bounded() && a_min > 0.0; }
};

/// Parametric diffusion coefficient on D = (0,1) built on the sine basis
///
///   a_j(x) = c0 / j^2 * sin(j pi x),  j = 1..s,   a_j = 0 for j > s.
///
/// Affine:     a(x,y) = a0 + sum_j y_j a_j(x)
/// LogNormal:  a(x,y) = a_star + exp(sum_j Phi^{-1}(y_j + 1/2) a_j(x))
///
/// Affine models whose a_min is not positive can be constructed so that
/// violations can be studied; every eigensolve path rejects them.
class CoefficientModel {
public:
    CoefficientModel(Family family, double a0, double c0, int s, double a_star = 0.0);

    static CoefficientModel affine(double c0, int s, double a0 = 1.0) {
        return CoefficientModel(Family::Affine, a0, c0, s, 0.0);
    }
    static CoefficientModel lognormal(double c0, int s, double a_star) {
        return CoefficientModel(Family::LogNormal, 1.0, c0, s, a_star);
    }

    Family family() const noexcept { return family_; }
    double a0() const noexcept { return a0_; }
    double c0() const noexcept { return c0_; }
    int s() const noexcept { return s_; }
    double a_star() const noexcept { return a_star_; }

    /// Per-term weights w_j so that a(x,y) = a0 + sum w_j sin(j pi x) (affine)
    /// or a_star + exp(sum w_j sin(j pi x)) (log-normal). Validates y.
    std::vector<double> term_weights(const ParameterPoint &y) const;

    /// Maps the basis sum sum_j w_j sin(j pi x) to the coefficient value.
    double from_series(double series) const noexcept;

private:
    Family family_;
    double a0_;
    double c0_;
    int s_;
    double a_star_;
};

/// a(x, y). Throws CoercivityError if an affine evaluation is not positive,
/// DomainError for |y_j| = 1/2 under the log-normal family.
double evaluate(const CoefficientModel &model, double x, const ParameterPoint &y);

/// Analytic bounds. Affine: a0 -/+ (c0/2) sum_{j<=s} j^-2. These are not
/// sharp, since the sines never peak simultaneously.
CoefficientBounds bounds(const CoefficientModel &model);

/// ||a_j||_{L^inf(0,1)}.
double term_sup_norm(const CoefficientModel &model, int j);

/// sum_{j<=s} ||a_j||^p.
double summability(const CoefficientModel &model, double p);

/// Inverse of the standard normal CDF (Wichura's AS241, PPND16).
double inverse_normal_cdf(double u);

} // namespace specgap
