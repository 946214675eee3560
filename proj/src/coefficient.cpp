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

#include "specgap/coefficient.hpp"

#include "specgap/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace specgap {

std::string_view to_string(Family family) {
    return family == Family::Affine ? "affine" : "lognormal";
}

Family family_from_string(std::string_view name) {
    if (name == "affine")
        return Family::Affine;
    if (name == "lognormal" || name == "log-normal")
        return Family::LogNormal;
    throw InvalidArgument("unknown coefficient family '" + std::string(name) + "'");
}

ParameterPoint::ParameterPoint(std::vector<double> y) : y_(std::move(y)) {
    for (std::size_t j = 0; j < y_.size(); ++j) {
        if (!(std::abs(y_[j]) <= 0.5))
            throw InvalidArgument("parameter component y_" + std::to_string(j + 1) +
                                  " = " + std::to_string(y_[j]) + " outside [-1/2, 1/2]");
    }
}

ParameterPoint ParameterPoint::zeros(int s) { return filled(s, 0.0); }

ParameterPoint ParameterPoint::filled(int s, double value) {
    return ParameterPoint(std::vector<double>(static_cast<std::size_t>(s), value));
}

CoefficientModel::CoefficientModel(Family family, double a0, double c0, int s, double a_star)
    : family_(family), a0_(a0), c0_(c0), s_(s), a_star_(a_star) {
    if (s < 1)
        throw InvalidArgument("stochastic dimension s must be >= 1");
    if (!(a0 > 0.0))
        throw InvalidArgument("a0 must be positive");
    if (!(c0 >= 0.0))
        throw InvalidArgument("c0 must be non-negative");
    if (!(a_star >= 0.0))
        throw InvalidArgument("a_star must be non-negative");
}

std::vector<double> CoefficientModel::term_weights(const ParameterPoint &y) const {
    if (y.dim() < s_)
        throw InvalidArgument("parameter point has dimension " + std::to_string(y.dim()) +
                              ", model needs " + std::to_string(s_));
    std::vector<double> w(static_cast<std::size_t>(s_));
    for (int j = 1; j <= s_; ++j) {
        double t = y[j - 1];
        if (family_ == Family::LogNormal) {
            if (std::abs(t) >= 0.5)
                throw DomainError("log-normal coefficient needs |y_j| < 1/2 (y_" +
                                  std::to_string(j) + " is on the boundary)");
            t = inverse_normal_cdf(t + 0.5);
        }
        w[static_cast<std::size_t>(j - 1)] = t * c0_ / (double(j) * double(j));
    }
    return w;
}

double CoefficientModel::from_series(double series) const noexcept {
    return family_ == Family::Affine ? a0_ + series : a_star_ + std::exp(series);
}

double evaluate(const CoefficientModel &model, double x, const ParameterPoint &y) {
    if (!(x >= 0.0 && x <= 1.0))
        throw InvalidArgument("x must lie in [0, 1]");
    const auto w = model.term_weights(y);
    double series = 0.0;
    for (int j = 1; j <= model.s(); ++j)
        series += w[static_cast<std::size_t>(j - 1)] * std::sin(j * std::numbers::pi * x);
    const double a = model.from_series(series);
    if (!(a > 0.0))
        throw CoercivityError("coefficient evaluates to " + std::to_string(a) + " at x = " +
                              std::to_string(x));
    return a;
}

CoefficientBounds bounds(const CoefficientModel &model) {
    if (model.family() == Family::LogNormal)
        return {model.a_star(), std::nullopt};
    double inv_sq = 0.0;
    for (int j = model.s(); j >= 1; --j)
        inv_sq += 1.0 / (double(j) * double(j));
    const double spread = 0.5 * model.c0() * inv_sq;
    return {model.a0() - spread, model.a0() + spread};
}

double term_sup_norm(const CoefficientModel &model, int j) {
    if (j < 1)
        throw InvalidArgument("term index j must be >= 1");
    if (j > model.s())
        return 0.0;
    return model.c0() / (double(j) * double(j));
}

double summability(const CoefficientModel &model, double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw InvalidArgument("summability exponent p must lie in (0, 1]");
    double sum = 0.0;
    // smallest terms first
    for (int j = model.s(); j >= 1; --j) {
        const double norm = term_sup_norm(model, j);
        if (norm > 0.0)
            sum += std::pow(norm, p);
    }
    return sum;
}

// Algorithm AS241 (PPND16), M. J. Wichura, Applied Statistics 37 (1988).
// Relative accuracy about 1e-16 on (0, 1).
double inverse_normal_cdf(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("inverse normal CDF needs 0 < u < 1");

    constexpr double split1 = 0.425;
    constexpr double split2 = 5.0;
    constexpr double const1 = 0.180625;
    constexpr double const2 = 1.6;

    const double q = u - 0.5;
    if (std::abs(q) <= split1) {
        const double r = const1 - q * q;
        const double num =
            ((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0;
        const double den =
            ((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0;
        return q * num / den;
    }

    double r = q < 0.0 ? u : 1.0 - u;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= split2) {
        r -= const2;
        const double num =
            ((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                 2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
               3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
             4.63033784615654529590e+0) * r + 1.42343711074968357734e+0;
        const double den =
            ((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                 1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
               6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
             2.05319162663775882187e+0) * r + 1.0;
        value = num / den;
    } else {
        r -= split2;
        const double num =
            ((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                 1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
               2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
             5.46378491116411436990e+0) * r + 6.65790464350110377720e+0;
        const double den =
            ((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                 1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
               1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
             5.99832206555887937690e-1) * r + 1.0;
        value = num / den;
    }
    return q < 0.0 ? -value : value;
}

} // namespace specgap
