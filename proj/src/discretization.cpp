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

#include "specgap/discretization.hpp"

#include "specgap/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace specgap {

UniformMesh::UniformMesh(int cells) : cells_(cells) {
    if (cells < 2)
        throw InvalidArgument("mesh needs at least 2 cells, got " + std::to_string(cells));
}

TridiagonalSymmetric::TridiagonalSymmetric(std::vector<double> d, std::vector<double> e)
    : diag(std::move(d)), off(std::move(e)) {
    if (diag.empty() || off.size() + 1 != diag.size())
        throw InvalidArgument("tridiagonal matrix needs m >= 1 diagonal and m - 1 off-diagonal entries");
}

void TridiagonalSymmetric::multiply(std::span<const double> x, std::span<double> y) const {
    const std::size_t m = diag.size();
    for (std::size_t i = 0; i < m; ++i) {
        double v = diag[i] * x[i];
        if (i > 0)
            v += off[i - 1] * x[i - 1];
        if (i + 1 < m)
            v += off[i] * x[i + 1];
        y[i] = v;
    }
}

double TridiagonalSymmetric::quadratic_form(std::span<const double> x) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i)
        sum += diag[i] * x[i] * x[i];
    for (std::size_t i = 0; i < off.size(); ++i)
        sum += 2.0 * off[i] * x[i] * x[i + 1];
    return sum;
}

double TridiagonalSymmetric::norm_inf() const {
    double best = 0.0;
    const std::size_t m = diag.size();
    for (std::size_t i = 0; i < m; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0)
            row += std::abs(off[i - 1]);
        if (i + 1 < m)
            row += std::abs(off[i]);
        best = std::max(best, row);
    }
    return best;
}

QuadratureRule QuadratureRule::gauss_legendre(int points) {
    // nodes / weights on [-1, 1]
    std::vector<double> x, w;
    switch (points) {
    case 1:
        x = {0.0};
        w = {2.0};
        break;
    case 2: {
        const double t = 1.0 / std::sqrt(3.0);
        x = {-t, t};
        w = {1.0, 1.0};
        break;
    }
    case 3: {
        const double t = std::sqrt(3.0 / 5.0);
        x = {-t, 0.0, t};
        w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
        break;
    }
    case 4: {
        const double a = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
        const double b = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
        const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
        const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
        x = {-b, -a, a, b};
        w = {wb, wa, wa, wb};
        break;
    }
    default:
        throw InvalidArgument("Gauss-Legendre rule supports 1..4 points");
    }
    QuadratureRule rule;
    for (std::size_t k = 0; k < x.size(); ++k) {
        rule.nodes.push_back(0.5 * (x[k] + 1.0));
        rule.weights.push_back(0.5 * w[k]);
    }
    return rule;
}

TridiagonalSymmetric assemble_mass(const UniformMesh &mesh) {
    const double h = mesh.h();
    const auto m = static_cast<std::size_t>(mesh.dof());
    return {std::vector<double>(m, 2.0 * h / 3.0), std::vector<double>(m - 1, h / 6.0)};
}

TridiagonalSymmetric stiffness_from_element_averages(const UniformMesh &mesh,
                                                     std::span<const double> averages) {
    if (averages.size() != static_cast<std::size_t>(mesh.cells()))
        throw InvalidArgument("need one coefficient average per element");
    const double inv_h = static_cast<double>(mesh.cells());
    const auto m = static_cast<std::size_t>(mesh.dof());
    // interior node i (1-based) sits between elements i-1 and i (0-based)
    std::vector<double> d(m), e(m - 1);
    for (std::size_t i = 0; i < m; ++i)
        d[i] = (averages[i] + averages[i + 1]) * inv_h;
    for (std::size_t i = 0; i + 1 < m; ++i)
        e[i] = -averages[i + 1] * inv_h;
    return {std::move(d), std::move(e)};
}

StiffnessAssembler::StiffnessAssembler(const UniformMesh &mesh, const CoefficientModel &model,
                                       QuadratureRule rule)
    : mesh_(mesh), model_(model), rule_(std::move(rule)) {
    if (model.family() == Family::Affine) {
        const auto b = bounds(model);
        if (!(b.a_min > 0.0))
            throw CoercivityError("affine coefficient has a_min = " + std::to_string(b.a_min) +
                                  " <= 0; the discrete problem is not coercive");
    }
    const auto q = rule_.nodes.size();
    const auto s = static_cast<std::size_t>(model.s());
    basis_.resize(static_cast<std::size_t>(mesh.cells()) * q * s);
    for (int e = 0; e < mesh.cells(); ++e) {
        for (std::size_t k = 0; k < q; ++k) {
            const double x = (e + rule_.nodes[k]) * mesh.h();
            double *row = &basis_[(static_cast<std::size_t>(e) * q + k) * s];
            for (std::size_t j = 0; j < s; ++j)
                row[j] = std::sin(static_cast<double>(j + 1) * std::numbers::pi * x);
        }
    }
}

std::vector<double> StiffnessAssembler::node_values(const ParameterPoint &y) const {
    const auto w = model_.term_weights(y);
    const auto s = w.size();
    const auto count = basis_.size() / s;
    std::vector<double> values(count);
    for (std::size_t node = 0; node < count; ++node) {
        const double *row = &basis_[node * s];
        double series = 0.0;
        for (std::size_t j = 0; j < s; ++j)
            series += w[j] * row[j];
        values[node] = model_.from_series(series);
    }
    return values;
}

TridiagonalSymmetric StiffnessAssembler::assemble(const ParameterPoint &y,
                                                  CoefficientRange *range) const {
    const auto values = node_values(y);
    const auto q = rule_.nodes.size();
    std::vector<double> averages(static_cast<std::size_t>(mesh_.cells()));
    CoefficientRange r{values.front(), values.front()};
    for (std::size_t e = 0; e < averages.size(); ++e) {
        double avg = 0.0;
        for (std::size_t k = 0; k < q; ++k) {
            const double a = values[e * q + k];
            if (!(a > 0.0) || !std::isfinite(a))
                throw CoercivityError("coefficient value " + std::to_string(a) +
                                      " at a quadrature node of element " + std::to_string(e));
            r.lo = std::min(r.lo, a);
            r.hi = std::max(r.hi, a);
            avg += rule_.weights[k] * a;
        }
        averages[e] = avg;
    }
    if (range)
        *range = r;
    return stiffness_from_element_averages(mesh_, averages);
}

CoefficientRange StiffnessAssembler::range(const ParameterPoint &y) const {
    const auto values = node_values(y);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

TridiagonalSymmetric assemble_stiffness(const UniformMesh &mesh, const CoefficientModel &model,
                                        const ParameterPoint &y, const QuadratureRule &rule) {
    return StiffnessAssembler(mesh, model, rule).assemble(y);
}

CoefficientRange coefficient_range_on_quadrature(const UniformMesh &mesh,
                                                 const CoefficientModel &model,
                                                 const ParameterPoint &y,
                                                 const QuadratureRule &rule) {
    return StiffnessAssembler(mesh, model, rule).range(y);
}

} // namespace specgap
