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

#include <span>
#include <vector>

namespace specgap {

/// Uniform mesh of (0,1) with n cells. Dirichlet nodes x = 0 and x = 1 are
/// eliminated, leaving n - 1 interior degrees of freedom.
class UniformMesh {
public:
    explicit UniformMesh(int cells);

    int cells() const noexcept { return cells_; }
    int dof() const noexcept { return cells_ - 1; }
    double h() const noexcept { return 1.0 / cells_; }
    /// Coordinate of node i, 0 <= i <= n.
    double node(int i) const noexcept { return static_cast<double>(i) / cells_; }

private:
    int cells_;
};

/// Symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal.
struct TridiagonalSymmetric {
    std::vector<double> diag;
    std::vector<double> off;

    TridiagonalSymmetric() = default;
    TridiagonalSymmetric(std::vector<double> d, std::vector<double> e);

    int size() const noexcept { return static_cast<int>(diag.size()); }
    /// y = T x
    void multiply(std::span<const double> x, std::span<double> y) const;
    double quadratic_form(std::span<const double> x) const;
    /// max row sum of |entries|
    double norm_inf() const;
};

/// Per-element quadrature on the reference interval [0,1]; weights sum to 1
/// so that applying the rule gives an element average.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Gauss-Legendre with 1..4 points.
    static QuadratureRule gauss_legendre(int points);
    static QuadratureRule gauss2() { return gauss_legendre(2); }
};

/// Interior-node P1 mass matrix: 2h/3 on the diagonal, h/6 off it.
TridiagonalSymmetric assemble_mass(const UniformMesh &mesh);

/// Stiffness matrix from per-element coefficient averages abar_e:
/// diag_i = (abar_i + abar_{i+1})/h, off_i = -abar_{i+1}/h.
TridiagonalSymmetric stiffness_from_element_averages(const UniformMesh &mesh,
                                                     std::span<const double> averages);

struct CoefficientRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Assembles A(y) for a fixed (mesh, model, rule), caching sin(j pi x) at
/// every quadrature node. Construction rejects affine models with a_min <= 0.
/// Thread-safe for concurrent const use.
class StiffnessAssembler {
public:
    StiffnessAssembler(const UniformMesh &mesh, const CoefficientModel &model,
                       QuadratureRule rule = QuadratureRule::gauss2());

    const UniformMesh &mesh() const noexcept { return mesh_; }
    const CoefficientModel &model() const noexcept { return model_; }

    /// Coefficient values at all quadrature nodes, element-major.
    std::vector<double> node_values(const ParameterPoint &y) const;

    /// Throws CoercivityError if any node value is not positive and finite.
    TridiagonalSymmetric assemble(const ParameterPoint &y, CoefficientRange *range = nullptr) const;

    CoefficientRange range(const ParameterPoint &y) const;

private:
    UniformMesh mesh_;
    CoefficientModel model_;
    QuadratureRule rule_;
    std::vector<double> basis_; // [node][j], node = element * q + k
};

TridiagonalSymmetric assemble_stiffness(const UniformMesh &mesh, const CoefficientModel &model,
                                        const ParameterPoint &y,
                                        const QuadratureRule &rule = QuadratureRule::gauss2());

/// min / max of a(., y) over every quadrature node of the mesh.
CoefficientRange coefficient_range_on_quadrature(const UniformMesh &mesh,
                                                 const CoefficientModel &model,
                                                 const ParameterPoint &y,
                                                 const QuadratureRule &rule = QuadratureRule::gauss2());

} // namespace specgap
