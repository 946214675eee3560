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

#include "specgap/eigensolve.hpp"

#include "specgap/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace specgap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_pencil(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m) {
    if (a.size() != m.size())
        throw InvalidArgument("pencil matrices differ in size");
    if (a.size() == 0)
        throw InvalidArgument("empty pencil");
}

// Negative-pivot count, or nullopt on an exact zero pivot.
std::optional<int> count_negative_pivots(const TridiagonalSymmetric &a,
                                         const TridiagonalSymmetric &m, double sigma) {
    const std::size_t n = a.diag.size();
    double d = a.diag[0] - sigma * m.diag[0];
    if (d == 0.0)
        return std::nullopt;
    int count = d < 0.0 ? 1 : 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double s = a.off[i - 1] - sigma * m.off[i - 1];
        d = (a.diag[i] - sigma * m.diag[i]) - s * s / d;
        if (d == 0.0)
            return std::nullopt;
        if (d < 0.0)
            ++count;
    }
    return count;
}

double diag_scale(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m) {
    double amax = 0.0, mmax = 0.0;
    for (double v : a.diag)
        amax = std::max(amax, std::abs(v));
    for (double v : m.diag)
        mmax = std::max(mmax, std::abs(v));
    return mmax > 0.0 ? amax / mmax : amax;
}

// Tridiagonal LU with partial pivoting (the LAPACK gttrf layout). Zero
// pivots are replaced by a tiny multiple of ||T|| so that a shift sitting
// exactly on an eigenvalue still yields a usable solve.
class ShiftedSolver {
public:
    ShiftedSolver(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m, double shift) {
        const std::size_t n = a.diag.size();
        d_.resize(n);
        dl_.assign(n > 0 ? n - 1 : 0, 0.0);
        du_.assign(n > 0 ? n - 1 : 0, 0.0);
        du2_.assign(n > 1 ? n - 2 : 0, 0.0);
        ipiv_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            d_[i] = a.diag[i] - shift * m.diag[i];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            dl_[i] = a.off[i] - shift * m.off[i];
            du_[i] = dl_[i];
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            norm = std::max(norm, std::abs(d_[i]) + (i > 0 ? std::abs(dl_[i - 1]) : 0.0) +
                                      (i + 1 < n ? std::abs(du_[i]) : 0.0));
        const double tiny = norm > 0.0 ? kEps * norm : std::numeric_limits<double>::min();

        for (std::size_t i = 0; i < n; ++i)
            ipiv_[i] = i;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d_[i]) >= std::abs(dl_[i])) {
                if (d_[i] == 0.0)
                    d_[i] = tiny;
                const double fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            } else {
                const double fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                const double temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                ipiv_[i] = i + 1;
            }
        }
        if (n > 0 && d_[n - 1] == 0.0)
            d_[n - 1] = tiny;
    }

    void solve(std::vector<double> &b) const {
        const std::size_t n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (ipiv_[i] == i) {
                b[i + 1] -= dl_[i] * b[i];
            } else {
                const double temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl_[i] * b[i];
            }
        }
        b[n - 1] /= d_[n - 1];
        if (n > 1)
            b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
        for (std::size_t ii = n >= 2 ? n - 2 : 0; ii-- > 0;)
            b[ii] = (b[ii] - du_[ii] * b[ii + 1] - du2_[ii] * b[ii + 2]) / d_[ii];
    }

private:
    std::vector<double> d_, dl_, du_, du2_;
    std::vector<std::size_t> ipiv_;
};

double m_norm(const TridiagonalSymmetric &m, std::span<const double> u) {
    return std::sqrt(m.quadratic_form(u));
}

double residual_norm(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m,
                     std::span<const double> u, double lambda) {
    std::vector<double> au(u.size()), mu(u.size());
    a.multiply(u, au);
    m.multiply(u, mu);
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = au[i] - lambda * mu[i];
        sum += r * r;
    }
    return std::sqrt(sum);
}

void normalise(const TridiagonalSymmetric &m, std::vector<double> &u) {
    const double norm = m_norm(m, u);
    double biggest = 0.0;
    for (double v : u)
        biggest = std::max(biggest, std::abs(v));
    double sign = 1.0;
    for (double v : u) {
        if (std::abs(v) > 1e-14 * biggest) {
            sign = v < 0.0 ? -1.0 : 1.0;
            break;
        }
    }
    for (double &v : u)
        v *= sign / norm;
}

} // namespace

int inertia(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m, double sigma) {
    check_pencil(a, m);
    // The step is relative to max(|sigma|, |A|/|M|): a step relative to sigma
    // alone can vanish below the rounding unit of A's diagonal.
    for (int attempt = 0; attempt <= 3; ++attempt) {
        if (auto count = count_negative_pivots(a, m, sigma))
            return *count;
        sigma += 4.0 * kEps * std::max(std::abs(sigma), diag_scale(a, m));
    }
    throw ConvergenceError("inertia count hit a zero pivot after 3 shift nudges");
}

Interval spectral_enclosure(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m) {
    check_pencil(a, m);
    const std::size_t n = a.diag.size();
    double a_extent = 0.0, m_lower = std::numeric_limits<double>::infinity();
    double m_diag_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double ra = (i > 0 ? std::abs(a.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(a.off[i]) : 0.0);
        const double rm = (i > 0 ? std::abs(m.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(m.off[i]) : 0.0);
        a_extent = std::max(a_extent, std::abs(a.diag[i]) + ra);
        m_lower = std::min(m_lower, m.diag[i] - rm);
        m_diag_min = std::min(m_diag_min, m.diag[i]);
    }
    if (!(m_diag_min > 0.0))
        throw InvalidArgument("mass matrix is not positive definite");
    double bound = a_extent / (m_lower > 0.0 ? m_lower : m_diag_min);
    if (!(bound > 0.0))
        bound = 1.0;
    const int size = static_cast<int>(n);
    for (int widen = 0; widen < 200; ++widen) {
        if (inertia(a, m, -bound) == 0 && inertia(a, m, bound) == size)
            return {-bound, bound};
        bound *= 2.0;
    }
    throw ConvergenceError("could not enclose the pencil spectrum");
}

EigenResult smallest_eigenvalues(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m,
                                 int k, Interval bracket, const ToleranceSpec &tol,
                                 bool want_vectors) {
    check_pencil(a, m);
    if (k < 1 || k > a.size())
        throw InvalidArgument("requested " + std::to_string(k) + " eigenvalues of a size-" +
                              std::to_string(a.size()) + " pencil");
    if (!(bracket.lo < bracket.hi))
        throw InvalidArgument("bracket must satisfy lo < hi");

    const int count_lo = inertia(a, m, bracket.lo);
    const int count_hi = inertia(a, m, bracket.hi);
    if (count_lo != 0 || count_hi < k)
        throw BracketError("bracket [" + std::to_string(bracket.lo) + ", " +
                               std::to_string(bracket.hi) + "] holds eigenvalues " +
                               std::to_string(count_lo) + ".." + std::to_string(count_hi) +
                               ", need 0.." + std::to_string(k),
                           count_lo, count_hi);

    const auto kk = static_cast<std::size_t>(k);
    std::vector<double> lower(kk, bracket.lo), upper(kk, bracket.hi);
    EigenResult result;
    result.values.resize(kk);
    result.iterations.assign(kk, 0);

    for (std::size_t i = 0; i < kk; ++i) {
        double lo = lower[i], hi = upper[i];
        int steps = 0;
        for (;;) {
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= std::max(tol.abs_tol, tol.rel_tol * std::abs(mid)) || mid <= lo ||
                mid >= hi)
                break;
            if (++steps > tol.max_bisections)
                throw ConvergenceError("eigenvalue " + std::to_string(i + 1) + " not converged in " +
                                       std::to_string(tol.max_bisections) + " bisections");
            const int c = inertia(a, m, mid);
            // c eigenvalues lie below mid: refine every bracket it informs
            for (std::size_t j = i; j < kk; ++j) {
                if (static_cast<int>(j) < c)
                    upper[j] = std::min(upper[j], mid);
                else
                    lower[j] = std::max(lower[j], mid);
            }
            lo = lower[i];
            hi = upper[i];
        }
        result.values[i] = 0.5 * (lo + hi);
        result.iterations[i] = steps;
    }

    for (std::size_t i = 0; i + 1 < kk; ++i) {
        const double v = result.values[i + 1];
        if (v - result.values[i] <= std::max(tol.abs_tol, tol.rel_tol * std::abs(v)))
            result.clustered = true;
    }

    if (want_vectors) {
        for (double lambda : result.values) {
            try {
                auto pair = inverse_iteration(a, m, lambda);
                result.residuals.push_back(pair.residual);
                result.vectors.push_back(std::move(pair.vector));
            } catch (const StagnationError &) {
                result.residuals.push_back(std::numeric_limits<double>::quiet_NaN());
                result.vectors.emplace_back();
            }
        }
    }
    return result;
}

EigenPair inverse_iteration(const TridiagonalSymmetric &a, const TridiagonalSymmetric &m,
                            double lambda_hat, int max_iterations) {
    check_pencil(a, m);
    const auto n = static_cast<std::size_t>(a.size());
    const double target = 1e-8 * a.norm_inf();

    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = 1.0 + std::fmod(0.6180339887498949 * static_cast<double>(i + 1), 1.0);
    normalise(m, u);

    EigenPair out;
    out.residual = residual_norm(a, m, u, lambda_hat);
    if (out.residual <= target) {
        out.vector = std::move(u);
        return out;
    }

    const ShiftedSolver solver(a, m, lambda_hat);
    double best = out.residual;
    int since_improvement = 0;
    std::vector<double> rhs(n);
    for (int it = 1; it <= max_iterations; ++it) {
        m.multiply(u, rhs);
        solver.solve(rhs);
        u.swap(rhs);
        normalise(m, u);
        const double r = residual_norm(a, m, u, lambda_hat);
        out.iterations = it;
        if (r <= target) {
            out.vector = std::move(u);
            out.residual = r;
            return out;
        }
        if (r < best) {
            best = r;
            since_improvement = 0;
        } else if (++since_improvement >= 10) {
            throw StagnationError("inverse iteration stagnated at residual " + std::to_string(best) +
                                  " (eigenvalue cluster near " + std::to_string(lambda_hat) + ")");
        }
    }
    throw ConvergenceError("inverse iteration did not reach residual " + std::to_string(target) +
                           " in " + std::to_string(max_iterations) + " steps");
}

double discrete_laplacian_eigenvalue(const UniformMesh &mesh, int k) {
    if (k < 1 || k > mesh.dof())
        throw InvalidArgument("Laplacian eigenvalue index " + std::to_string(k) + " outside 1.." +
                              std::to_string(mesh.dof()));
    const double h = mesh.h();
    const double theta = k * std::numbers::pi * h;
    // 1 - cos(theta) written as 2 sin^2(theta/2) to avoid cancellation
    const double half_sin = std::sin(0.5 * theta);
    return 6.0 / (h * h) * (2.0 * half_sin * half_sin) / (2.0 + std::cos(theta));
}

double laplacian_eigenvalue(int k) {
    if (k < 1)
        throw InvalidArgument("Laplacian eigenvalue index must be >= 1");
    const double t = k * std::numbers::pi;
    return t * t;
}

} // namespace specgap
