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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specgap/analysis.hpp"
#include "specgap/error.hpp"
#include "specgap/fit.hpp"
#include "specgap/survey.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace specgap;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

} // namespace

TEST_CASE("gap condition: continuum verdicts") {
    const auto half = gap_condition_report(CoefficientModel::affine(0.5, 100), kPi2, 4 * kPi2);
    CHECK(half.holds);
    CHECK(half.ratio == doctest::Approx(0.4197).epsilon(1e-3));
    CHECK(half.threshold == doctest::Approx(0.25));
    REQUIRE(half.floor.has_value());
    CHECK(*half.floor == doctest::Approx(9.43800783204924681).epsilon(1e-12));
    // pi^2 (4 * 0.5913 - 1.4087) with four-digit bounds
    CHECK(*half.floor == doctest::Approx(kPi2 * (4 * 0.5913 - 1.4087)).epsilon(1e-3));

    const auto one = gap_condition_report(CoefficientModel::affine(1.0, 100), kPi2, 4 * kPi2);
    CHECK_FALSE(one.holds);
    CHECK(one.ratio == doctest::Approx(0.1004).epsilon(1e-3));
    CHECK_FALSE(one.floor.has_value());

    const auto zero = gap_condition_report(CoefficientModel::affine(0.0, 100), kPi2, 4 * kPi2);
    CHECK(zero.holds);
    CHECK(zero.ratio == 1.0);
    CHECK(*zero.floor == doctest::Approx(3 * kPi2).epsilon(1e-14));
}

TEST_CASE("gap condition: discrete floor") {
    UniformMesh mesh(64);
    const auto c = gap_condition_report(CoefficientModel::affine(0.5, 100), discrete_laplacian_eigenvalue(mesh, 1),
                                        discrete_laplacian_eigenvalue(mesh, 2));
    REQUIRE(c.floor.has_value());
    CHECK(*c.floor == doctest::Approx(9.45396967197002663).epsilon(1e-12));
}

TEST_CASE("gap condition: inapplicable models") {
    CHECK_THROWS_AS(gap_condition_report(CoefficientModel::lognormal(1.0, 100, 0.18), kPi2, 4 * kPi2), DomainError);
    CHECK_THROWS_AS(gap_condition_report(CoefficientModel::affine(2.0, 100), kPi2, 4 * kPi2), DomainError);
    CHECK_THROWS_AS(gap_condition_report(CoefficientModel::affine(0.5, 100), 0.0, 4 * kPi2), InvalidArgument);
}

TEST_CASE("eigenvalue brackets") {
    const auto b = bounds(CoefficientModel::affine(1.0, 100));
    const double chi[1] = {kPi2};
    const auto br = eigenvalue_brackets(b.a_min, *b.a_max, chi);
    REQUIRE(br.size() == 1);
    CHECK(br[0].lo == doctest::Approx(1.80128225260182700).epsilon(1e-12));
    CHECK(br[0].hi == doctest::Approx(17.9379265495768902).epsilon(1e-12));
    CHECK(br[0].lo == doctest::Approx(1.801).epsilon(1e-3));
    CHECK(br[0].hi == doctest::Approx(17.94).epsilon(1e-3));

    const double chis[2] = {kPi2, 4 * kPi2};
    const auto deg = eigenvalue_brackets(1.0, 1.0, chis);
    CHECK(deg[1].lo == deg[1].hi);
    CHECK(deg[1].lo == 4 * kPi2);

    const auto wide = eigenvalue_brackets(0.1, 2.0, chis);
    const auto narrow = eigenvalue_brackets(0.2, 2.0, chis);
    for (int k = 0; k < 2; ++k) {
        CHECK(wide[static_cast<std::size_t>(k)].lo <= narrow[static_cast<std::size_t>(k)].lo);
        CHECK(wide[static_cast<std::size_t>(k)].hi >= narrow[static_cast<std::size_t>(k)].hi);
    }
    CHECK_THROWS_AS(eigenvalue_brackets(0.0, 1.0, chis), InvalidArgument);
    CHECK_THROWS_AS(eigenvalue_brackets(2.0, 1.0, chis), InvalidArgument);
}

TEST_CASE("Lipschitz report: single term near p = 1/2") {
    const auto m = CoefficientModel::affine(1.0, 1);
    const auto r = lipschitz_report(m, 0.500001, kPi2, kPi2);
    CHECK(r.epsilon == doctest::Approx(0.499999));
    CHECK(r.q == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.alpha_preview[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.weighted_sum == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.c_tilde == doctest::Approx(44.4132198049021138).epsilon(1e-10));
    CHECK(r.alpha_preview.size() == 5);
    for (double a : r.alpha_preview)
        CHECK(a > 0.0);
}

TEST_CASE("Lipschitz report: constant coefficient and errors") {
    const auto z = lipschitz_report(CoefficientModel::affine(0.0, 100), 0.75, kPi2, kPi2);
    CHECK(z.weighted_sum == 0.0);
    CHECK(z.c_tilde == 0.0);
    const auto m = CoefficientModel::affine(1.0, 100);
    CHECK_THROWS_AS(lipschitz_report(m, 0.5, kPi2, kPi2), InvalidArgument);
    CHECK_THROWS_AS(lipschitz_report(m, 1.0, kPi2, kPi2), InvalidArgument);
    CHECK_THROWS_AS(lipschitz_report(CoefficientModel::lognormal(1.0, 100, 0.0), 0.75, kPi2, kPi2), DomainError);
    CHECK_THROWS_AS(lipschitz_report(CoefficientModel::affine(1.5, 100), 0.75, kPi2, kPi2), DomainError);
}

TEST_CASE("weighted sum is dominated by the p-summability sum") {
    const auto m = CoefficientModel::affine(1.0, 100);
    double prev_c = INFINITY;
    for (double p : {0.6, 0.75, 0.9}) {
        CAPTURE(p);
        const auto r = lipschitz_report(m, p, kPi2, 4 * kPi2);
        // direct summation of both sides
        double lhs = 0.0, rhs = 0.0;
        for (int j = 1; j <= 100; ++j) {
            const double norm = 1.0 / (double(j) * j);
            lhs += norm / (std::pow(norm, 1.0 - p) + 1.0 / j);
            rhs += std::pow(norm, p);
        }
        CHECK(r.weighted_sum == doctest::Approx(lhs).epsilon(1e-12));
        CHECK(r.weighted_sum <= rhs);
        CHECK(summability(m, p) == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(r.c_tilde < prev_c);
        prev_c = r.c_tilde;
    }
}

TEST_CASE("empirical Lipschitz check") {
    UniformMesh mesh(64);
    const auto zero = empirical_lipschitz_check(CoefficientModel::affine(0.0, 100), mesh, 20, 1);
    CHECK(zero.max_ratio == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
    CHECK(zero.pairs_used == 20);

    const auto half = empirical_lipschitz_check(CoefficientModel::affine(0.5, 100), mesh, 1000, 2);
    CHECK(half.pairs_used + half.pairs_skipped == 1000);
    CHECK(half.max_ratio > 0.0);
    CHECK(half.max_ratio <= half.bound);
    const auto k2 = empirical_lipschitz_check(CoefficientModel::affine(0.5, 100), mesh, 200, 3, 2);
    CHECK(k2.max_ratio <= k2.bound);
    CHECK_THROWS_AS(empirical_lipschitz_check(CoefficientModel::affine(0.5, 100), mesh, 10, 1, 3), InvalidArgument);
}

TEST_CASE("power-law fit: exact and flat data") {
    const FitPoint exact[] = {{2, 3 * std::pow(2.0, -0.5)}, {4, 3 * std::pow(4.0, -0.5)}, {8, 3 * std::pow(8.0, -0.5)}};
    const auto f = power_law_fit(exact);
    CHECK(std::abs(f.alpha - 3.0) <= 1e-10);
    CHECK(std::abs(f.beta - 0.5) <= 1e-10);
    CHECK(f.residual_ss <= 1e-25);
    CHECK(f.used == 3);

    const FitPoint flat[] = {{1, 5}, {2, 5}};
    const auto g = power_law_fit(flat);
    CHECK(std::abs(g.beta) <= 1e-14);
    CHECK(g.alpha == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("power-law fit: noisy data") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
    std::vector<FitPoint> pts;
    for (int m = 1; m <= 10; ++m) {
        const double n = std::ldexp(1.0, m);
        pts.push_back({n, 2.0 / n * (1 + noise(rng))});
    }
    const auto f = power_law_fit(pts);
    CHECK(f.beta >= 0.99);
    CHECK(f.beta <= 1.01);
}

TEST_CASE("power-law fit: filtering and errors") {
    const FitPoint with_zero[] = {{1, 4}, {2, 2}, {4, 0}, {8, -1}, {16, NAN}};
    const auto f = power_law_fit(with_zero);
    CHECK(f.filtered == 3);
    CHECK(f.used == 2);
    CHECK(f.beta == doctest::Approx(1.0).epsilon(1e-14));

    const FitPoint zeros[] = {{1, 0}, {2, 0}, {4, 0}};
    CHECK_THROWS_AS(power_law_fit(zeros), FitError);
    const FitPoint single[] = {{1, 2}};
    CHECK_THROWS_AS(power_law_fit(single), FitError);
    const FitPoint same_n[] = {{4, 2}, {4, 3}};
    CHECK_THROWS_AS(power_law_fit(same_n), FitError);
    const FitPoint bad_n[] = {{0, 2}, {4, 3}};
    CHECK_THROWS_AS(power_law_fit(bad_n), FitError);
}

TEST_CASE("power-law fit is scale-equivariant") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::vector<FitPoint> pts, scaled;
    for (int m = 0; m < 12; ++m) {
        const double n = std::ldexp(1.0, m);
        pts.push_back({n, u(rng)});
        scaled.push_back({n, pts.back().d * 7.5});
    }
    const auto a = power_law_fit(pts), b = power_law_fit(scaled);
    CHECK(b.alpha == doctest::Approx(7.5 * a.alpha).epsilon(1e-12));
    CHECK(std::abs(b.beta - a.beta) <= 1e-12);
}

TEST_CASE("theory report: affine models") {
    UniformMesh mesh(64);
    const auto half = theory_report(CoefficientModel::affine(0.5, 100), mesh);
    CHECK(half["applicable"] == true);
    CHECK(half["condition_holds"] == true);
    CHECK(half["gap_floor"].get<double>() == doctest::Approx(9.44).epsilon(1e-3));
    CHECK(half["gap_condition"]["discrete"]["floor"].get<double>() ==
          doctest::Approx(9.45396967197002663).epsilon(1e-12));
    CHECK(half["bounds_sharp"] == false);
    CHECK(half["summability"]["1"].get<double>() == doctest::Approx(0.5 * 1.63498390018489286).epsilon(1e-13));
    CHECK(half["lipschitz"]["reparametrised"].size() == 3);
    CHECK(half["chi_discrete"][0].get<double>() == doctest::Approx(9.87158635325673231).epsilon(1e-14));

    const auto one = theory_report(CoefficientModel::affine(1.0, 100), mesh);
    CHECK(one["condition_holds"] == false);
    CHECK(one["gap_floor"].is_null());
    CHECK(one["brackets"]["continuum"][0][0].get<double>() == doctest::Approx(1.80128225260182700).epsilon(1e-12));

    const auto zero = theory_report(CoefficientModel::affine(0.0, 100), mesh);
    CHECK(zero["gap_floor"].get<double>() == doctest::Approx(3 * kPi2).epsilon(1e-14));
}

TEST_CASE("theory report: inapplicable models") {
    UniformMesh mesh(64);
    const auto ln = theory_report(CoefficientModel::lognormal(1.0, 100, 0.0), mesh);
    CHECK(ln["applicable"] == false);
    CHECK(ln["a_max"] == "unbounded");
    CHECK(ln["condition_holds"].is_null());
    CHECK(ln["brackets"].is_null());
    CHECK(ln["inapplicable_reason"].get<std::string>().find("unbounded") != std::string::npos);

    const auto bad = theory_report(CoefficientModel::affine(2.0, 100), mesh);
    CHECK(bad["applicable"] == false);
    CHECK(bad["a_min"].get<double>() < 0.0);
}

TEST_CASE("discrete floor holds across a survey of the c0 = 0.5 configuration") {
    UniformMesh mesh(64);
    const auto model = CoefficientModel::affine(0.5, 100);
    const auto cond = gap_condition_report(model, discrete_laplacian_eigenvalue(mesh, 1),
                                           discrete_laplacian_eigenvalue(mesh, 2));
    GapSampler sampler(mesh, model);
    const auto lat = LatticeSequence::with_seed(korobov_vector(kDefaultKorobovMultiplier, 100, 10), 10, 0);
    SurveyOptions opt;
    opt.keep_samples = true;
    const auto r = run_survey(sampler, lat, opt);
    int violations = 0;
    for (const auto &s : r.samples)
        if (s.gap < *cond.floor)
            ++violations;
    CHECK(violations == 0);
}
