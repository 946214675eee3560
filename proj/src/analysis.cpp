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

#include "specgap/analysis.hpp"

#include "specgap/error.hpp"
#include "specgap/qmc.hpp"
#include "specgap/survey.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace specgap {

namespace {

CoefficientBounds coercive_bounds(const CoefficientModel &model, const char *what) {
    const auto b = bounds(model);
    if (!b.bounded())
        throw DomainError(std::string(what) + " needs a bounded coefficient; the log-normal family is unbounded");
    if (!(b.a_min > 0.0))
        throw DomainError(std::string(what) + " needs a_min > 0, have " + std::to_string(b.a_min));
    return b;
}

} // namespace

GapCondition gap_condition_report(const CoefficientModel &model, double chi1, double chi2) {
    const auto b = coercive_bounds(model, "gap condition");
    if (!(chi1 > 0.0 && chi2 >= chi1))
        throw InvalidArgument("need 0 < chi1 <= chi2");
    GapCondition out;
    out.ratio = b.a_min / *b.a_max;
    out.threshold = chi1 / chi2;
    out.holds = out.ratio > out.threshold;
    if (out.holds)
        out.floor = b.a_min * chi2 - *b.a_max * chi1;
    return out;
}

std::vector<Interval> eigenvalue_brackets(double a_min, double a_max, std::span<const double> chi) {
    if (!(a_min > 0.0 && a_min <= a_max))
        throw InvalidArgument("brackets need 0 < a_min <= a_max");
    std::vector<Interval> out;
    out.reserve(chi.size());
    for (double c : chi)
        out.push_back({a_min * c, a_max * c});
    return out;
}

double reparametrisation_weight(const CoefficientModel &model, int j, double epsilon) {
    const double norm = term_sup_norm(model, j);
    return (norm > 0.0 ? std::pow(norm, epsilon) : 0.0) + 1.0 / j;
}

LipschitzReport lipschitz_report(const CoefficientModel &model, double p, double chi1, double chik) {
    if (!(p > 0.5 && p < 1.0))
        throw InvalidArgument("Lipschitz report needs 1/2 < p < 1, got " + std::to_string(p));
    const auto b = coercive_bounds(model, "Lipschitz report");
    const double a_min = b.a_min, a_max = *b.a_max;

    LipschitzReport out;
    out.p = p;
    out.epsilon = 1.0 - p;
    out.q = p / (1.0 - p);
    out.prefactor = (a_max * a_max * chik * chik) / (a_min * a_min * chi1);
    for (int j = model.s(); j >= 1; --j)
        out.weighted_sum += term_sup_norm(model, j) / reparametrisation_weight(model, j, out.epsilon);
    out.c_tilde = out.prefactor * out.weighted_sum;
    for (int j = 1; j <= 5; ++j)
        out.alpha_preview.push_back(reparametrisation_weight(model, j, out.epsilon));
    return out;
}

double lipschitz_bound(const CoefficientModel &model, double chi1, double chik) {
    const auto b = coercive_bounds(model, "Lipschitz bound");
    const double prefactor = (*b.a_max * *b.a_max * chik * chik) / (b.a_min * b.a_min * chi1);
    return prefactor * summability(model, 1.0);
}

LipschitzCheck empirical_lipschitz_check(const CoefficientModel &model, const UniformMesh &mesh,
                                         int pairs, std::uint64_t seed, int k) {
    if (k != 1 && k != 2)
        throw InvalidArgument("empirical Lipschitz check supports k = 1, 2");
    if (pairs < 0)
        throw InvalidArgument("pair count must be non-negative");
    LipschitzCheck out;
    out.bound = lipschitz_bound(model, discrete_laplacian_eigenvalue(mesh, 1),
                                discrete_laplacian_eigenvalue(mesh, k));
    const GapSampler sampler(mesh, model);
    SplitMix64 rng(seed);
    const auto s = static_cast<std::size_t>(model.s());
    auto draw = [&] {
        std::vector<double> y(s);
        for (double &v : y)
            v = rng.next_unit() - 0.5;
        return ParameterPoint(std::move(y));
    };
    for (int n = 0; n < pairs; ++n) {
        const auto y = draw();
        const auto y2 = draw();
        double dist = 0.0;
        for (std::size_t j = 0; j < s; ++j)
            dist = std::max(dist, std::abs(y.values()[j] - y2.values()[j]));
        if (dist == 0.0) {
            ++out.pairs_skipped;
            continue;
        }
        const auto a = sampler.sample(0, y);
        const auto b = sampler.sample(1, y2);
        const double diff = k == 1 ? a.lambda1 - b.lambda1 : a.lambda2 - b.lambda2;
        out.max_ratio = std::max(out.max_ratio, std::abs(diff) / dist);
        ++out.pairs_used;
    }
    return out;
}

namespace {

nlohmann::json interval_list(const std::vector<Interval> &v) {
    auto arr = nlohmann::json::array();
    for (const auto &i : v)
        arr.push_back({i.lo, i.hi});
    return arr;
}

nlohmann::json condition_json(const GapCondition &c) {
    return {{"holds", c.holds},
            {"ratio", c.ratio},
            {"threshold", c.threshold},
            {"floor", c.floor ? nlohmann::json(*c.floor) : nlohmann::json(nullptr)}};
}

} // namespace

nlohmann::json theory_report(const CoefficientModel &model, const UniformMesh &mesh,
                             const TheoryOptions &options) {
    using nlohmann::json;
    const auto b = bounds(model);
    const double chi_c[2] = {laplacian_eigenvalue(1), laplacian_eigenvalue(2)};
    const double chi_h[2] = {discrete_laplacian_eigenvalue(mesh, 1),
                             discrete_laplacian_eigenvalue(mesh, std::min(2, mesh.dof()))};

    json report;
    report["model"] = {{"family", std::string(to_string(model.family()))},
                       {"a0", model.a0()},
                       {"c0", model.c0()},
                       {"s", model.s()},
                       {"a_star", model.a_star()}};
    report["mesh"] = {{"n", mesh.cells()}, {"h", mesh.h()}};
    report["a_min"] = b.a_min;
    report["a_max"] = b.a_max ? json(*b.a_max) : json("unbounded");
    report["bounds_sharp"] = false;
    report["uniformly_elliptic"] = b.uniformly_elliptic();
    report["chi_continuum"] = {chi_c[0], chi_c[1]};
    report["chi_discrete"] = {chi_h[0], chi_h[1]};

    json summ = json::object();
    for (double p : options.summability_p)
        summ[format_double(p)] = summability(model, p);
    report["summability"] = summ;

    if (!b.uniformly_elliptic()) {
        const std::string why = b.bounded() ? "a_min <= 0: coefficient not uniformly positive"
                                            : "coefficient unbounded (log-normal)";
        report["applicable"] = false;
        report["inapplicable_reason"] = why;
        report["brackets"] = nullptr;
        report["gap_condition"] = nullptr;
        report["condition_holds"] = nullptr;
        report["gap_floor"] = nullptr;
        report["lipschitz"] = nullptr;
        return report;
    }

    report["applicable"] = true;
    report["brackets"] = {{"continuum", interval_list(eigenvalue_brackets(b.a_min, *b.a_max, chi_c))},
                          {"discrete", interval_list(eigenvalue_brackets(b.a_min, *b.a_max, chi_h))}};
    const auto cond_c = gap_condition_report(model, chi_c[0], chi_c[1]);
    const auto cond_h = gap_condition_report(model, chi_h[0], chi_h[1]);
    report["gap_condition"] = {{"continuum", condition_json(cond_c)}, {"discrete", condition_json(cond_h)}};
    report["condition_holds"] = cond_c.holds;
    report["gap_floor"] = cond_c.floor ? json(*cond_c.floor) : json(nullptr);

    json lip = json::array();
    for (double p : options.lipschitz_p) {
        json entry;
        const auto base = lipschitz_report(model, p, chi_c[0], chi_c[0]);
        entry["p"] = p;
        entry["epsilon"] = base.epsilon;
        entry["q"] = base.q;
        entry["alpha_preview"] = base.alpha_preview;
        entry["weighted_sum"] = base.weighted_sum;
        entry["summability_p"] = summability(model, p);
        for (int k = 1; k <= 2; ++k) {
            const auto key = "k" + std::to_string(k);
            entry["c_tilde"][key] = {
                {"continuum", lipschitz_report(model, p, chi_c[0], chi_c[k - 1]).c_tilde},
                {"discrete", lipschitz_report(model, p, chi_h[0], chi_h[k - 1]).c_tilde}};
        }
        lip.push_back(entry);
    }
    report["lipschitz"] = {
        {"reparametrised", lip},
        {"unweighted_bound",
         {{"k1", {{"continuum", lipschitz_bound(model, chi_c[0], chi_c[0])},
                  {"discrete", lipschitz_bound(model, chi_h[0], chi_h[0])}}},
          {"k2", {{"continuum", lipschitz_bound(model, chi_c[0], chi_c[1])},
                  {"discrete", lipschitz_bound(model, chi_h[0], chi_h[1])}}}}}};
    return report;
}

} // namespace specgap
