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

#include "specgap/config.hpp"

#include "specgap/analysis.hpp"
#include "specgap/error.hpp"
#include "specgap/svg.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace specgap {

namespace {

using nlohmann::json;

const char *kToolVersion = "specgap 1.0.0";

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw ParseError("config field '" + path + "': " + what);
}

void reject_unknown(const json &obj, const std::string &path, std::initializer_list<const char *> keys) {
    for (const auto &[key, value] : obj.items()) {
        bool known = false;
        for (const char *k : keys)
            known = known || key == k;
        if (!known)
            fail(path.empty() ? key : path + "." + key, "unknown key");
    }
}

const json *section(const json &doc, const char *key) {
    if (!doc.contains(key))
        return nullptr;
    const auto &v = doc.at(key);
    if (!v.is_object())
        fail(key, "expected an object");
    return &v;
}

void read_number(const json &obj, const std::string &path, const char *key, double &out) {
    if (!obj.contains(key))
        return;
    const auto &v = obj.at(key);
    if (!v.is_number())
        fail(path + "." + key, "expected a number");
    out = v.get<double>();
}

template <typename Int>
void read_integer(const json &obj, const std::string &path, const char *key, Int &out) {
    if (!obj.contains(key))
        return;
    const auto &v = obj.at(key);
    if (v.is_number_unsigned()) {
        out = static_cast<Int>(v.get<std::uint64_t>());
    } else if (v.is_number_integer()) {
        const auto i = v.get<std::int64_t>();
        if (i < 0 && std::is_unsigned_v<Int>)
            fail(path + "." + key, "expected a non-negative integer");
        out = static_cast<Int>(i);
    } else {
        fail(path + "." + key, "expected an integer");
    }
}

void read_bool(const json &obj, const std::string &path, const char *key, bool &out) {
    if (!obj.contains(key))
        return;
    const auto &v = obj.at(key);
    if (!v.is_boolean())
        fail(path + "." + key, "expected true or false");
    out = v.get<bool>();
}

void read_path(const json &obj, const std::string &path, const char *key, std::optional<std::string> &out) {
    if (!obj.contains(key))
        return;
    const auto &v = obj.at(key);
    if (v.is_null()) {
        out.reset();
        return;
    }
    if (!v.is_string())
        fail(path + "." + key, "expected a string path or null");
    out = v.get<std::string>();
}

std::uint64_t fnv1a(const std::string &bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

} // namespace

std::string hex64(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << value;
    return out.str();
}

CoefficientModel SurveyConfig::model() const {
    return CoefficientModel(coefficient.family, coefficient.a0, coefficient.c0, coefficient.s,
                            coefficient.a_star);
}

std::vector<std::uint64_t> SurveyConfig::generating_vector() const {
    if (qmc.genvec)
        return load_generating_vector(*qmc.genvec).first(coefficient.s);
    return korobov_vector(qmc.korobov_a, coefficient.s, qmc.m_max);
}

std::string SurveyConfig::genvec_source() const {
    if (qmc.genvec)
        return "file:" + *qmc.genvec;
    return "korobov a=" + std::to_string(qmc.korobov_a) + " (fallback, not a CBC vector)";
}

LatticeSequence SurveyConfig::lattice() const {
    auto z = generating_vector();
    if (qmc.shift)
        return LatticeSequence::with_seed(std::move(z), qmc.m_max, qmc.seed);
    return LatticeSequence::unshifted(std::move(z), qmc.m_max);
}

void SurveyConfig::validate() const {
    (void)model();
    if (mesh.n < 3)
        throw InvalidArgument("mesh.n must be >= 3 (two interior eigenvalues needed), got " +
                              std::to_string(mesh.n));
    if (qmc.m_max < 0 || qmc.m_max > 32)
        throw InvalidArgument("qmc.m_max must lie in 0..32");
    if (!(solver.abs_tol > 0.0) || !(solver.rel_tol > 0.0))
        throw InvalidArgument("solver tolerances must be positive");
    if (workers < 1)
        throw InvalidArgument("workers must be >= 1");
    if (!qmc.genvec && qmc.korobov_a % 2 == 0)
        throw InvalidArgument("qmc.korobov.a must be odd");
}

json SurveyConfig::canonical_json() const {
    json out;
    out["coefficient"] = {{"family", std::string(to_string(coefficient.family))},
                          {"a0", coefficient.a0},
                          {"c0", coefficient.c0},
                          {"s", coefficient.s},
                          {"a_star", coefficient.a_star}};
    out["mesh"] = {{"n", mesh.n}};
    out["qmc"] = {{"genvec_checksum", hex64(vector_checksum(generating_vector()))},
                  {"m_max", qmc.m_max},
                  {"seed", qmc.seed},
                  {"shift", qmc.shift}};
    out["solver"] = {{"abs_tol", solver.abs_tol},
                     {"rel_tol", solver.rel_tol},
                     {"residual_audit", solver.residual_audit}};
    out["survey"] = {{"fail_policy", std::string(to_string(policy()))}};
    return out;
}

std::string SurveyConfig::hash() const { return hex64(fnv1a(canonical_json().dump())); }

Provenance SurveyConfig::provenance() const {
    const auto z = generating_vector();
    return {
        {"tool", kToolVersion},
        {"config_hash", hash()},
        {"family", std::string(to_string(coefficient.family))},
        {"a0", format_double(coefficient.a0)},
        {"c0", format_double(coefficient.c0)},
        {"s", std::to_string(coefficient.s)},
        {"a_star", format_double(coefficient.a_star)},
        {"n", std::to_string(mesh.n)},
        {"h", format_double(1.0 / mesh.n)},
        {"m_max", std::to_string(qmc.m_max)},
        {"seed", std::to_string(qmc.seed)},
        {"shift", qmc.shift ? "true" : "false"},
        {"genvec", genvec_source()},
        {"genvec_checksum", hex64(vector_checksum(z))},
        {"fail_policy", std::string(to_string(policy()))},
    };
}

SurveyConfig parse_config(const json &doc, const std::string &base_dir) {
    if (!doc.is_object())
        throw ParseError("config must be a JSON object");
    reject_unknown(doc, "", {"coefficient", "mesh", "qmc", "solver", "survey", "output", "description"});
    SurveyConfig cfg;

    if (const auto *c = section(doc, "coefficient")) {
        reject_unknown(*c, "coefficient", {"family", "a0", "c0", "s", "a_star"});
        if (c->contains("family")) {
            if (!c->at("family").is_string())
                fail("coefficient.family", "expected \"affine\" or \"lognormal\"");
            try {
                cfg.coefficient.family = family_from_string(c->at("family").get<std::string>());
            } catch (const InvalidArgument &e) {
                fail("coefficient.family", e.what());
            }
        }
        read_number(*c, "coefficient", "a0", cfg.coefficient.a0);
        read_number(*c, "coefficient", "c0", cfg.coefficient.c0);
        read_integer(*c, "coefficient", "s", cfg.coefficient.s);
        read_number(*c, "coefficient", "a_star", cfg.coefficient.a_star);
    }
    if (const auto *m = section(doc, "mesh")) {
        reject_unknown(*m, "mesh", {"n"});
        read_integer(*m, "mesh", "n", cfg.mesh.n);
    }
    if (const auto *q = section(doc, "qmc")) {
        reject_unknown(*q, "qmc", {"genvec", "korobov", "m_max", "seed", "shift"});
        read_path(*q, "qmc", "genvec", cfg.qmc.genvec);
        if (q->contains("korobov")) {
            const auto &k = q->at("korobov");
            if (!k.is_object())
                fail("qmc.korobov", "expected an object");
            reject_unknown(k, "qmc.korobov", {"a"});
            read_integer(k, "qmc.korobov", "a", cfg.qmc.korobov_a);
        }
        read_integer(*q, "qmc", "m_max", cfg.qmc.m_max);
        read_integer(*q, "qmc", "seed", cfg.qmc.seed);
        read_bool(*q, "qmc", "shift", cfg.qmc.shift);
    }
    if (const auto *s = section(doc, "solver")) {
        reject_unknown(*s, "solver", {"abs_tol", "rel_tol", "residual_audit"});
        read_number(*s, "solver", "abs_tol", cfg.solver.abs_tol);
        read_number(*s, "solver", "rel_tol", cfg.solver.rel_tol);
        read_bool(*s, "solver", "residual_audit", cfg.solver.residual_audit);
    }
    if (const auto *s = section(doc, "survey")) {
        reject_unknown(*s, "survey", {"fail_policy", "dump_gaps"});
        if (s->contains("fail_policy") && !s->at("fail_policy").is_null()) {
            if (!s->at("fail_policy").is_string())
                fail("survey.fail_policy", "expected \"strict\" or \"record\"");
            try {
                cfg.survey.fail_policy = fail_policy_from_string(s->at("fail_policy").get<std::string>());
            } catch (const InvalidArgument &e) {
                fail("survey.fail_policy", e.what());
            }
        }
        read_path(*s, "survey", "dump_gaps", cfg.survey.dump_gaps);
    }
    if (const auto *o = section(doc, "output")) {
        reject_unknown(*o, "output", {"levels_csv", "report_json", "svg"});
        read_path(*o, "output", "levels_csv", cfg.output.levels_csv);
        read_path(*o, "output", "report_json", cfg.output.report_json);
        read_path(*o, "output", "svg", cfg.output.svg);
    }

    if (cfg.qmc.genvec && !base_dir.empty()) {
        const std::filesystem::path p(*cfg.qmc.genvec);
        if (p.is_relative())
            cfg.qmc.genvec = (std::filesystem::path(base_dir) / p).lexically_normal().string();
    }
    try {
        cfg.validate();
    } catch (const InvalidArgument &e) {
        throw ParseError(std::string("invalid config: ") + e.what());
    }
    return cfg;
}

SurveyConfig parse_config_text(const std::string &text, const std::string &base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc, base_dir);
}

SurveyConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str(), std::filesystem::path(path).parent_path().string());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

SurveyResult run_configured_survey(const SurveyConfig &config) {
    config.validate();
    const GapSampler sampler(config.uniform_mesh(), config.model(), config.tolerance());
    SurveyOptions options;
    options.policy = config.policy();
    options.workers = config.workers;
    options.keep_samples = config.survey.dump_gaps.has_value();
    options.residual_audit = config.solver.residual_audit;
    auto result = run_survey(sampler, config.lattice(), options);
    result.provenance = config.provenance();
    return result;
}

void write_survey_outputs(const SurveyConfig &config, const SurveyResult &result) {
    if (config.output.levels_csv)
        write_levels_csv(result.levels, *config.output.levels_csv, result.provenance);
    if (config.survey.dump_gaps)
        write_samples_csv(result.samples, *config.survey.dump_gaps, result.provenance);
    if (config.output.svg) {
        const auto &c = config.coefficient;
        std::ostringstream title;
        title << to_string(c.family) << " coefficient, c0 = " << format_double(c.c0);
        if (c.family == Family::LogNormal)
            title << ", a* = " << format_double(c.a_star);
        title << ", s = " << c.s << ", h = 1/" << config.mesh.n;
        write_survey_svg(result.levels, result.fit, title.str(), *config.output.svg, result.provenance);
    }
    if (config.output.report_json) {
        std::ofstream out(*config.output.report_json);
        if (!out)
            throw IoError("cannot open '" + *config.output.report_json + "' for writing");
        out << configured_theory_report(config).dump(2) << '\n';
        if (!out)
            throw IoError("failed writing '" + *config.output.report_json + "'");
    }
}

json configured_theory_report(const SurveyConfig &config) {
    auto report = theory_report(config.model(), config.uniform_mesh());
    json prov = json::object();
    for (const auto &[k, v] : config.provenance())
        prov[k] = v;
    report["provenance"] = prov;
    return report;
}

std::string points_csv(const SurveyConfig &config, std::uint64_t count) {
    const auto lattice = config.lattice();
    if (count > lattice.size())
        throw InvalidArgument("requested " + std::to_string(count) + " points, the lattice has 2^" +
                              std::to_string(lattice.m_max()) + " = " + std::to_string(lattice.size()));
    std::ostringstream out;
    for (const auto &[k, v] : config.provenance())
        out << "# " << k << ": " << v << '\n';
    out << "index";
    for (int j = 1; j <= lattice.dim(); ++j)
        out << ",y" << j;
    out << '\n';
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto y = lattice.point(i);
        out << i;
        for (double v : y.values())
            out << ',' << format_double(v);
        out << '\n';
    }
    return out.str();
}

} // namespace specgap
