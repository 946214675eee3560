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

#include "specgap/survey.hpp"

#include "specgap/error.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace specgap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kFailureCap = 16;
constexpr std::uint64_t kChunkSize = 2048;

} // namespace

GapSampler::GapSampler(const UniformMesh &mesh, const CoefficientModel &model, ToleranceSpec tol)
    : assembler_(mesh, model), mass_(assemble_mass(mesh)), tol_(tol),
      chi1_(discrete_laplacian_eigenvalue(mesh, 1)),
      chi2_(discrete_laplacian_eigenvalue(mesh, mesh.dof() >= 2 ? 2 : 1)) {
    if (mesh.dof() < 2)
        throw InvalidArgument("a spectral gap needs at least 2 interior nodes (n >= 3)");
}

GapSample GapSampler::sample(std::uint64_t index, const ParameterPoint &y, Extras *extras) const {
    CoefficientRange range;
    const auto stiffness = assembler_.assemble(y, &range);

    const bool audit = extras && extras->audit;
    const Interval guess{range.lo * chi1_ * (1.0 - 1e-6), range.hi * chi2_ * (1.0 + 1e-6)};
    EigenResult eig;
    try {
        eig = smallest_eigenvalues(stiffness, mass_, 2, guess, tol_, audit);
    } catch (const BracketError &) {
        eig = smallest_eigenvalues(stiffness, mass_, 2, spectral_enclosure(stiffness, mass_), tol_,
                                   audit);
    }

    GapSample out;
    out.index = index;
    out.lambda1 = eig.values[0];
    out.lambda2 = eig.values[1];
    out.gap = out.lambda2 - out.lambda1;
    out.coeff_lo = range.lo;
    out.coeff_hi = range.hi;

    const double chi[2] = {chi1_, chi2_};
    for (int k = 0; k < 2; ++k) {
        const double lambda = eig.values[static_cast<std::size_t>(k)];
        const double lower = range.lo * chi[k] * (1.0 - kBracketSlack);
        const double upper = range.hi * chi[k] * (1.0 + kBracketSlack);
        if (!(lambda >= lower && lambda <= upper)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "bracket invariant violated at index " << index << ": lambda_" << (k + 1)
                << " = " << lambda << " outside [" << lower << ", " << upper << "]";
            throw SampleFailed(msg.str());
        }
    }

    if (extras) {
        extras->clustered = eig.clustered;
        if (audit) {
            extras->residual = 0.0;
            for (double r : eig.residuals)
                extras->residual = std::isnan(r) ? r : std::max(extras->residual, r);
        }
    }
    return out;
}

GapSample sample_gap(const CoefficientModel &model, const UniformMesh &mesh,
                     const ParameterPoint &y, const ToleranceSpec &tol) {
    return GapSampler(mesh, model, tol).sample(0, y);
}

std::string_view to_string(FailPolicy policy) {
    return policy == FailPolicy::Strict ? "strict" : "record";
}

FailPolicy fail_policy_from_string(std::string_view name) {
    if (name == "strict")
        return FailPolicy::Strict;
    if (name == "record")
        return FailPolicy::Record;
    throw InvalidArgument("unknown fail policy '" + std::string(name) + "' (strict|record)");
}

FailPolicy default_fail_policy(Family family) {
    return family == Family::Affine ? FailPolicy::Strict : FailPolicy::Record;
}

namespace {

struct Chunk {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    int segment = 0;
};

struct ChunkResult {
    double best = kNaN;
    std::uint64_t argmin = 0;
    std::uint64_t failed = 0;
    std::vector<FailedSample> failures;
    std::uint64_t clustered = 0;
    std::uint64_t audited = 0;
    double max_residual = 0.0;
    std::vector<GapSample> samples;
    std::exception_ptr error;
};

bool is_sample_failure(const Error &e) {
    switch (e.code()) {
    case ErrorCode::Coercivity:
    case ErrorCode::Domain:
    case ErrorCode::Bracket:
    case ErrorCode::Convergence:
    case ErrorCode::Stagnation:
    case ErrorCode::SampleFailed:
        return true;
    default:
        return false;
    }
}

// Segment 0 is index 0; segment m >= 1 covers [2^(m-1), 2^m).
std::vector<Chunk> make_chunks(int m_max) {
    std::vector<Chunk> chunks;
    chunks.push_back({0, 1, 0});
    for (int m = 1; m <= m_max; ++m) {
        const std::uint64_t lo = std::uint64_t{1} << (m - 1);
        const std::uint64_t hi = std::uint64_t{1} << m;
        for (std::uint64_t b = lo; b < hi; b += kChunkSize)
            chunks.push_back({b, std::min(hi, b + kChunkSize), m});
    }
    return chunks;
}

void run_chunk(const GapSampler &sampler, const LatticeSequence &lattice, const SurveyOptions &options,
               const Chunk &chunk, ChunkResult &out, std::atomic<bool> &stop,
               std::atomic<std::uint64_t> &first_failure) {
    try {
        for (std::uint64_t i = chunk.begin; i < chunk.end; ++i) {
            // strict mode still evaluates every index below the lowest known
            // failure, so the reported failure does not depend on scheduling
            if (stop.load(std::memory_order_relaxed) || i > first_failure.load(std::memory_order_relaxed))
                return;
            GapSampler::Extras extras;
            extras.audit = options.residual_audit && i % options.audit_stride == 0;
            try {
                const auto s = sampler.sample(i, lattice.point(i), &extras);
                if (std::isnan(out.best) || s.gap < out.best) {
                    out.best = s.gap;
                    out.argmin = i;
                }
                if (extras.clustered)
                    ++out.clustered;
                if (extras.audit) {
                    ++out.audited;
                    if (std::isnan(extras.residual) || extras.residual > out.max_residual)
                        out.max_residual = extras.residual;
                }
                if (options.keep_samples)
                    out.samples.push_back(s);
            } catch (const Error &e) {
                if (!is_sample_failure(e))
                    throw;
                ++out.failed;
                if (out.failures.size() < kFailureCap)
                    out.failures.push_back({i, e.what()});
                if (options.policy == FailPolicy::Strict) {
                    auto seen = first_failure.load();
                    while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                    }
                    return;
                }
            }
        }
    } catch (...) {
        out.error = std::current_exception();
        stop.store(true);
    }
}

} // namespace

SurveyResult run_survey(const GapSampler &sampler, const LatticeSequence &lattice,
                        const SurveyOptions &options) {
    if (options.workers < 1)
        throw InvalidArgument("worker count must be >= 1");
    if (options.audit_stride == 0)
        throw InvalidArgument("audit stride must be >= 1");

    const int m_max = lattice.m_max();
    const auto chunks = make_chunks(m_max);
    std::vector<ChunkResult> results(chunks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> first_failure{std::numeric_limits<std::uint64_t>::max()};

    auto worker = [&] {
        for (std::size_t c = next.fetch_add(1); c < chunks.size(); c = next.fetch_add(1))
            run_chunk(sampler, lattice, options, chunks[c], results[c], stop, first_failure);
    };
    const auto thread_count = static_cast<std::size_t>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), chunks.size()));
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t)
            pool.emplace_back(worker);
    }

    for (const auto &r : results)
        if (r.error)
            std::rethrow_exception(r.error);

    SurveyResult result;
    result.n_star = lattice.size();
    for (const auto &r : results) {
        result.failed += r.failed;
        result.failures.insert(result.failures.end(), r.failures.begin(), r.failures.end());
        result.clustered += r.clustered;
        result.audited += r.audited;
        if (std::isnan(r.max_residual) || r.max_residual > result.max_audit_residual)
            result.max_audit_residual = r.max_residual;
        result.samples.insert(result.samples.end(), r.samples.begin(), r.samples.end());
    }
    std::sort(result.failures.begin(), result.failures.end(),
              [](const FailedSample &a, const FailedSample &b) { return a.index < b.index; });
    if (result.failures.size() > kFailureCap)
        result.failures.resize(kFailureCap);

    if (options.policy == FailPolicy::Strict && result.failed > 0) {
        const auto &first = result.failures.front();
        throw SampleFailed("sample " + std::to_string(first.index) +
                           " failed under strict policy: " + first.reason);
    }

    // prefix minima; chunks are ordered by index and ties keep the lowest
    double best = kNaN;
    std::uint64_t argmin = 0;
    std::size_t c = 0;
    for (int m = 0; m <= m_max; ++m) {
        for (; c < chunks.size() && chunks[c].segment == m; ++c) {
            const auto &r = results[c];
            if (!std::isnan(r.best) && (std::isnan(best) || r.best < best)) {
                best = r.best;
                argmin = r.argmin;
            }
        }
        result.levels.push_back({m, std::uint64_t{1} << m, best, argmin, 0.0});
    }
    const double final_delta = result.levels.back().delta;
    for (auto &level : result.levels)
        level.diff = level.delta - final_delta;

    try {
        result.fit = fit_levels(result.levels);
    } catch (const FitError &e) {
        result.fit_note = e.what();
    }
    return result;
}

std::string format_double(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw InvalidArgument("cannot format double");
    return {buf, ptr};
}

double parse_double(std::string_view text) {
    if (text == "nan")
        return kNaN;
    if (text == "inf")
        return std::numeric_limits<double>::infinity();
    if (text == "-inf")
        return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("'" + std::string(text) + "' is not a number");
    return value;
}

namespace {

void write_provenance(std::ostream &out, const Provenance &provenance) {
    for (const auto &[key, value] : provenance)
        out << "# " << key << ": " << value << '\n';
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

std::uint64_t parse_uint(std::string_view text, int line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(text) +
                             "' is not a non-negative integer",
                         line);
    return value;
}

} // namespace

std::string levels_csv(std::span<const SurveyLevel> levels, const Provenance &provenance) {
    std::ostringstream out;
    write_provenance(out, provenance);
    out << "m,N,delta_N,argmin_index,diff\n";
    for (const auto &l : levels)
        out << l.m << ',' << l.n << ',' << format_double(l.delta) << ',' << l.argmin << ','
            << format_double(l.diff) << '\n';
    return out.str();
}

void write_levels_csv(std::span<const SurveyLevel> levels, const std::string &path,
                      const Provenance &provenance) {
    write_file(path, levels_csv(levels, provenance));
}

std::vector<SurveyLevel> parse_levels_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<SurveyLevel> levels;
    std::string line;
    int line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (!header) {
            if (line != "m,N,delta_N,argmin_index,diff")
                throw ParseError("line " + std::to_string(line_no) +
                                     ": expected header m,N,delta_N,argmin_index,diff",
                                 line_no);
            header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream row(line);
        for (std::string f; std::getline(row, f, ',');)
            fields.push_back(f);
        if (fields.size() != 5)
            throw ParseError("line " + std::to_string(line_no) + ": expected 5 columns, got " +
                                 std::to_string(fields.size()),
                             line_no);
        SurveyLevel l;
        try {
            l.m = static_cast<int>(parse_uint(fields[0], line_no));
            l.n = parse_uint(fields[1], line_no);
            l.delta = parse_double(fields[2]);
            l.argmin = parse_uint(fields[3], line_no);
            l.diff = parse_double(fields[4]);
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        levels.push_back(l);
    }
    if (!header)
        throw ParseError("levels CSV has no header");
    return levels;
}

std::vector<SurveyLevel> read_levels_csv(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open levels CSV '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_levels_csv(buf.str());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

void write_samples_csv(std::span<const GapSample> samples, const std::string &path,
                       const Provenance &provenance) {
    std::ostringstream out;
    write_provenance(out, provenance);
    out << "index,lambda1,lambda2,gap,coeff_lo,coeff_hi\n";
    for (const auto &s : samples)
        out << s.index << ',' << format_double(s.lambda1) << ',' << format_double(s.lambda2) << ','
            << format_double(s.gap) << ',' << format_double(s.coeff_lo) << ','
            << format_double(s.coeff_hi) << '\n';
    write_file(path, out.str());
}

PowerLawFit fit_levels(std::span<const SurveyLevel> levels) {
    std::vector<FitPoint> points;
    points.reserve(levels.size());
    for (const auto &l : levels)
        points.push_back({static_cast<double>(l.n), l.diff});
    return power_law_fit(points);
}

} // namespace specgap
