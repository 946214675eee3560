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

#include "specgap/qmc.hpp"

#include "specgap/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace specgap {

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

void check_m_max(int m_max) {
    if (m_max < 0 || m_max > 32)
        throw InvalidArgument("m_max must lie in 0..32, got " + std::to_string(m_max));
}

std::uint64_t bit_reverse(std::uint64_t i, int bits) {
    std::uint64_t r = 0;
    for (int b = 0; b < bits; ++b) {
        r = (r << 1) | (i & 1U);
        i >>= 1;
    }
    return r;
}

} // namespace

double radical_inverse_base2(std::uint64_t i, int m_max) {
    check_m_max(m_max);
    if (i >= (std::uint64_t{1} << m_max))
        throw InvalidArgument("index " + std::to_string(i) + " outside 0..2^" +
                              std::to_string(m_max) + "-1");
    return std::ldexp(static_cast<double>(bit_reverse(i, m_max)), -m_max);
}

std::vector<double> random_shift(std::uint64_t seed, int s) {
    if (s < 1)
        throw InvalidArgument("shift dimension must be >= 1");
    SplitMix64 rng(seed);
    std::vector<double> shift(static_cast<std::size_t>(s));
    for (double &v : shift)
        v = rng.next_unit();
    return shift;
}

LatticeSequence::LatticeSequence(std::vector<std::uint64_t> z, int m_max, std::vector<double> shift)
    : z_(std::move(z)), m_max_(m_max), shift_(std::move(shift)) {
    check_m_max(m_max);
    if (z_.empty())
        throw InvalidArgument("generating vector is empty");
    if (shift_.size() != z_.size())
        throw InvalidArgument("shift and generating vector differ in dimension");
    for (std::size_t j = 0; j < z_.size(); ++j) {
        if (z_[j] % 2 == 0)
            throw InvalidArgument("generating vector entry z_" + std::to_string(j + 1) + " = " +
                                  std::to_string(z_[j]) + " is even");
        if (!(shift_[j] >= 0.0 && shift_[j] < 1.0))
            throw InvalidArgument("shift components must lie in [0, 1)");
    }
}

LatticeSequence LatticeSequence::with_seed(std::vector<std::uint64_t> z, int m_max, std::uint64_t seed) {
    const int s = static_cast<int>(z.size());
    return LatticeSequence(std::move(z), m_max, random_shift(seed, s));
}

LatticeSequence LatticeSequence::unshifted(std::vector<std::uint64_t> z, int m_max) {
    std::vector<double> zero(z.size(), 0.0);
    return LatticeSequence(std::move(z), m_max, std::move(zero));
}

ParameterPoint LatticeSequence::point(std::uint64_t i) const {
    if (i >= size())
        throw InvalidArgument("lattice index " + std::to_string(i) + " outside 0..2^" +
                              std::to_string(m_max_) + "-1");
    const std::uint64_t r = bit_reverse(i, m_max_);
    const std::uint64_t mask = m_max_ == 32 ? 0xFFFFFFFFULL : (std::uint64_t{1} << m_max_) - 1;
    std::vector<double> y(z_.size());
    for (std::size_t j = 0; j < z_.size(); ++j) {
        // frac(r z_j / 2^m) computed exactly in integers
        const std::uint64_t k = (r * (z_[j] & mask)) & mask;
        double v = std::ldexp(static_cast<double>(k), -m_max_) + shift_[j];
        if (v >= 1.0)
            v -= 1.0;
        y[j] = v - 0.5;
    }
    return ParameterPoint(std::move(y));
}

std::vector<std::uint64_t> GeneratingVector::first(int s) const {
    if (s < 1 || static_cast<std::size_t>(s) > values.size())
        throw DomainError("generating vector has " + std::to_string(values.size()) +
                          " entries, " + std::to_string(s) + " requested");
    return {values.begin(), values.begin() + s};
}

GeneratingVector parse_generating_vector(std::string_view text) {
    GeneratingVector out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        if (tokens.size() > 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 1 or 2 columns, got " +
                                 std::to_string(tokens.size()),
                             line_no);
        const std::string &tok = tokens.back();
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0)
            throw ParseError("line " + std::to_string(line_no) + ": '" + tok +
                                 "' is not a positive integer",
                             line_no);
        if (value % 2 == 0)
            out.has_even_entries = true;
        out.values.push_back(value);
    }
    if (out.values.empty())
        throw ParseError("generating vector file holds no entries");
    return out;
}

GeneratingVector load_generating_vector(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open generating vector file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_generating_vector(buf.str());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

std::vector<std::uint64_t> korobov_vector(std::uint64_t a, int s, int m_max) {
    check_m_max(m_max);
    if (s < 1)
        throw InvalidArgument("dimension must be >= 1");
    if (a % 2 == 0)
        throw InvalidArgument("Korobov multiplier must be odd");
    const std::uint64_t modulus_mask = m_max == 32 ? 0xFFFFFFFFULL : (std::uint64_t{1} << m_max) - 1;
    std::vector<std::uint64_t> z(static_cast<std::size_t>(s));
    std::uint64_t power = 1;
    const std::uint64_t base = a & modulus_mask;
    for (auto &v : z) {
        v = m_max == 0 ? 1 : power;
        power = (power * base) & modulus_mask;
    }
    return z;
}

std::uint64_t vector_checksum(const std::vector<std::uint64_t> &z) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (std::uint64_t v : z) {
        for (int b = 0; b < 8; ++b) {
            hash ^= (v >> (8 * b)) & 0xFFU;
            hash *= 0x100000001b3ULL;
        }
    }
    return hash;
}

} // namespace specgap
