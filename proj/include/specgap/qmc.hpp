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

#include <cstdint>
#include <string_view>
#include <vector>

namespace specgap {

/// SplitMix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept;
    /// Top 53 bits mapped to [0, 1).
    double next_unit() noexcept;

private:
    std::uint64_t state_;
};

/// Bit reversal of i in m_max bits, divided by 2^m_max.
double radical_inverse_base2(std::uint64_t i, int m_max);

/// s shift components in [0,1) drawn from SplitMix64(seed).
std::vector<double> random_shift(std::uint64_t seed, int s);

/// Embedded base-2 rank-1 lattice rule with one random shift. Point i is
///
///   y_j = frac(phi(i) z_j + shift_j) - 1/2,
///
/// with phi the base-2 radical inverse, so each 2^m prefix is a complete
/// shifted lattice rule with 2^m points.
class LatticeSequence {
public:
    /// z must hold odd entries; 0 <= m_max <= 32.
    LatticeSequence(std::vector<std::uint64_t> z, int m_max, std::vector<double> shift);
    static LatticeSequence with_seed(std::vector<std::uint64_t> z, int m_max, std::uint64_t seed);
    static LatticeSequence unshifted(std::vector<std::uint64_t> z, int m_max);

    int dim() const noexcept { return static_cast<int>(z_.size()); }
    int m_max() const noexcept { return m_max_; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << m_max_; }
    const std::vector<std::uint64_t> &generating_vector() const noexcept { return z_; }
    const std::vector<double> &shift() const noexcept { return shift_; }

    /// Components in [-1/2, 1/2).
    ParameterPoint point(std::uint64_t i) const;

private:
    std::vector<std::uint64_t> z_;
    int m_max_;
    std::vector<double> shift_;
};

inline ParameterPoint lattice_point(const LatticeSequence &seq, std::uint64_t i) {
    return seq.point(i);
}

struct GeneratingVector {
    std::vector<std::uint64_t> values;
    /// True if any entry is even; such a vector loses base-2 extensibility.
    bool has_even_entries = false;

    /// First s entries; DomainError if fewer are available.
    std::vector<std::uint64_t> first(int s) const;
};

/// Parses a generating vector file: one integer per line, or "index value"
/// per line (value column taken). '#' starts a comment.
GeneratingVector parse_generating_vector(std::string_view text);
GeneratingVector load_generating_vector(const std::string &path);

/// Korobov vector z_j = a^(j-1) mod 2^m_max. Not a CBC-constructed vector;
/// a fallback when no generating-vector file is supplied.
std::vector<std::uint64_t> korobov_vector(std::uint64_t a, int s, int m_max);

/// Default Korobov multiplier used when no generating vector is given. Picked
/// by the shift-averaged worst-case error (product weights j^-2, s = 100) at
/// N = 2^8, 2^12, 2^16 over a random sample of odd candidates.
inline constexpr std::uint64_t kDefaultKorobovMultiplier = 938375;

/// FNV-1a 64 over the little-endian bytes of the entries.
std::uint64_t vector_checksum(const std::vector<std::uint64_t> &z);

} // namespace specgap
