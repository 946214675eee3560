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

#include "oracles.hpp"
#include "specgap/error.hpp"
#include "specgap/qmc.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

using namespace specgap;

namespace {

using Row = std::vector<double>;

std::multiset<Row> lattice_prefix(const LatticeSequence &seq, int m) {
    std::multiset<Row> rows;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
        const auto p = seq.point(i);
        Row r(p.values().begin(), p.values().end());
        for (auto &v : r)
            v += 0.5;
        rows.insert(r);
    }
    return rows;
}

std::multiset<Row> direct_lattice(const std::vector<std::uint64_t> &z, int m) {
    std::multiset<Row> rows;
    const std::uint64_t n = std::uint64_t{1} << m;
    for (std::uint64_t k = 0; k < n; ++k)
        rows.insert(oracle::direct_lattice_point(k, z, n));
    return rows;
}

} // namespace

TEST_CASE("splitmix64 matches an independent reference") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xDEADBEEFULL, ~0ULL}) {
        SplitMix64 a(seed);
        std::uint64_t state = seed;
        for (int i = 0; i < 100; ++i)
            CHECK(a.next() == oracle::splitmix64_reference(state));
    }
    SplitMix64 u(9);
    for (int i = 0; i < 10000; ++i) {
        const double v = u.next_unit();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("random shift") {
    const auto a = random_shift(1, 100);
    const auto b = random_shift(2, 100);
    CHECK(a != b);
    CHECK(a == random_shift(1, 100));
    for (double v : a) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
    std::uint64_t state = 0;
    CHECK(random_shift(0, 1)[0] == static_cast<double>(oracle::splitmix64_reference(state) >> 11) * 0x1.0p-53);
    CHECK_THROWS_AS(random_shift(0, 0), InvalidArgument);
}

TEST_CASE("radical inverse") {
    CHECK(radical_inverse_base2(0, 20) == 0.0);
    CHECK(radical_inverse_base2(1, 20) == 0.5);
    CHECK(radical_inverse_base2(3, 20) == 0.75);
    CHECK(radical_inverse_base2(2, 20) == 0.25);
    CHECK(radical_inverse_base2(0, 0) == 0.0);
    CHECK_THROWS_AS(radical_inverse_base2(1 << 20, 20), InvalidArgument);
    CHECK_THROWS_AS(radical_inverse_base2(0, 33), InvalidArgument);
}

TEST_CASE("lattice points: analytic rows") {
    const auto seq = LatticeSequence::unshifted({1, 3, 5, 7}, 10);
    const auto p0 = seq.point(0);
    for (double v : p0.values())
        CHECK(v == -0.5);
    const auto p1 = seq.point(1);
    for (double v : p1.values())
        CHECK(v == 0.0);
    const auto two = LatticeSequence::unshifted({1, 3}, 20);
    const auto p3 = two.point(3);
    CHECK(p3[0] == 0.25);
    CHECK(p3[1] == -0.25);
    CHECK_THROWS_AS(seq.point(1024), InvalidArgument);
}

TEST_CASE("lattice: construction errors") {
    CHECK_THROWS_AS(LatticeSequence::unshifted({1, 4}, 8), InvalidArgument);
    CHECK_THROWS_AS(LatticeSequence::unshifted({}, 8), InvalidArgument);
    CHECK_THROWS_AS(LatticeSequence::unshifted({1}, 33), InvalidArgument);
    CHECK_THROWS_AS(LatticeSequence({1, 3}, 8, {0.1}), InvalidArgument);
    CHECK_THROWS_AS(LatticeSequence({1, 3}, 8, {0.1, 1.0}), InvalidArgument);
    // N = 1 is allowed
    const auto one = LatticeSequence::unshifted({1}, 0);
    CHECK(one.size() == 1);
    CHECK(one.point(0)[0] == -0.5);
}

TEST_CASE("prefix-lattice property, exhaustive for m <= 8") {
    const std::vector<std::vector<std::uint64_t>> toys = {
        {1}, {1, 3}, {1, 5, 7}, {1, 19, 27, 121}, {3, 11, 77, 201}};
    for (const auto &z : toys) {
        const auto seq = LatticeSequence::unshifted(z, 8);
        for (int m = 0; m <= 8; ++m) {
            CAPTURE(m);
            CHECK(lattice_prefix(seq, m) == direct_lattice(z, m));
        }
    }
}

TEST_CASE("all points distinct when z_1 is odd") {
    for (int m_max = 1; m_max <= 10; ++m_max) {
        const auto seq = LatticeSequence::unshifted({1, 3, 9}, m_max);
        std::set<double> first;
        for (std::uint64_t i = 0; i < seq.size(); ++i)
            first.insert(seq.point(i)[0]);
        CHECK(first.size() == seq.size());
    }
}

TEST_CASE("shifted set is the unshifted set translated mod 1") {
    const std::vector<std::uint64_t> z{1, 7, 13};
    const std::vector<double> shift{0.125, 0.3, 0.8125};
    for (int m = 0; m <= 6; ++m) {
        const auto plain = LatticeSequence::unshifted(z, m);
        const auto shifted = LatticeSequence(z, m, shift);
        for (std::uint64_t i = 0; i < plain.size(); ++i) {
            const auto a = plain.point(i), b = shifted.point(i);
            for (int j = 0; j < 3; ++j) {
                double t = a[j] + 0.5 + shift[static_cast<std::size_t>(j)];
                t -= std::floor(t);
                CHECK(b[j] + 0.5 == doctest::Approx(t).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("lattice determinism") {
    const auto z = korobov_vector(kDefaultKorobovMultiplier, 100, 20);
    const auto a = LatticeSequence::with_seed(z, 20, 7);
    const auto b = LatticeSequence::with_seed(z, 20, 7);
    for (std::uint64_t i : {0ULL, 1ULL, 12345ULL, (1ULL << 20) - 1}) {
        const auto pa = a.point(i), pb = b.point(i);
        CHECK(std::vector<double>(pa.values().begin(), pa.values().end()) ==
              std::vector<double>(pb.values().begin(), pb.values().end()));
        for (double v : pa.values()) {
            CHECK(v >= -0.5);
            CHECK(v < 0.5);
        }
    }
}

TEST_CASE("Korobov vector") {
    const auto z = korobov_vector(5, 4, 4);
    CHECK(z == std::vector<std::uint64_t>{1, 5, 9, 13});
    const auto big = korobov_vector(kDefaultKorobovMultiplier, 100, 20);
    REQUIRE(big.size() == 100);
    for (auto v : big) {
        CHECK(v % 2 == 1);
        CHECK(v < (1u << 20));
    }
    CHECK_THROWS_AS(korobov_vector(4, 3, 10), InvalidArgument);
    // m_max = 0 gives the all-ones vector
    CHECK(korobov_vector(3, 3, 0) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("generating vector parsing") {
    auto one = parse_generating_vector("1\n433461\n315689\n");
    CHECK(one.values == std::vector<std::uint64_t>{1, 433461, 315689});
    CHECK_FALSE(one.has_even_entries);

    auto two = parse_generating_vector("1 1\n2 433461\n");
    CHECK(two.values == std::vector<std::uint64_t>{1, 433461});

    auto commented = parse_generating_vector("# header\n\n1  # first\n3\r\n  5\n");
    CHECK(commented.values == std::vector<std::uint64_t>{1, 3, 5});

    auto even = parse_generating_vector("1\n4\n");
    CHECK(even.has_even_entries);

    CHECK_THROWS_AS(parse_generating_vector(""), ParseError);
    CHECK_THROWS_AS(parse_generating_vector("# only a comment\n"), ParseError);
    try {
        parse_generating_vector("1\n3\nfive\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_generating_vector("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_generating_vector("-7\n"), ParseError);
    CHECK_THROWS_AS(parse_generating_vector("0\n"), ParseError);

    CHECK(one.first(2) == std::vector<std::uint64_t>{1, 433461});
    CHECK_THROWS_AS(one.first(4), DomainError);
}

TEST_CASE("generating vector files") {
    const std::string path = "test_qmc_genvec.txt";
    {
        std::ofstream out(path);
        out << "1 1\n2 7\n3 11\n";
    }
    CHECK(load_generating_vector(path).values == std::vector<std::uint64_t>{1, 7, 11});
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_generating_vector("does/not/exist.txt"), IoError);
}

TEST_CASE("vector checksum") {
    // FNV-1a 64 of zero bytes is the offset basis
    CHECK(vector_checksum({}) == 0xcbf29ce484222325ULL);
    CHECK(vector_checksum({1, 3}) != vector_checksum({3, 1}));
    CHECK(vector_checksum({1, 3}) == vector_checksum({1, 3}));
}
