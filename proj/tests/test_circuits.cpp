// Copyright 2026 The vlaq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch_amalgamated.hpp>

#include <numbers>

#include "oracle.hpp"
#include "vlaq/circuits.hpp"

using namespace vlaq;
using Catch::Matchers::WithinAbs;

namespace {

/// Plain 64-bit LCG written out by hand, independent of Lcg64.
struct HandLcg {
    std::uint64_t x;
    std::uint64_t step() {
        x = x * 6364136223846793005ULL + 1442695040888963407ULL;
        return x;
    }
    double uniform() { return static_cast<double>(step() >> 11) / 9007199254740992.0; }
};

oracle::Amps basis(unsigned n, std::size_t k) {
    oracle::Amps s(std::size_t{1} << n);
    s[k] = 1.0;
    return s;
}

bool same_gate(const Gate &a, const Gate &b) {
    return a.label == b.label && a.targets == b.targets &&
           a.controls == b.controls && a.params == b.params;
}

} // namespace

TEST_CASE("LCG reference sequence") {
    Lcg64 rng(1);
    CHECK(rng.next() == 7806831264735756412ULL);
    CHECK(rng.next() == 9396908728118811419ULL);
    CHECK(rng.next() == 11960119808228829710ULL);
    Lcg64 u(42);
    CHECK(u.uniform() == 0.5682303266439076);
    Lcg64 b(42);
    CHECK(b.below(10) == 5);
    HandLcg h{1234};
    Lcg64 l(1234);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(l.uniform() == h.uniform());
    }
}

TEST_CASE("gate counts") {
    CHECK(build_qft(3).size() == 7);
    for (unsigned n = 1; n <= 20; ++n) {
        CHECK(build_ghz(n).size() == n);
        CHECK(build_qft(n).size() == n + n * (n - 1) / 2 + n / 2);
    }
    CHECK(build_qv(6, 1).size() == 6 * 3 * 5);
    CHECK(build_qv(5, 1).size() == 5 * 2 * 5);
    CHECK(build_qrc(8, 4, 1).size() == 4 * 8 + 2 * 4 + 2 * 3);
    CHECK(build_qrc(8, 4, 1, false).size() == 32);
    CHECK(build_synthetic(10, 3).size() == 18);
    CHECK(build_synthetic(4, 3).empty());
}

TEST_CASE("generators are deterministic") {
    for (const auto &[a, b] : std::vector<std::pair<Circuit, Circuit>>{
             {build_qrc(7, 9, 5), build_qrc(7, 9, 5)},
             {build_qv(7, 5), build_qv(7, 5)}}) {
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(same_gate(a.gates()[i], b.gates()[i]));
        }
    }
    const auto x = build_qrc(7, 9, 5);
    const auto y = build_qrc(7, 9, 6);
    bool differs = false;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        differs = differs || !same_gate(x.gates()[i], y.gates()[i]);
    }
    CHECK(differs);
    CHECK(x.seed() == std::optional<std::uint64_t>{5});
}

TEST_CASE("qrc draws match a hand-rolled generator") {
    const unsigned n = 8;
    const unsigned depth = 4;
    const auto c = build_qrc(n, depth, 1);
    HandLcg h{1};
    std::size_t idx = 0;
    for (unsigned layer = 0; layer < depth; ++layer) {
        for (unsigned q = 0; q < n; ++q) {
            const auto kind = static_cast<unsigned>(h.uniform() * 3.0);
            const double angle = h.uniform() * 2.0 * std::numbers::pi;
            const auto &g = c.gates().at(idx++);
            CHECK(g.label == std::vector<std::string>{"rx", "ry", "rz"}[kind]);
            CHECK(g.targets == std::vector<unsigned>{q});
            REQUIRE(g.params.size() == 1);
            CHECK(g.params[0] == angle);
        }
        for (unsigned a = layer % 2; a + 1 < n; a += 2) {
            const auto &g = c.gates().at(idx++);
            CHECK(g.controls.size() + g.targets.size() == 2);
            const auto qs = g.qubits();
            CHECK(std::find(qs.begin(), qs.end(), a) != qs.end());
            CHECK(std::find(qs.begin(), qs.end(), a + 1) != qs.end());
        }
    }
    CHECK(idx == c.size());
}

TEST_CASE("ghz state") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto s = oracle::run(build_ghz(n));
        const double h = 1.0 / std::sqrt(2.0);
        oracle::Amps want(std::size_t{1} << n);
        want.front() = h;
        want.back() += h;
        CHECK(oracle::max_abs_diff(s, want) <= 1e-12);
    }
}

TEST_CASE("qft of |0> is uniform and of |x> is the DFT") {
    for (unsigned n = 1; n <= 7; ++n) {
        const auto c = build_qft(n);
        const std::size_t N = std::size_t{1} << n;
        const auto u = oracle::run(c);
        for (const auto a : u) {
            CHECK_THAT(a.real(), WithinAbs(1.0 / std::sqrt(double(N)), 1e-12));
            CHECK_THAT(a.imag(), WithinAbs(0.0, 1e-12));
        }
        for (std::size_t x : {std::size_t{1}, N / 2, N - 1}) {
            if (x >= N) {
                continue;
            }
            const auto out = oracle::run(c.gates(), basis(n, x));
            oracle::Amps dft(N);
            for (std::size_t k = 0; k < N; ++k) {
                const double ang = 2.0 * std::numbers::pi * double(x * k) / double(N);
                dft[k] = std::polar(1.0 / std::sqrt(double(N)), ang);
            }
            CHECK(oracle::max_abs_diff(out, dft) <= 1e-12);
        }
    }
}

TEST_CASE("grover amplifies the marked element") {
    const auto tiny = oracle::run(build_grover(3, 3, 1));
    double p = std::norm(tiny[3]) + std::norm(tiny[3 | 4]);
    CHECK(p >= 0.99);

    for (unsigned n = 5; n <= 11; ++n) {
        const std::uint64_t marked = (std::uint64_t{1} << (n - 1)) - 3;
        const auto s = oracle::run(build_grover(n, marked));
        const std::size_t hi = std::size_t{1} << (n - 1);
        p = std::norm(s[marked]) + std::norm(s[marked | hi]);
        CHECK(p >= 0.8);
    }

    const auto flat = oracle::run(build_grover(4, 2, 0));
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK_THAT(std::norm(flat[k]) + std::norm(flat[k | 8]), WithinAbs(1.0 / 8.0, 1e-12));
    }
    CHECK(grover_default_iterations(3) == 2);
    CHECK_THROWS_AS(build_grover(4, 8), Error);
    CHECK_THROWS_AS(build_grover(1, 0), Error);
}

TEST_CASE("quantum volume circuits stay normalized") {
    for (unsigned n = 2; n <= 8; ++n) {
        const auto s = oracle::run(build_qv(n, n));
        double norm = 0.0;
        for (const auto a : s) {
            norm += std::norm(a);
        }
        CHECK_THAT(norm, WithinAbs(1.0, 1e-5));
    }
}

TEST_CASE("synthetic circuits stay above the lane positions") {
    const auto c = build_synthetic(12, 5);
    for (const auto &g : c.gates()) {
        CHECK_FALSE(g.is_controlled());
        CHECK(g.targets.size() == 1);
        CHECK(g.targets[0] >= kSyntheticLowestQubit);
    }
}

TEST_CASE("low/high gate-op counts") {
    CHECK(count_gate_ops(build_ghz(31), 4) == GateOpCounts{4, 27});
    CHECK(count_gate_ops(build_ghz(32), 4) == GateOpCounts{4, 28});
    CHECK(count_gate_ops(Circuit(5), 4) == GateOpCounts{0, 0});
    for (unsigned v : {2U, 4U, 8U, 16U}) {
        for (unsigned n = v; n <= 32; ++n) {
            CHECK(count_gate_ops(build_ghz(n), v) == published_gate_ops("ghz", n, v, 0));
        }
    }
    CHECK_FALSE(published_gate_ops("ghz", 3, 4, 0).has_value());
    CHECK_FALSE(published_gate_ops("synthetic", 10, 4, 0).has_value());
}
