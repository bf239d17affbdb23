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

#include <random>

#include "oracle.hpp"
#include "vlaq/circuits.hpp"
#include "vlaq/kernel_ref.hpp"

using namespace vlaq;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("hadamard on |0>") {
    auto sv = StateVector<double>::zero(1);
    apply_gate_ref(sv, gates::hadamard(0));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK_THAT(sv.amplitude_at(0).real(), WithinAbs(h, 1e-15));
    CHECK_THAT(sv.amplitude_at(1).real(), WithinAbs(h, 1e-15));
}

TEST_CASE("cnot control convention") {
    auto sv = StateVector<double>::zero(2);
    apply_gate_ref(sv, gates::pauli_x(0)); // |01>
    apply_gate_ref(sv, gates::cnot(0, 1));
    CHECK(sv.amplitude_at(3) == std::complex<double>(1.0, 0.0));
    CHECK(sv.amplitude_at(1) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("reference kernel agrees with the dense oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 8);
        const auto c = oracle::random_circuit(n, 12, 3, rng);
        const auto start = oracle::random_state(n, rng);
        auto sv = oracle::to_state<double>(start);
        run_circuit_ref(c, sv);
        REQUIRE(oracle::max_abs_diff(oracle::run(c.gates(), start), sv) < 1e-12);
    }
}

TEST_CASE("random 3-qubit unitary preserves the norm") {
    std::mt19937_64 rng(17);
    auto sv = oracle::to_state<double>(oracle::random_state(6, rng));
    const auto g = gates::custom(oracle::random_unitary(8, rng), {5, 0, 3});
    apply_gate_ref(sv, g);
    CHECK_THAT(norm_sq(sv), WithinAbs(1.0, 1e-12));
}

TEST_CASE("controlled gates leave the unselected half untouched") {
    std::mt19937_64 rng(23);
    const auto start = oracle::random_state(5, rng);
    auto sv = oracle::to_state<double>(start);
    apply_gate_ref(sv, gates::controlled(gates::hadamard(1), {4}));
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(sv.amplitude_at(i) == start[i]);
    }
}

TEST_CASE("flop model: 28 flops per 1-qubit group") {
    CHECK(group_flops(1) == 28);
    CHECK(group_flops(2) == 4 * 30);
    CHECK(group_scalar_ops(1) == 24);

    for (unsigned n : {1U, 4U, 9U}) {
        auto sv = StateVector<float>::zero(n);
        VectorCounters k;
        apply_gate_ref(sv, gates::hadamard(0), &k);
        const std::uint64_t groups = std::uint64_t{1} << (n - 1);
        CHECK(k.flops == 28 * groups);
        CHECK(k.scalar_ops == 24 * groups);
        CHECK(k.vector_ops == 0);
        CHECK(k.mem_bytes == groups * 4 * 2 * sizeof(float));
    }
}

TEST_CASE("processed groups count controls") {
    CHECK(processed_groups(gates::hadamard(0), 6) == 32);
    CHECK(processed_groups(gates::cnot(4, 3), 6) == 16);
    CHECK(processed_groups(gates::mcx({0, 1, 2}, 5), 6) == 4);
    CHECK(processed_groups(gates::swap(0, 5), 6) == 16);

    auto sv = StateVector<double>::zero(6);
    VectorCounters k;
    apply_gate_ref(sv, gates::mcx({0, 1, 2}, 5), &k);
    CHECK(k.flops == 4 * group_flops(1));
    Circuit c(6);
    c.add(gates::mcx({0, 1, 2}, 5));
    c.add(gates::hadamard(2));
    CHECK(reference_op_count(c.gates(), 6) == 4 * 24 + 32 * 24);
}

TEST_CASE("expectation follows the magnitude-sum formula") {
    CHECK_THAT(expectation_ref(StateVector<double>::zero(3)),
               WithinAbs(1.0 / 8.0, 1e-15));
    auto sv = StateVector<double>::zero(2);
    apply_gate_ref(sv, gates::hadamard(0));
    apply_gate_ref(sv, gates::hadamard(1));
    CHECK_THAT(expectation_ref(sv), WithinAbs(0.5, 1e-15));
}

TEST_CASE("GHZ(3) amplitudes") {
    auto sv = StateVector<double>::zero(3);
    run_circuit_ref(build_ghz(3), sv);
    const double h = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 8; ++i) {
        const double want = (i == 0 || i == 7) ? h : 0.0;
        CHECK_THAT(std::abs(sv.amplitude_at(i)), WithinAbs(want, 1e-15));
    }
}

TEST_CASE("reference kernel rejects blocked states") {
    auto sv = StateVector<double>::zero(3, Layout::blocked(2));
    CHECK_THROWS_AS(apply_gate_ref(sv, gates::hadamard(0)), Error);
}
