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
/**
 * @file
 * Scalar reference simulator over the interleaved layout. This is the
 * oracle every other execution path is compared against, so it stays a
 * direct transcription of the group-wise matrix-vector product.
 *
 * Both kernels accumulate each output row in double and round once when
 * storing, so a Single state carries one rounding per gate application.
 */
#pragma once

#include <cstdint>
#include <span>

#include "vlaq/gates.hpp"
#include "vlaq/metrics.hpp"
#include "vlaq/state.hpp"

namespace vlaq {

/// Apply g to every group whose control bits are all 1. Groups are visited
/// in ascending free-bit order with the target bits varied fastest.
template <typename T>
void apply_gate_ref(StateVector<T> &sv, const Gate &g,
                    VectorCounters *counters = nullptr);

template <typename T>
void run_circuit_ref(std::span<const Gate> gates, StateVector<T> &sv,
                     VectorCounters *counters = nullptr);

template <typename T>
void run_circuit_ref(const Circuit &c, StateVector<T> &sv,
                     VectorCounters *counters = nullptr) {
    run_circuit_ref(std::span<const Gate>(c.gates()), sv, counters);
}

/// (1 / 2^n) * sum_i |s_i|, with |.| the complex magnitude.
template <typename T> [[nodiscard]] double expectation_ref(const StateVector<T> &sv);

/// Flops of one group of a k-qubit gate: g(8g - 2) with g = 2^k.
[[nodiscard]] constexpr std::uint64_t group_flops(unsigned k) noexcept {
    const std::uint64_t g = std::uint64_t{1} << k;
    return g * (8 * g - 2);
}

/// Scalar instructions of one group: 2g loads, 4g^2 MACs, 2g stores.
[[nodiscard]] constexpr std::uint64_t group_scalar_ops(unsigned k) noexcept {
    const std::uint64_t g = std::uint64_t{1} << k;
    return 4 * g * g + 4 * g;
}

/// Number of groups a gate updates on n qubits: 2^(n - k - |controls|).
[[nodiscard]] std::uint64_t processed_groups(const Gate &g, unsigned n);

/// Scalar oracle op tally for a gate list, without running it.
[[nodiscard]] std::uint64_t reference_op_count(std::span<const Gate> gates,
                                               unsigned n);

} // namespace vlaq
