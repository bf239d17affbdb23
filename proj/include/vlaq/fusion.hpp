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
 * Gate fusion planner.
 *
 * Vertical fusion multiplies wire-adjacent gates acting on the same qubit
 * set. Horizontal fusion packs uncontrolled gates on disjoint qubits into
 * one tensor-product gate of at most max_f qubits. Reordering is only done
 * across gates with disjoint qubit sets; no algebraic commutation is used.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vlaq/gates.hpp"
#include "vlaq/state.hpp"

namespace vlaq {

inline constexpr unsigned kMaxFusedQubits = 6;

struct FusedGate {
    Gate gate;
    /// Indices of the original circuit gates folded into this one.
    std::vector<std::size_t> provenance;

    [[nodiscard]] unsigned fused_qubits() const noexcept {
        return gate.num_targets();
    }
};

struct FusionStats {
    std::size_t gates_before = 0;
    std::size_t gates_after = 0;
    /// fused qubit count -> number of fused gates
    std::map<unsigned, std::size_t> histogram;
};

struct FusionPlan {
    unsigned num_qubits = 0;
    unsigned max_f = 0;
    std::vector<FusedGate> gates;
    FusionStats stats;

    [[nodiscard]] std::vector<Gate> gate_list() const;
    /// One line per fused gate with its provenance.
    [[nodiscard]] std::string dump() const;
};

/// Greedy left-to-right vertical fusion.
[[nodiscard]] Circuit fuse_vertical(const Circuit &c);

/// Greedy layered horizontal fusion, 1 <= max_f <= 6.
[[nodiscard]] FusionPlan fuse_horizontal(const Circuit &c, unsigned max_f);

/// Vertical then horizontal; provenance refers to the input circuit.
[[nodiscard]] FusionPlan plan_fusion(const Circuit &c, unsigned max_f);

/// Plan that executes the circuit gate by gate.
[[nodiscard]] FusionPlan identity_plan(const Circuit &c);

/// Closed-form AI of the matrix-vector loop of an f-qubit fused gate:
/// 2 (3 * 2^(2f) + 2^f (2^f - 1)) / (num_vals * 2^(f+3)) flops/byte.
[[nodiscard]] double arithmetic_intensity(unsigned f, unsigned num_vals);
[[nodiscard]] inline double arithmetic_intensity(unsigned f,
                                                 const LaneConfig &cfg) {
    return arithmetic_intensity(f, cfg.num_vals());
}

/// Bytes held in cache by an f-qubit fused gate: its matrix plus the load
/// buffer of 2 * 2^f * num_vals elements.
[[nodiscard]] std::uint64_t fusion_footprint_bytes(unsigned f,
                                                   const LaneConfig &cfg);

/// Largest f <= 6 whose footprint fits the cache budget and whose AI does
/// not exceed machine_balance * (1 + slack). Falls back to 1.
[[nodiscard]] unsigned recommend_f(const LaneConfig &cfg,
                                   std::uint64_t cache_budget_bytes,
                                   double machine_balance,
                                   double slack = 0.05);

} // namespace vlaq
