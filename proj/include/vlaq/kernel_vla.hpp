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
 * Lane engine: a portable emulation of vector-length-agnostic execution
 * over the blocked layout.
 *
 * With L = num_vals lanes, one vector iteration processes the groups whose
 * base indices share a block of L amplitudes. Qubit positions p with
 * 2^p >= L ("high") select other blocks and keep every lane busy. Positions
 * with 2^p < L ("low") put several members of one group into the same
 * block; those iterations run under predicate masks that pick one member
 * per group, and a mask with a single active lane is issued on the scalar
 * unit. Controls on high positions skip whole blocks, controls on low
 * positions are folded into the masks.
 *
 * Every emulated instruction is tallied in VectorCounters with the active
 * lane count of its mask.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "vlaq/gates.hpp"
#include "vlaq/metrics.hpp"
#include "vlaq/state.hpp"

namespace vlaq {

/// Lane enable bits; bit l set means lane l participates.
struct PredMask {
    std::uint64_t bits = 0;

    [[nodiscard]] unsigned active() const noexcept {
        return static_cast<unsigned>(std::popcount(bits));
    }
    [[nodiscard]] bool test(unsigned lane) const noexcept {
        return ((bits >> lane) & 1U) != 0;
    }
    [[nodiscard]] PredMask operator&(PredMask o) const noexcept {
        return {bits & o.bits};
    }

    friend bool operator==(const PredMask &, const PredMask &) = default;
};

[[nodiscard]] PredMask full_mask(const LaneConfig &cfg);

/// Lanes whose bits at the given positions are all set.
[[nodiscard]] PredMask control_mask(std::span<const unsigned> low_controls,
                                    const LaneConfig &cfg);

/// Predicates for an irregular loop. Element 0 is the base mask
/// {l : (l & tmp) == 0}, tmp = OR of (1 << p); element m is the variant
/// for low-bit pattern m (bit j of m placed at low_targets[j]). The masks
/// partition the lanes. Empty input yields one full mask.
[[nodiscard]] std::vector<PredMask>
compute_pred_masks(std::span<const unsigned> low_targets,
                   const LaneConfig &cfg);

/// Gathered group amplitudes: row r, lane l at index r * num_vals + l.
template <typename T> struct LoadBuffer {
    std::size_t gsize = 0;
    std::size_t num_vals = 0;
    std::vector<T> re_tmp;
    std::vector<T> im_tmp;

    [[nodiscard]] T re(std::size_t row, std::size_t lane) const {
        return re_tmp[row * num_vals + lane];
    }
    [[nodiscard]] T im(std::size_t row, std::size_t lane) const {
        return im_tmp[row * num_vals + lane];
    }
};

/// Fill the load buffer for the vector iteration whose first group has
/// basis index `group_base` (block aligned, target bits clear). Lane l of
/// row r holds member r of the group based at group_base + l; lanes masked
/// off by low targets or controls stay zero.
template <typename T>
[[nodiscard]] LoadBuffer<T>
fill_load_buffer(const StateVector<T> &sv, const Gate &g,
                 std::size_t group_base, const LaneConfig &cfg,
                 VectorCounters *counters = nullptr);

/// Apply a gate (controlled or not). buffered=false selects the
/// temp-result variant that reads operands from the state for every output
/// row and writes all results back at the end.
template <typename T>
void apply_gate_vla(StateVector<T> &sv, const Gate &g, const LaneConfig &cfg,
                    VectorCounters &counters, bool buffered = true);

/// Same kernel; rejects gates without controls.
template <typename T>
void apply_controlled_gate_vla(StateVector<T> &sv, const Gate &g,
                               const LaneConfig &cfg,
                               VectorCounters &counters);

/// (1 / 2^n) * sum_i |s_i| via lane-wise partial sums; never stores.
template <typename T>
[[nodiscard]] double expectation_value_vla(const StateVector<T> &sv,
                                           const LaneConfig &cfg,
                                           VectorCounters &counters);

struct EngineOptions {
    unsigned workers = 1;
    bool buffered = true;
    /// Record every written basis index and count indices written by more
    /// than one worker within a gate. Test instrumentation; slow.
    bool track_writes = false;
};

struct VlaRunStats {
    VectorCounters counters;
    std::vector<double> gate_ms;
    double wall_ms = 0.0;
    unsigned max_workers_used = 0;
    std::uint64_t write_conflicts = 0;
};

/// Number of vector iterations (block sets) a gate needs on n qubits.
[[nodiscard]] std::uint64_t vector_iterations(const Gate &g, unsigned n,
                                              const LaneConfig &cfg);

/// Run gates in order. Each gate's iterations are split into contiguous
/// spans, one per worker; workers meet at a barrier between gates and
/// their counters are merged there.
template <typename T>
VlaRunStats run_circuit_vla(std::span<const Gate> gates, StateVector<T> &sv,
                            const LaneConfig &cfg,
                            const EngineOptions &options = {});

} // namespace vlaq
