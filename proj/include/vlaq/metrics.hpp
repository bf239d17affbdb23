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
 * Software vector-activity counters and the metrics derived from them.
 *
 * Op model shared by both kernels: per group of g = 2^k amplitudes, 2g
 * loads, 4g^2 multiply-accumulate instructions and 2g stores. Flops use
 * complex mul = 6, complex add = 2, i.e. g(8g - 2) per group (28 for a
 * 1-qubit gate). Each state-vector component loaded or stored adds its
 * element width to mem_bytes; load-buffer traffic goes to buffer_bytes and
 * does not enter arithmetic intensity.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vlaq {

struct VectorCounters {
    std::uint64_t vector_ops = 0;
    std::uint64_t scalar_ops = 0;
    std::uint64_t active_lane_sum = 0;
    std::uint64_t full_mask_ops = 0;
    std::uint64_t partial_mask_ops = 0;
    std::uint64_t flops = 0;
    std::uint64_t mem_bytes = 0;
    std::uint64_t buffer_bytes = 0;

    /// Tally `count` instructions issued under a mask with `active` lanes.
    /// A single active lane is issued on the scalar unit instead.
    void issue(unsigned active, unsigned num_vals, std::uint64_t count = 1) {
        if (active <= 1) {
            scalar_ops += count;
            return;
        }
        vector_ops += count;
        active_lane_sum += static_cast<std::uint64_t>(active) * count;
        if (active == num_vals) {
            full_mask_ops += count;
        } else {
            partial_mask_ops += count;
        }
    }

    VectorCounters &operator+=(const VectorCounters &o) {
        vector_ops += o.vector_ops;
        scalar_ops += o.scalar_ops;
        active_lane_sum += o.active_lane_sum;
        full_mask_ops += o.full_mask_ops;
        partial_mask_ops += o.partial_mask_ops;
        flops += o.flops;
        mem_bytes += o.mem_bytes;
        buffer_bytes += o.buffer_bytes;
        return *this;
    }

    friend bool operator==(const VectorCounters &,
                           const VectorCounters &) = default;
};

[[nodiscard]] VectorCounters merge(std::span<const VectorCounters> parts);
[[nodiscard]] VectorCounters merge(std::initializer_list<VectorCounters> parts);

/// Average active lanes per vector op; 0 when no vector ops ran.
[[nodiscard]] double avl(const VectorCounters &c);

/// Instruction reduction ratio: scalar-baseline op count over the ops the
/// run issued. 1.0 when nothing was issued.
[[nodiscard]] double irr(const VectorCounters &c, std::uint64_t ref_op_count);

/// flops / mem_bytes; 0 for a run without memory traffic.
[[nodiscard]] double ai_measured(const VectorCounters &c);

/// Published hardware figures, reported for context only.
struct ReferenceAnnotation {
    std::string source;
    double avl_low = 0.0;
    double avl_high = 0.0;
    double irr_low = 0.0;
    double irr_high = 0.0;

    friend bool operator==(const ReferenceAnnotation &,
                           const ReferenceAnnotation &) = default;
};

struct RunReport {
    std::string backend;
    std::string precision;
    unsigned lanes = 0;
    unsigned workers = 1;
    bool buffered = true;

    double wall_ms = 0.0;
    std::vector<double> gate_ms;

    double avl = 0.0;
    double irr = 1.0;
    double ai = 0.0;
    double ai_model = 0.0;
    double expectation = 0.0;
    double norm_sq = 0.0;
    std::uint64_t ref_op_count = 0;
    VectorCounters counters;

    struct Fusion {
        std::size_t before = 0;
        std::size_t after = 0;
        unsigned max_f = 0;
        std::map<unsigned, std::size_t> histogram;
        friend bool operator==(const Fusion &, const Fusion &) = default;
    } fusion;

    struct CircuitInfo {
        std::string name;
        unsigned n = 0;
        std::optional<std::uint64_t> seed;
        friend bool operator==(const CircuitInfo &,
                               const CircuitInfo &) = default;
    } circuit;

    std::vector<ReferenceAnnotation> paper_reference;

    friend bool operator==(const RunReport &, const RunReport &) = default;
};

/// Published AVL/IRR ranges for the emulated lane count, if any.
[[nodiscard]] std::vector<ReferenceAnnotation>
reference_annotations(unsigned lanes);

/// Serialize to the stable JSON schema. With include_timing=false the
/// wall_ms and gate_ms fields are zeroed so output is byte-stable.
[[nodiscard]] std::string report_to_json(const RunReport &r,
                                         bool include_timing = true,
                                         int indent = 2);
[[nodiscard]] RunReport report_from_json(const std::string &text);

} // namespace vlaq
