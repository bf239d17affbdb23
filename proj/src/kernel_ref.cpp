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
#include "vlaq/kernel_ref.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vlaq {

std::uint64_t processed_groups(const Gate &g, unsigned n) {
    const auto fixed = g.targets.size() + g.controls.size();
    return fixed > n ? 0 : std::uint64_t{1} << (n - fixed);
}

std::uint64_t reference_op_count(std::span<const Gate> gates, unsigned n) {
    std::uint64_t total = 0;
    for (const auto &g : gates) {
        total += processed_groups(g, n) * group_scalar_ops(g.num_targets());
    }
    return total;
}

template <typename T>
void apply_gate_ref(StateVector<T> &sv, const Gate &g,
                    VectorCounters *counters) {
    require(!sv.layout().is_blocked(), ErrorCode::Layout,
            "reference kernel needs an interleaved state");
    const unsigned n = sv.num_qubits();
    require(g.max_qubit() < n, ErrorCode::Range,
            "gate touches a qubit beyond the state width");

    const unsigned k = g.num_targets();
    const std::size_t gsize = std::size_t{1} << k;

    std::vector<unsigned> sorted_targets = g.targets;
    std::sort(sorted_targets.begin(), sorted_targets.end());
    std::size_t control_mask = 0;
    for (const unsigned c : g.controls) {
        control_mask |= std::size_t{1} << c;
    }

    // Offset of group member r from the group's base index.
    std::vector<std::size_t> member(gsize, 0);
    for (std::size_t r = 0; r < gsize; ++r) {
        for (unsigned j = 0; j < k; ++j) {
            if ((r >> j) & 1U) {
                member[r] |= std::size_t{1} << g.targets[j];
            }
        }
    }

    std::vector<double> ure(gsize * gsize);
    std::vector<double> uim(gsize * gsize);
    for (std::size_t e = 0; e < gsize * gsize; ++e) {
        ure[e] = g.matrix.entries()[e].real();
        uim[e] = g.matrix.entries()[e].imag();
    }

    auto data = sv.data();
    std::vector<T> in_re(gsize);
    std::vector<T> in_im(gsize);
    const std::size_t groups = std::size_t{1} << (n - k);
    std::uint64_t processed = 0;

    for (std::size_t free = 0; free < groups; ++free) {
        // Spread the free-bit pattern over the non-target positions.
        std::size_t base = free;
        for (const unsigned p : sorted_targets) {
            const std::size_t low = base & ((std::size_t{1} << p) - 1);
            base = ((base >> p) << (p + 1)) | low;
        }
        if ((base & control_mask) != control_mask) {
            continue;
        }
        ++processed;
        for (std::size_t r = 0; r < gsize; ++r) {
            const std::size_t idx = base | member[r];
            in_re[r] = data[2 * idx];
            in_im[r] = data[2 * idx + 1];
        }
        for (std::size_t x = 0; x < gsize; ++x) {
            double acc_re = 0;
            double acc_im = 0;
            for (std::size_t y = 0; y < gsize; ++y) {
                const double ur = ure[x * gsize + y];
                const double ui = uim[x * gsize + y];
                acc_re += ur * in_re[y] - ui * in_im[y];
                acc_im += ur * in_im[y] + ui * in_re[y];
            }
            const std::size_t idx = base | member[x];
            data[2 * idx] = static_cast<T>(acc_re);
            data[2 * idx + 1] = static_cast<T>(acc_im);
        }
    }

    if (counters != nullptr) {
        counters->scalar_ops += processed * group_scalar_ops(k);
        counters->flops += processed * group_flops(k);
        counters->mem_bytes += processed * 4 * gsize * sizeof(T);
    }
}

template <typename T>
void run_circuit_ref(std::span<const Gate> gates, StateVector<T> &sv,
                     VectorCounters *counters) {
    for (const auto &g : gates) {
        apply_gate_ref(sv, g, counters);
    }
}

template <typename T> double expectation_ref(const StateVector<T> &sv) {
    double acc = 0.0;
    for (std::size_t i = 0; i < sv.num_amplitudes(); ++i) {
        const auto a = sv.amplitude_at(i);
        acc += std::hypot(static_cast<double>(a.real()),
                          static_cast<double>(a.imag()));
    }
    return acc / static_cast<double>(sv.num_amplitudes());
}

template void apply_gate_ref(StateVector<float> &, const Gate &,
                             VectorCounters *);
template void apply_gate_ref(StateVector<double> &, const Gate &,
                             VectorCounters *);
template void run_circuit_ref(std::span<const Gate>, StateVector<float> &,
                              VectorCounters *);
template void run_circuit_ref(std::span<const Gate>, StateVector<double> &,
                              VectorCounters *);
template double expectation_ref(const StateVector<float> &);
template double expectation_ref(const StateVector<double> &);

} // namespace vlaq
