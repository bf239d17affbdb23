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
#include "vlaq/kernel_vla.hpp"

#include <algorithm>
#include <barrier>
#include <chrono>
#include <cmath>
#include <thread>

#include "vlaq/error.hpp"

namespace vlaq {

PredMask full_mask(const LaneConfig &cfg) {
    const unsigned lanes = cfg.num_vals();
    return {lanes >= 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << lanes) - 1};
}

PredMask control_mask(std::span<const unsigned> low_controls,
                      const LaneConfig &cfg) {
    std::uint64_t need = 0;
    for (const unsigned c : low_controls) {
        require(c < cfg.lane_bits(), ErrorCode::Range,
                "control position " + std::to_string(c) +
                    " is not a lane bit");
        need |= std::uint64_t{1} << c;
    }
    PredMask m;
    for (unsigned l = 0; l < cfg.num_vals(); ++l) {
        if ((l & need) == need) {
            m.bits |= std::uint64_t{1} << l;
        }
    }
    return m;
}

std::vector<PredMask> compute_pred_masks(std::span<const unsigned> low_targets,
                                         const LaneConfig &cfg) {
    const unsigned lanes = cfg.num_vals();
    std::uint64_t tmp = 0;
    for (const unsigned p : low_targets) {
        require(p < cfg.lane_bits(), ErrorCode::Range,
                "position " + std::to_string(p) + " is not below log2(" +
                    std::to_string(lanes) + ")");
        require(((tmp >> p) & 1U) == 0, ErrorCode::InvalidArgument,
                "duplicate low target " + std::to_string(p));
        tmp |= std::uint64_t{1} << p;
    }
    const std::size_t count = std::size_t{1} << low_targets.size();
    std::vector<PredMask> masks(count);
    for (std::size_t m = 0; m < count; ++m) {
        std::uint64_t pattern = 0;
        for (std::size_t j = 0; j < low_targets.size(); ++j) {
            if ((m >> j) & 1U) {
                pattern |= std::uint64_t{1} << low_targets[j];
            }
        }
        // idex & tmp compared against the pattern, lane by lane.
        for (unsigned l = 0; l < lanes; ++l) {
            if ((l & tmp) == pattern) {
                masks[m].bits |= std::uint64_t{1} << l;
            }
        }
    }
    return masks;
}

namespace {

/// Everything about a gate that is fixed for all its vector iterations.
template <typename T> struct GateSchedule {
    unsigned num_vals = 0;
    std::size_t gsize = 0;
    std::vector<std::size_t> row_block; // block offset of row r
    std::vector<unsigned> row_pattern;  // low-bit pattern of row r
    PredMask base;                      // lanes that own a group
    std::vector<unsigned> base_lanes;
    std::vector<unsigned> fixed_bits;   // sorted block-index bit positions
    std::size_t high_controls = 0;      // block bits forced to 1
    std::uint64_t iterations = 0;
    std::vector<double> ure;
    std::vector<double> uim;

    [[nodiscard]] std::size_t block_of(std::uint64_t t) const noexcept {
        std::size_t b = t;
        for (const unsigned p : fixed_bits) {
            const std::size_t low = b & ((std::size_t{1} << p) - 1);
            b = ((b >> p) << (p + 1)) | low;
        }
        return b | high_controls;
    }
};

template <typename T>
GateSchedule<T> make_schedule(const Gate &g, unsigned n,
                              const LaneConfig &cfg) {
    require(g.max_qubit() < n, ErrorCode::Range,
            "gate '" + g.label + "' touches a qubit beyond the state width");
    const unsigned lane_bits = cfg.lane_bits();
    require(n >= lane_bits, ErrorCode::Layout,
            "state has fewer amplitudes than lanes");
    GateSchedule<T> s;
    s.num_vals = cfg.num_vals();
    s.gsize = std::size_t{1} << g.num_targets();

    std::vector<unsigned> low_targets;
    std::vector<unsigned> low_index; // target slot j of each low target
    for (unsigned j = 0; j < g.num_targets(); ++j) {
        const unsigned p = g.targets[j];
        if (p < lane_bits) {
            low_targets.push_back(p);
            low_index.push_back(j);
        } else {
            s.fixed_bits.push_back(p - lane_bits);
        }
    }
    std::vector<unsigned> low_controls;
    for (const unsigned c : g.controls) {
        if (c < lane_bits) {
            low_controls.push_back(c);
        } else {
            s.fixed_bits.push_back(c - lane_bits);
            s.high_controls |= std::size_t{1} << (c - lane_bits);
        }
    }
    std::sort(s.fixed_bits.begin(), s.fixed_bits.end());

    s.row_block.assign(s.gsize, 0);
    s.row_pattern.assign(s.gsize, 0);
    for (std::size_t r = 0; r < s.gsize; ++r) {
        for (unsigned j = 0; j < g.num_targets(); ++j) {
            if (((r >> j) & 1U) == 0) {
                continue;
            }
            const unsigned p = g.targets[j];
            if (p < lane_bits) {
                s.row_pattern[r] |= 1U << p;
            } else {
                s.row_block[r] |= std::size_t{1} << (p - lane_bits);
            }
        }
    }

    const auto masks = compute_pred_masks(low_targets, cfg);
    s.base = masks.front() & control_mask(low_controls, cfg);
    for (unsigned l = 0; l < s.num_vals; ++l) {
        if (s.base.test(l)) {
            s.base_lanes.push_back(l);
        }
    }

    const unsigned block_bits = n - lane_bits;
    s.iterations = std::uint64_t{1} << (block_bits - s.fixed_bits.size());

    s.ure.resize(s.gsize * s.gsize);
    s.uim.resize(s.gsize * s.gsize);
    for (std::size_t e = 0; e < s.gsize * s.gsize; ++e) {
        s.ure[e] = g.matrix.entries()[e].real();
        s.uim[e] = g.matrix.entries()[e].imag();
    }
    return s;
}

/// Per-worker scratch: load buffer, accumulators and counters.
template <typename T> struct Lane {
    std::vector<T> re_tmp;
    std::vector<T> im_tmp;
    std::vector<double> acc_re;
    std::vector<double> acc_im;
    VectorCounters counters;
    std::vector<std::size_t> *writes = nullptr;

    void reserve(const GateSchedule<T> &s) {
        const std::size_t need = s.gsize * s.num_vals;
        if (re_tmp.size() < need) {
            re_tmp.resize(need);
            im_tmp.resize(need);
            acc_re.resize(need);
            acc_im.resize(need);
        }
    }
};

template <typename T>
void load_rows(const GateSchedule<T> &s, const T *data, std::size_t block0,
               Lane<T> &lane) {
    const std::size_t L = s.num_vals;
    const unsigned active = s.base.active();
    for (std::size_t r = 0; r < s.gsize; ++r) {
        const T *src = data + 2 * L * (block0 + s.row_block[r]);
        const unsigned pat = s.row_pattern[r];
        T *dre = lane.re_tmp.data() + r * L;
        T *dim = lane.im_tmp.data() + r * L;
        for (const unsigned l : s.base_lanes) {
            dre[l] = src[l | pat];
            dim[l] = src[L + (l | pat)];
        }
        lane.counters.issue(active, s.num_vals, 2);
        lane.counters.mem_bytes += 2ULL * active * sizeof(T);
        lane.counters.buffer_bytes += 2ULL * active * sizeof(T);
    }
}

template <typename T>
void store_row(const GateSchedule<T> &s, T *data, std::size_t block0,
               std::size_t x, const double *res_re, const double *res_im,
               Lane<T> &lane) {
    const std::size_t L = s.num_vals;
    const std::size_t block = block0 + s.row_block[x];
    T *dst = data + 2 * L * block;
    const unsigned pat = s.row_pattern[x];
    for (const unsigned l : s.base_lanes) {
        dst[l | pat] = static_cast<T>(res_re[l]);
        dst[L + (l | pat)] = static_cast<T>(res_im[l]);
    }
    const unsigned active = s.base.active();
    lane.counters.issue(active, s.num_vals, 2);
    lane.counters.mem_bytes += 2ULL * active * sizeof(T);
    if (lane.writes != nullptr) {
        for (const unsigned l : s.base_lanes) {
            lane.writes->push_back(block * L + (l | pat));
        }
    }
}

template <typename T>
void iterate_buffered(const GateSchedule<T> &s, T *data, std::size_t block0,
                      Lane<T> &lane) {
    const std::size_t L = s.num_vals;
    const std::size_t g = s.gsize;
    const unsigned active = s.base.active();
    load_rows(s, data, block0, lane);
    double *acc_re = lane.acc_re.data();
    double *acc_im = lane.acc_im.data();
    for (std::size_t x = 0; x < g; ++x) {
        for (const unsigned l : s.base_lanes) {
            acc_re[l] = 0;
            acc_im[l] = 0;
        }
        for (std::size_t y = 0; y < g; ++y) {
            const double ur = s.ure[x * g + y];
            const double ui = s.uim[x * g + y];
            const T *bre = lane.re_tmp.data() + y * L;
            const T *bim = lane.im_tmp.data() + y * L;
            for (const unsigned l : s.base_lanes) {
                acc_re[l] += ur * bre[l] - ui * bim[l];
                acc_im[l] += ur * bim[l] + ui * bre[l];
            }
        }
        lane.counters.issue(active, s.num_vals, 4 * g);
        lane.counters.buffer_bytes += 2ULL * g * active * sizeof(T);
        lane.counters.flops += static_cast<std::uint64_t>(active) * (8 * g - 2);
        // Row x of the result goes straight back: the buffer still holds
        // every operand, so later rows are unaffected.
        store_row(s, data, block0, x, acc_re, acc_im, lane);
    }
}

template <typename T>
void iterate_temp_result(const GateSchedule<T> &s, T *data, std::size_t block0,
                         Lane<T> &lane) {
    const std::size_t L = s.num_vals;
    const std::size_t g = s.gsize;
    const unsigned active = s.base.active();
    // Results for all rows are held in acc_* until every row is computed.
    for (std::size_t x = 0; x < g; ++x) {
        double *res_re = lane.acc_re.data() + x * L;
        double *res_im = lane.acc_im.data() + x * L;
        for (const unsigned l : s.base_lanes) {
            res_re[l] = 0;
            res_im[l] = 0;
        }
        for (std::size_t y = 0; y < g; ++y) {
            const double ur = s.ure[x * g + y];
            const double ui = s.uim[x * g + y];
            const T *src = data + 2 * L * (block0 + s.row_block[y]);
            const unsigned pat = s.row_pattern[y];
            for (const unsigned l : s.base_lanes) {
                const T re = src[l | pat];
                const T im = src[L + (l | pat)];
                res_re[l] += ur * re - ui * im;
                res_im[l] += ur * im + ui * re;
            }
            lane.counters.issue(active, s.num_vals, 2);
            lane.counters.mem_bytes += 2ULL * active * sizeof(T);
        }
        lane.counters.issue(active, s.num_vals, 4 * g);
        lane.counters.buffer_bytes += 2ULL * active * sizeof(T);
        lane.counters.flops += static_cast<std::uint64_t>(active) * (8 * g - 2);
    }
    for (std::size_t x = 0; x < g; ++x) {
        lane.counters.buffer_bytes += 2ULL * active * sizeof(T);
        store_row(s, data, block0, x, lane.acc_re.data() + x * L,
                  lane.acc_im.data() + x * L, lane);
    }
}

template <typename T>
void run_range(const GateSchedule<T> &s, T *data, std::uint64_t begin,
               std::uint64_t end, bool buffered, Lane<T> &lane) {
    lane.reserve(s);
    for (std::uint64_t t = begin; t < end; ++t) {
        const std::size_t block0 = s.block_of(t);
        if (buffered) {
            iterate_buffered(s, data, block0, lane);
        } else {
            iterate_temp_result(s, data, block0, lane);
        }
    }
}

template <typename T>
void check_state(const StateVector<T> &sv, const LaneConfig &cfg) {
    require(cfg.precision() == sv.precision(), ErrorCode::InvalidArgument,
            "lane config precision does not match the state");
    require(sv.layout() == Layout::blocked(cfg.num_vals()), ErrorCode::Layout,
            "lane engine needs a blocked(" + std::to_string(cfg.num_vals()) +
                ") state, got " + to_string(sv.layout()));
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - since)
        .count();
}

} // namespace

std::uint64_t vector_iterations(const Gate &g, unsigned n,
                                const LaneConfig &cfg) {
    return make_schedule<double>(g, n, cfg).iterations;
}

template <typename T>
LoadBuffer<T> fill_load_buffer(const StateVector<T> &sv, const Gate &g,
                               std::size_t group_base, const LaneConfig &cfg,
                               VectorCounters *counters) {
    check_state(sv, cfg);
    const auto s = make_schedule<T>(g, sv.num_qubits(), cfg);
    const std::size_t L = s.num_vals;
    require(group_base < sv.num_amplitudes() && group_base % L == 0,
            ErrorCode::InvalidArgument,
            "group base " + std::to_string(group_base) +
                " is not aligned to a lane block");
    std::size_t target_bits = 0;
    for (const auto off : s.row_block) {
        target_bits |= off;
    }
    const std::size_t block0 = group_base / L;
    require((block0 & target_bits) == 0, ErrorCode::InvalidArgument,
            "group base " + std::to_string(group_base) +
                " has target bits set");

    Lane<T> lane;
    lane.re_tmp.assign(s.gsize * L, T{0});
    lane.im_tmp.assign(s.gsize * L, T{0});
    load_rows(s, sv.data().data(), block0, lane);
    if (counters != nullptr) {
        *counters += lane.counters;
    }
    return {s.gsize, L, std::move(lane.re_tmp), std::move(lane.im_tmp)};
}

template <typename T>
void apply_gate_vla(StateVector<T> &sv, const Gate &g, const LaneConfig &cfg,
                    VectorCounters &counters, bool buffered) {
    check_state(sv, cfg);
    const auto s = make_schedule<T>(g, sv.num_qubits(), cfg);
    Lane<T> lane;
    run_range(s, sv.data().data(), 0, s.iterations, buffered, lane);
    counters += lane.counters;
}

template <typename T>
void apply_controlled_gate_vla(StateVector<T> &sv, const Gate &g,
                               const LaneConfig &cfg,
                               VectorCounters &counters) {
    require(g.is_controlled(), ErrorCode::InvalidArgument,
            "gate '" + g.label + "' has no controls");
    apply_gate_vla(sv, g, cfg, counters, true);
}

template <typename T>
double expectation_value_vla(const StateVector<T> &sv, const LaneConfig &cfg,
                             VectorCounters &counters) {
    check_state(sv, cfg);
    const std::size_t L = cfg.num_vals();
    const auto data = sv.data();
    std::vector<double> partial(L, 0.0);
    const std::size_t blocks = sv.num_amplitudes() / L;
    for (std::size_t b = 0; b < blocks; ++b) {
        const T *src = data.data() + 2 * L * b;
        for (std::size_t l = 0; l < L; ++l) {
            partial[l] += std::hypot(static_cast<double>(src[l]),
                                     static_cast<double>(src[L + l]));
        }
    }
    // Per block: 2 loads, then square, multiply-add, sqrt, accumulate.
    counters.issue(cfg.num_vals(), cfg.num_vals(), 6 * blocks);
    counters.mem_bytes += 2ULL * L * blocks * sizeof(T);
    counters.flops += 4ULL * L * blocks;
    // Horizontal reduction of the partial sums.
    counters.issue(cfg.num_vals(), cfg.num_vals(), 1);
    counters.flops += L - 1;
    double total = 0.0;
    for (const double v : partial) {
        total += v;
    }
    return total / static_cast<double>(sv.num_amplitudes());
}

template <typename T>
VlaRunStats run_circuit_vla(std::span<const Gate> gates, StateVector<T> &sv,
                            const LaneConfig &cfg,
                            const EngineOptions &options) {
    check_state(sv, cfg);
    require(options.workers >= 1, ErrorCode::InvalidArgument,
            "worker count must be at least 1");

    std::vector<GateSchedule<T>> schedules;
    schedules.reserve(gates.size());
    for (const auto &g : gates) {
        schedules.push_back(make_schedule<T>(g, sv.num_qubits(), cfg));
    }

    VlaRunStats stats;
    stats.gate_ms.reserve(gates.size());
    T *data = sv.data().data();
    const unsigned workers = options.workers;
    const auto start = std::chrono::steady_clock::now();

    std::vector<Lane<T>> lanes(workers);
    std::vector<std::vector<std::size_t>> writes(
        options.track_writes ? workers : 0);
    for (unsigned w = 0; w < writes.size(); ++w) {
        lanes[w].writes = &writes[w];
    }

    auto gate_start = start;
    auto finish_gate = [&]() noexcept {
        for (auto &lane : lanes) {
            stats.counters += lane.counters;
            lane.counters = {};
        }
        if (options.track_writes) {
            std::vector<std::size_t> all;
            for (auto &w : writes) {
                all.insert(all.end(), w.begin(), w.end());
                w.clear();
            }
            std::sort(all.begin(), all.end());
            for (std::size_t i = 1; i < all.size(); ++i) {
                if (all[i] == all[i - 1]) {
                    ++stats.write_conflicts;
                }
            }
        }
        const auto now = std::chrono::steady_clock::now();
        stats.gate_ms.push_back(
            std::chrono::duration<double, std::milli>(now - gate_start)
                .count());
        gate_start = now;
    };

    // Contiguous span of iterations for worker w.
    auto span_of = [&](const GateSchedule<T> &s, unsigned w) {
        const std::uint64_t used =
            std::min<std::uint64_t>(workers, s.iterations);
        if (w >= used) {
            return std::pair<std::uint64_t, std::uint64_t>{0, 0};
        }
        const std::uint64_t chunk = (s.iterations + used - 1) / used;
        const std::uint64_t begin = std::min(s.iterations, w * chunk);
        const std::uint64_t end = std::min(s.iterations, begin + chunk);
        return std::pair{begin, end};
    };

    for (const auto &s : schedules) {
        stats.max_workers_used = std::max<unsigned>(
            stats.max_workers_used,
            static_cast<unsigned>(
                std::min<std::uint64_t>(workers, s.iterations)));
    }

    if (workers == 1) {
        for (const auto &s : schedules) {
            run_range(s, data, 0, s.iterations, options.buffered, lanes[0]);
            finish_gate();
        }
    } else {
        std::barrier sync(static_cast<std::ptrdiff_t>(workers), finish_gate);
        auto body = [&](unsigned w) {
            for (const auto &s : schedules) {
                const auto [begin, end] = span_of(s, w);
                run_range(s, data, begin, end, options.buffered, lanes[w]);
                sync.arrive_and_wait();
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back(body, w);
        }
        body(0);
    }

    stats.wall_ms = elapsed_ms(start);
    return stats;
}

template LoadBuffer<float> fill_load_buffer(const StateVector<float> &,
                                            const Gate &, std::size_t,
                                            const LaneConfig &,
                                            VectorCounters *);
template LoadBuffer<double> fill_load_buffer(const StateVector<double> &,
                                             const Gate &, std::size_t,
                                             const LaneConfig &,
                                             VectorCounters *);
template void apply_gate_vla(StateVector<float> &, const Gate &,
                             const LaneConfig &, VectorCounters &, bool);
template void apply_gate_vla(StateVector<double> &, const Gate &,
                             const LaneConfig &, VectorCounters &, bool);
template void apply_controlled_gate_vla(StateVector<float> &, const Gate &,
                                        const LaneConfig &, VectorCounters &);
template void apply_controlled_gate_vla(StateVector<double> &, const Gate &,
                                        const LaneConfig &, VectorCounters &);
template double expectation_value_vla(const StateVector<float> &,
                                      const LaneConfig &, VectorCounters &);
template double expectation_value_vla(const StateVector<double> &,
                                      const LaneConfig &, VectorCounters &);
template VlaRunStats run_circuit_vla(std::span<const Gate>,
                                     StateVector<float> &, const LaneConfig &,
                                     const EngineOptions &);
template VlaRunStats run_circuit_vla(std::span<const Gate>,
                                     StateVector<double> &,
                                     const LaneConfig &,
                                     const EngineOptions &);

} // namespace vlaq
