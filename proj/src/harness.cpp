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
#include "vlaq/harness.hpp"

#include <algorithm>
#include <chrono>

#include "vlaq/circuits.hpp"
#include "vlaq/error.hpp"
#include "vlaq/kernel_ref.hpp"
#include "vlaq/kernel_vla.hpp"

namespace vlaq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since)
        .count();
}

void fill_common(RunReport &r, const Circuit &c, const RunConfig &cfg) {
    r.backend = to_string(cfg.backend);
    r.precision = to_string(cfg.precision);
    r.lanes = cfg.lanes;
    r.buffered = cfg.buffered;
    r.circuit.name = c.name();
    r.circuit.n = c.num_qubits();
    r.circuit.seed = c.seed();
    r.paper_reference = reference_annotations(cfg.lanes);
}

template <typename T>
RunResult run_ref(const Circuit &c, const RunConfig &cfg) {
    auto sv = StateVector<T>::zero(c.num_qubits(), Layout::interleaved(),
                                   cfg.memory_budget);
    RunReport r;
    fill_common(r, c, cfg);
    r.workers = 1;
    r.gate_ms.reserve(c.size());
    const auto start = Clock::now();
    for (const auto &g : c.gates()) {
        const auto t0 = Clock::now();
        apply_gate_ref(sv, g, &r.counters);
        r.gate_ms.push_back(elapsed_ms(t0));
    }
    r.wall_ms = elapsed_ms(start);

    r.ref_op_count = reference_op_count(c.gates(), c.num_qubits());
    r.avl = avl(r.counters);
    r.irr = irr(r.counters, r.ref_op_count);
    r.ai = ai_measured(r.counters);
    r.expectation = expectation_ref(sv);
    r.norm_sq = norm_sq(sv);
    r.fusion.before = c.size();
    r.fusion.after = c.size();
    for (const auto &g : c.gates()) {
        ++r.fusion.histogram[g.num_targets()];
    }
    return {std::move(r), AnyState(std::move(sv))};
}

template <typename T>
RunResult run_vla(const FusionPlan &plan, const Circuit &c,
                  const RunConfig &cfg) {
    const auto lanes = LaneConfig::from_lanes(cfg.lanes, cfg.precision);
    require(c.num_qubits() >= lanes.lane_bits(), ErrorCode::InvalidArgument,
            "the vla backend needs at least " +
                std::to_string(lanes.lane_bits()) + " qubits for " +
                std::to_string(cfg.lanes) + " lanes");
    auto sv = StateVector<T>::zero(c.num_qubits(), Layout::blocked(cfg.lanes),
                                   cfg.memory_budget);
    const auto gates = plan.gate_list();
    EngineOptions options;
    options.workers = cfg.workers;
    options.buffered = cfg.buffered;
    auto stats = run_circuit_vla(std::span<const Gate>(gates), sv, lanes,
                                 options);

    RunReport r;
    fill_common(r, c, cfg);
    r.workers = std::max(1U, stats.max_workers_used);
    r.wall_ms = stats.wall_ms;
    r.gate_ms = std::move(stats.gate_ms);
    r.counters = stats.counters;
    r.ref_op_count = reference_op_count(gates, c.num_qubits());
    r.avl = avl(r.counters);
    r.irr = irr(r.counters, r.ref_op_count);
    r.ai = ai_measured(r.counters);
    unsigned widest = 0;
    for (const auto &g : gates) {
        widest = std::max(widest, g.num_targets());
    }
    r.ai_model = widest == 0 ? 0.0 : arithmetic_intensity(widest, lanes);
    VectorCounters scratch;
    r.expectation = expectation_value_vla(sv, lanes, scratch);
    r.norm_sq = norm_sq(sv);
    r.fusion.before = plan.stats.gates_before;
    r.fusion.after = plan.stats.gates_after;
    r.fusion.max_f = plan.max_f;
    r.fusion.histogram = plan.stats.histogram;
    return {std::move(r), AnyState(std::move(sv))};
}

} // namespace

std::string to_string(Backend b) { return b == Backend::Ref ? "ref" : "vla"; }

Backend parse_backend(const std::string &text) {
    if (text == "ref") {
        return Backend::Ref;
    }
    if (text == "vla") {
        return Backend::Vla;
    }
    fail(ErrorCode::InvalidArgument, "unknown backend '" + text + "'");
}

const std::vector<std::string> &benchmark_names() {
    static const std::vector<std::string> names{
        "qft", "grover", "ghz", "qrc", "qv", "synthetic", "file"};
    return names;
}

Circuit build_circuit(const RunConfig &cfg) {
    require(cfg.qubits <= kMaxQubits, ErrorCode::Capacity,
            std::to_string(cfg.qubits) + " qubits exceeds the limit of " +
                std::to_string(kMaxQubits));
    const auto &b = cfg.bench;
    if (b == "qft") {
        return build_qft(cfg.qubits);
    }
    if (b == "grover") {
        return build_grover(cfg.qubits, cfg.marked, cfg.iterations);
    }
    if (b == "ghz") {
        return build_ghz(cfg.qubits);
    }
    if (b == "qrc") {
        return build_qrc(cfg.qubits, cfg.depth, cfg.seed, cfg.qrc_entangle);
    }
    if (b == "qv") {
        return build_qv(cfg.qubits, cfg.seed);
    }
    if (b == "synthetic") {
        return build_synthetic(cfg.qubits, cfg.synthetic_reps);
    }
    if (b == "file") {
        require(!cfg.circuit_file.empty(), ErrorCode::InvalidArgument,
                "bench 'file' needs a circuit file");
        return load_circuit(cfg.circuit_file);
    }
    fail(ErrorCode::InvalidArgument, "unknown benchmark '" + b + "'");
}

FusionPlan build_plan(const Circuit &c, const RunConfig &cfg) {
    if (cfg.max_fuse == 0) {
        return identity_plan(c);
    }
    return plan_fusion(c, cfg.max_fuse);
}

RunResult execute(const Circuit &c, const RunConfig &cfg) {
    if (cfg.backend == Backend::Ref) {
        return cfg.precision == Precision::Single ? run_ref<float>(c, cfg)
                                                  : run_ref<double>(c, cfg);
    }
    return execute(build_plan(c, cfg), c, cfg);
}

RunResult execute(const FusionPlan &plan, const Circuit &c,
                  const RunConfig &cfg) {
    if (cfg.backend == Backend::Ref) {
        return execute(c, cfg);
    }
    require(plan.num_qubits == c.num_qubits(), ErrorCode::InvalidArgument,
            "fusion plan width does not match the circuit");
    return cfg.precision == Precision::Single
               ? run_vla<float>(plan, c, cfg)
               : run_vla<double>(plan, c, cfg);
}

double verify_tolerance(Precision p) noexcept {
    return p == Precision::Single ? 1e-6 : 1e-12;
}

VerifyResult verify(const Circuit &c, const RunConfig &cfg,
                    unsigned qubit_cap) {
    return verify(build_plan(c, cfg), c, cfg, qubit_cap);
}

VerifyResult verify(const FusionPlan &plan, const Circuit &c,
                    const RunConfig &cfg, unsigned qubit_cap) {
    require(c.num_qubits() <= qubit_cap, ErrorCode::Capacity,
            "verify is capped at " + std::to_string(qubit_cap) +
                " qubits, circuit has " + std::to_string(c.num_qubits()));
    RunConfig ref_cfg = cfg;
    ref_cfg.backend = Backend::Ref;
    RunConfig vla_cfg = cfg;
    vla_cfg.backend = Backend::Vla;
    const auto ref = execute(c, ref_cfg);
    auto vla = execute(plan, c, vla_cfg);

    VerifyResult v;
    v.max_abs_diff = max_abs_diff(ref.state, vla.state);
    v.tolerance = verify_tolerance(cfg.precision);
    v.passed = v.max_abs_diff <= v.tolerance;
    v.report = std::move(vla.report);
    return v;
}

std::vector<AblationRow> ablate(const Circuit &c, const RunConfig &cfg) {
    RunConfig full = cfg;
    full.backend = Backend::Vla;
    full.buffered = true;
    RunConfig unbuffered = full;
    unbuffered.buffered = false;
    RunConfig unfused = full;
    unfused.max_fuse = 0;
    RunConfig scalar = full;
    scalar.backend = Backend::Ref;

    const std::pair<const char *, RunConfig> configs[] = {
        {"full", full},
        {"no-buffering", unbuffered},
        {"no-fusion", unfused},
        {"scalar", scalar},
    };
    std::vector<AblationRow> rows;
    std::optional<AnyState> reference;
    for (const auto &[name, rc] : configs) {
        auto result = execute(c, rc);
        AblationRow row{name, std::move(result.report), 0.0};
        if (!reference) {
            reference = std::move(result.state);
        } else {
            row.max_abs_diff = max_abs_diff(*reference, result.state);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace vlaq
