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
 * Experiment driver shared by the C API and the command-line tool:
 * circuit construction from a RunConfig, backend execution with reports,
 * oracle verification and the ablation set.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlaq/fusion.hpp"
#include "vlaq/gates.hpp"
#include "vlaq/metrics.hpp"
#include "vlaq/state.hpp"

namespace vlaq {

enum class Backend { Ref, Vla };

[[nodiscard]] std::string to_string(Backend b);
[[nodiscard]] Backend parse_backend(const std::string &text);

/// Benchmarks accepted by build_circuit; "file" reads circuit_file.
[[nodiscard]] const std::vector<std::string> &benchmark_names();

struct RunConfig {
    std::string bench = "ghz";
    unsigned qubits = 10;
    Backend backend = Backend::Vla;
    unsigned workers = 1;
    /// Largest fused gate width; 0 executes the circuit gate by gate.
    unsigned max_fuse = 3;
    unsigned lanes = 4;
    Precision precision = Precision::Single;
    std::uint64_t seed = 1;
    unsigned depth = 64;
    bool buffered = true;
    bool qrc_entangle = true;
    std::string circuit_file;
    std::uint64_t marked = 0;
    std::optional<unsigned> iterations;
    unsigned synthetic_reps = 4;
    std::uint64_t memory_budget = default_memory_budget();
};

[[nodiscard]] Circuit build_circuit(const RunConfig &cfg);

/// Fusion plan the vla backend executes for cfg.max_fuse.
[[nodiscard]] FusionPlan build_plan(const Circuit &c, const RunConfig &cfg);

struct RunResult {
    RunReport report;
    AnyState state;
};

/// Ref runs the circuit unfused on the interleaved layout; vla runs the
/// fusion plan on Blocked(lanes).
[[nodiscard]] RunResult execute(const Circuit &c, const RunConfig &cfg);
[[nodiscard]] RunResult execute(const FusionPlan &plan, const Circuit &c,
                                const RunConfig &cfg);

[[nodiscard]] double verify_tolerance(Precision p) noexcept;

inline constexpr unsigned kDefaultVerifyCap = 14;

struct VerifyResult {
    double max_abs_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    RunReport report;
};

/// Unfused ref against the vla plan in cfg.precision. Refuses circuits
/// wider than qubit_cap.
[[nodiscard]] VerifyResult verify(const Circuit &c, const RunConfig &cfg,
                                  unsigned qubit_cap = kDefaultVerifyCap);
[[nodiscard]] VerifyResult verify(const FusionPlan &plan, const Circuit &c,
                                  const RunConfig &cfg,
                                  unsigned qubit_cap = kDefaultVerifyCap);

struct AblationRow {
    std::string name;
    RunReport report;
    /// Distance of this row's final state from the "full" row.
    double max_abs_diff = 0.0;
};

/// Rows: full, no-buffering, no-fusion, scalar.
[[nodiscard]] std::vector<AblationRow> ablate(const Circuit &c,
                                              const RunConfig &cfg);

} // namespace vlaq
