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
#include "vlaq/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vlaq/error.hpp"

namespace vlaq {

namespace {

bool same_qubit_sets(const Gate &a, const Gate &b) {
    if (a.targets.size() != b.targets.size() ||
        a.controls.size() != b.controls.size()) {
        return false;
    }
    auto ta = a.targets;
    auto tb = b.targets;
    auto ca = a.controls;
    auto cb = b.controls;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ta == tb && ca == cb;
}

/// Fold `later` into `earlier` (same qubit sets).
void absorb_vertical(FusedGate &earlier, const FusedGate &later) {
    const auto &order = earlier.gate.targets;
    std::vector<unsigned> perm(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        const auto it = std::find(later.gate.targets.begin(),
                                  later.gate.targets.end(), order[j]);
        perm[j] = static_cast<unsigned>(it - later.gate.targets.begin());
    }
    const auto aligned = permute_qubits(later.gate.matrix, perm);
    earlier.gate.matrix = matmul(aligned, earlier.gate.matrix);
    earlier.gate.label = "fused";
    earlier.gate.params.clear();
    earlier.provenance.insert(earlier.provenance.end(),
                              later.provenance.begin(),
                              later.provenance.end());
}

std::vector<FusedGate> vertical_pass(std::vector<FusedGate> in,
                                     unsigned num_qubits) {
    std::vector<FusedGate> out;
    out.reserve(in.size());
    // last[q]: index in `out` of the latest gate touching q, or -1.
    std::vector<long> last(num_qubits, -1);
    for (auto &fg : in) {
        const auto qs = fg.gate.qubits();
        long latest = -1;
        for (const unsigned q : qs) {
            latest = std::max(latest, last[q]);
        }
        if (latest >= 0 &&
            same_qubit_sets(out[static_cast<std::size_t>(latest)].gate,
                            fg.gate)) {
            absorb_vertical(out[static_cast<std::size_t>(latest)], fg);
            continue;
        }
        out.push_back(std::move(fg));
        for (const unsigned q : qs) {
            last[q] = static_cast<long>(out.size() - 1);
        }
    }
    return out;
}

std::vector<FusedGate> horizontal_pass(std::vector<FusedGate> in,
                                       unsigned num_qubits, unsigned max_f) {
    std::vector<FusedGate> out;
    std::vector<bool> consumed(in.size(), false);
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (consumed[i]) {
            continue;
        }
        consumed[i] = true;
        FusedGate cur = std::move(in[i]);
        if (cur.gate.is_controlled() || cur.fused_qubits() >= max_f) {
            out.push_back(std::move(cur));
            continue;
        }
        std::vector<bool> occupied(num_qubits, false);
        std::vector<bool> blocked(num_qubits, false);
        std::size_t closed = 0; // qubits occupied or blocked
        auto mark = [&](std::vector<bool> &set, unsigned q) {
            if (!set[q]) {
                set[q] = true;
                if (!(occupied[q] && blocked[q])) {
                    ++closed;
                }
            }
        };
        for (const unsigned q : cur.gate.targets) {
            mark(occupied, q);
        }
        bool merged = false;
        for (std::size_t j = i + 1; j < in.size(); ++j) {
            if (cur.fused_qubits() >= max_f || closed >= num_qubits) {
                break;
            }
            if (consumed[j]) {
                continue;
            }
            const Gate &cand = in[j].gate;
            const auto qs = cand.qubits();
            const bool free = std::none_of(qs.begin(), qs.end(), [&](unsigned q) {
                return occupied[q] || blocked[q];
            });
            if (free && !cand.is_controlled() &&
                cur.fused_qubits() + cand.num_targets() <= max_f) {
                cur.gate.matrix = tensor_product(cand.matrix, cur.gate.matrix);
                cur.gate.targets.insert(cur.gate.targets.end(),
                                        cand.targets.begin(),
                                        cand.targets.end());
                cur.provenance.insert(cur.provenance.end(),
                                      in[j].provenance.begin(),
                                      in[j].provenance.end());
                for (const unsigned q : cand.targets) {
                    mark(occupied, q);
                }
                consumed[j] = true;
                merged = true;
            } else {
                for (const unsigned q : qs) {
                    mark(blocked, q);
                }
            }
        }
        if (merged) {
            cur.gate.label = "fused";
            cur.gate.params.clear();
        }
        out.push_back(std::move(cur));
    }
    return out;
}

std::vector<FusedGate> track(const Circuit &c) {
    std::vector<FusedGate> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.push_back({c.gates()[i], {i}});
    }
    return out;
}

FusionPlan make_plan(const Circuit &c, unsigned max_f,
                     std::vector<FusedGate> gates) {
    FusionPlan plan;
    plan.num_qubits = c.num_qubits();
    plan.max_f = max_f;
    plan.stats.gates_before = c.size();
    plan.stats.gates_after = gates.size();
    for (auto &fg : gates) {
        std::sort(fg.provenance.begin(), fg.provenance.end());
        ++plan.stats.histogram[fg.fused_qubits()];
    }
    plan.gates = std::move(gates);
    return plan;
}

void check_max_f(unsigned max_f) {
    require(max_f >= 1 && max_f <= kMaxFusedQubits, ErrorCode::InvalidArgument,
            "max fused qubits must be in [1, 6], got " +
                std::to_string(max_f));
}

} // namespace

std::vector<Gate> FusionPlan::gate_list() const {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (const auto &fg : gates) {
        out.push_back(fg.gate);
    }
    return out;
}

std::string FusionPlan::dump() const {
    std::ostringstream out;
    out << "# plan qubits=" << num_qubits << " max_f=" << max_f
        << " before=" << stats.gates_before << " after=" << stats.gates_after
        << '\n';
    auto join = [](const auto &values) {
        std::string s;
        for (const auto v : values) {
            if (!s.empty()) {
                s += ',';
            }
            s += std::to_string(v);
        }
        return s.empty() ? std::string("-") : s;
    };
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto &fg = gates[i];
        out << i << " f=" << fg.fused_qubits()
            << " targets=" << join(fg.gate.targets)
            << " controls=" << join(fg.gate.controls)
            << " provenance=" << join(fg.provenance)
            << " label=" << fg.gate.label << '\n';
    }
    return out.str();
}

Circuit fuse_vertical(const Circuit &c) {
    Circuit out(c.num_qubits(), c.name(), c.seed());
    for (auto &fg : vertical_pass(track(c), c.num_qubits())) {
        out.add(std::move(fg.gate));
    }
    return out;
}

FusionPlan fuse_horizontal(const Circuit &c, unsigned max_f) {
    check_max_f(max_f);
    return make_plan(c, max_f,
                     horizontal_pass(track(c), c.num_qubits(), max_f));
}

FusionPlan plan_fusion(const Circuit &c, unsigned max_f) {
    check_max_f(max_f);
    auto vertical = vertical_pass(track(c), c.num_qubits());
    return make_plan(c, max_f,
                     horizontal_pass(std::move(vertical), c.num_qubits(),
                                     max_f));
}

FusionPlan identity_plan(const Circuit &c) { return make_plan(c, 0, track(c)); }

double arithmetic_intensity(unsigned f, unsigned num_vals) {
    require(f >= 1, ErrorCode::InvalidArgument,
            "fused qubit count must be at least 1");
    require(num_vals >= 1, ErrorCode::InvalidArgument,
            "lane count must be at least 1");
    const double g = std::ldexp(1.0, static_cast<int>(f));
    const double flops = 2.0 * (g * g * 3.0 + g * (g - 1.0));
    const double bytes = num_vals * std::ldexp(1.0, static_cast<int>(f) + 3);
    return flops / bytes;
}

std::uint64_t fusion_footprint_bytes(unsigned f, const LaneConfig &cfg) {
    const std::uint64_t g = std::uint64_t{1} << f;
    const std::uint64_t ew = cfg.elen_bits() / 8;
    return g * g * 2 * ew + 2 * g * cfg.num_vals() * ew;
}

unsigned recommend_f(const LaneConfig &cfg, std::uint64_t cache_budget_bytes,
                     double machine_balance, double slack) {
    require(cache_budget_bytes > 0, ErrorCode::InvalidArgument,
            "cache budget must be positive");
    unsigned best = 1;
    for (unsigned f = 1; f <= kMaxFusedQubits; ++f) {
        if (fusion_footprint_bytes(f, cfg) <= cache_budget_bytes &&
            arithmetic_intensity(f, cfg) <= machine_balance * (1.0 + slack)) {
            best = f;
        }
    }
    return best;
}

} // namespace vlaq
