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
#include "vlaq/vlaq.h"

#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "vlaq/circuits.hpp"
#include "vlaq/error.hpp"
#include "vlaq/fusion.hpp"
#include "vlaq/harness.hpp"
#include "vlaq/metrics.hpp"
#include "vlaq/state.hpp"

struct vlaq_circuit {
    vlaq::Circuit circuit;
};
struct vlaq_plan {
    vlaq::FusionPlan plan;
};
struct vlaq_state {
    vlaq::AnyState state;
};
struct vlaq_report {
    vlaq::RunReport report;
};

namespace {

thread_local std::string last_error;

vlaq_status to_status(vlaq::ErrorCode code) {
    switch (code) {
    case vlaq::ErrorCode::InvalidArgument:
        return VLAQ_ERR_INVALID_ARGUMENT;
    case vlaq::ErrorCode::Layout:
        return VLAQ_ERR_LAYOUT;
    case vlaq::ErrorCode::Capacity:
        return VLAQ_ERR_CAPACITY;
    case vlaq::ErrorCode::Range:
        return VLAQ_ERR_RANGE;
    case vlaq::ErrorCode::Parse:
        return VLAQ_ERR_PARSE;
    case vlaq::ErrorCode::Io:
        return VLAQ_ERR_IO;
    }
    return VLAQ_ERR_INTERNAL;
}

template <typename F> vlaq_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return VLAQ_OK;
    } catch (const vlaq::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return VLAQ_ERR_CAPACITY;
    } catch (const std::exception &e) {
        last_error = e.what();
        return VLAQ_ERR_INTERNAL;
    }
}

void require_ptr(const void *p, const char *what) {
    vlaq::require(p != nullptr, vlaq::ErrorCode::InvalidArgument,
                  std::string(what) + " must not be NULL");
}

vlaq_status copy_text(const std::string &text, char *buf, size_t cap,
                      size_t *needed) {
    if (needed != nullptr) {
        *needed = text.size() + 1;
    }
    if (buf == nullptr) {
        last_error.clear();
        return VLAQ_OK;
    }
    if (cap < text.size() + 1) {
        last_error = "buffer too small: need " +
                     std::to_string(text.size() + 1) + " bytes";
        return VLAQ_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    last_error.clear();
    return VLAQ_OK;
}

vlaq::Precision to_precision(vlaq_precision p) {
    switch (p) {
    case VLAQ_SINGLE:
        return vlaq::Precision::Single;
    case VLAQ_DOUBLE:
        return vlaq::Precision::Double;
    }
    vlaq::fail(vlaq::ErrorCode::InvalidArgument, "unknown precision");
}

vlaq::RunConfig to_run_config(const vlaq_config *cfg) {
    require_ptr(cfg, "config");
    vlaq::RunConfig rc;
    rc.bench = cfg->bench != nullptr ? cfg->bench : "";
    rc.qubits = cfg->qubits;
    switch (cfg->backend) {
    case VLAQ_BACKEND_REF:
        rc.backend = vlaq::Backend::Ref;
        break;
    case VLAQ_BACKEND_VLA:
        rc.backend = vlaq::Backend::Vla;
        break;
    default:
        vlaq::fail(vlaq::ErrorCode::InvalidArgument, "unknown backend");
    }
    vlaq::require(cfg->workers >= 1, vlaq::ErrorCode::InvalidArgument,
                  "workers must be at least 1");
    rc.workers = cfg->workers;
    vlaq::require(cfg->max_fuse <= vlaq::kMaxFusedQubits,
                  vlaq::ErrorCode::InvalidArgument,
                  "max_fuse must be at most " +
                      std::to_string(vlaq::kMaxFusedQubits));
    rc.max_fuse = cfg->max_fuse;
    rc.precision = to_precision(cfg->precision);
    // Validates power-of-two and width bounds.
    (void)vlaq::LaneConfig::from_lanes(cfg->lanes, rc.precision);
    rc.lanes = cfg->lanes;
    rc.seed = cfg->seed;
    rc.depth = cfg->depth;
    rc.buffered = cfg->buffered != 0;
    rc.qrc_entangle = cfg->qrc_entangle != 0;
    rc.circuit_file = cfg->circuit_file != nullptr ? cfg->circuit_file : "";
    rc.marked = cfg->marked;
    if (cfg->iterations >= 0) {
        rc.iterations = static_cast<unsigned>(cfg->iterations);
    }
    rc.synthetic_reps = cfg->synthetic_reps;
    if (cfg->memory_budget != 0) {
        rc.memory_budget = cfg->memory_budget;
    }
    return rc;
}

void publish(vlaq::RunResult &&result, vlaq_report **report,
             vlaq_state **state) {
    if (report != nullptr) {
        *report = new vlaq_report{std::move(result.report)};
    }
    if (state != nullptr) {
        *state = new vlaq_state{std::move(result.state)};
    }
}

} // namespace

extern "C" {

const char *vlaq_version(void) { return "0.1.0"; }

const char *vlaq_last_error(void) { return last_error.c_str(); }

const char *vlaq_status_string(vlaq_status status) {
    switch (status) {
    case VLAQ_OK:
        return "ok";
    case VLAQ_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case VLAQ_ERR_LAYOUT:
        return "layout error";
    case VLAQ_ERR_CAPACITY:
        return "capacity exceeded";
    case VLAQ_ERR_RANGE:
        return "out of range";
    case VLAQ_ERR_PARSE:
        return "parse error";
    case VLAQ_ERR_IO:
        return "i/o error";
    case VLAQ_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case VLAQ_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void vlaq_config_init(vlaq_config *cfg) {
    if (cfg == nullptr) {
        return;
    }
    const vlaq::RunConfig d;
    cfg->bench = "ghz";
    cfg->qubits = d.qubits;
    cfg->backend = VLAQ_BACKEND_VLA;
    cfg->workers = d.workers;
    cfg->max_fuse = d.max_fuse;
    cfg->lanes = d.lanes;
    cfg->precision = VLAQ_SINGLE;
    cfg->seed = d.seed;
    cfg->depth = d.depth;
    cfg->buffered = 1;
    cfg->qrc_entangle = 1;
    cfg->circuit_file = nullptr;
    cfg->marked = d.marked;
    cfg->iterations = -1;
    cfg->synthetic_reps = d.synthetic_reps;
    cfg->memory_budget = 0;
}

vlaq_status vlaq_circuit_build(const vlaq_config *cfg, vlaq_circuit **out) {
    return guarded([&] {
        require_ptr(out, "out");
        *out = new vlaq_circuit{vlaq::build_circuit(to_run_config(cfg))};
    });
}

vlaq_status vlaq_circuit_parse(const char *text, unsigned num_qubits,
                               vlaq_circuit **out) {
    return guarded([&] {
        require_ptr(text, "text");
        require_ptr(out, "out");
        std::istringstream in(text);
        std::optional<unsigned> width;
        if (num_qubits != 0) {
            width = num_qubits;
        }
        *out = new vlaq_circuit{vlaq::parse_circuit(in, width)};
    });
}

vlaq_status vlaq_circuit_load(const char *path, vlaq_circuit **out) {
    return guarded([&] {
        require_ptr(path, "path");
        require_ptr(out, "out");
        *out = new vlaq_circuit{vlaq::load_circuit(path)};
    });
}

void vlaq_circuit_free(vlaq_circuit *c) { delete c; }

unsigned vlaq_circuit_num_qubits(const vlaq_circuit *c) {
    return c == nullptr ? 0 : c->circuit.num_qubits();
}

size_t vlaq_circuit_num_gates(const vlaq_circuit *c) {
    return c == nullptr ? 0 : c->circuit.size();
}

vlaq_status vlaq_circuit_format(const vlaq_circuit *c, char *buf, size_t cap,
                                size_t *needed) {
    std::string text;
    const auto st = guarded([&] {
        require_ptr(c, "circuit");
        text = vlaq::format_circuit(c->circuit);
    });
    return st != VLAQ_OK ? st : copy_text(text, buf, cap, needed);
}

vlaq_status vlaq_circuit_count_ops(const vlaq_circuit *c, unsigned threshold,
                                   uint64_t *low, uint64_t *high) {
    return guarded([&] {
        require_ptr(c, "circuit");
        require_ptr(low, "low");
        require_ptr(high, "high");
        const auto counts = vlaq::count_gate_ops(c->circuit, threshold);
        *low = counts.low;
        *high = counts.high;
    });
}

vlaq_status vlaq_published_ops(const char *bench, unsigned n,
                               unsigned num_vals, unsigned depth,
                               uint64_t *low, uint64_t *high) {
    return guarded([&] {
        require_ptr(bench, "bench");
        require_ptr(low, "low");
        require_ptr(high, "high");
        const auto counts = vlaq::published_gate_ops(bench, n, num_vals, depth);
        vlaq::require(counts.has_value(), vlaq::ErrorCode::InvalidArgument,
                      std::string("no published op counts for '") + bench +
                          "' at this size");
        *low = counts->low;
        *high = counts->high;
    });
}

vlaq_status vlaq_plan_build(const vlaq_circuit *c, unsigned max_f,
                            vlaq_plan **out) {
    return guarded([&] {
        require_ptr(c, "circuit");
        require_ptr(out, "out");
        auto plan = max_f == 0 ? vlaq::identity_plan(c->circuit)
                               : vlaq::plan_fusion(c->circuit, max_f);
        *out = new vlaq_plan{std::move(plan)};
    });
}

void vlaq_plan_free(vlaq_plan *p) { delete p; }

size_t vlaq_plan_num_gates(const vlaq_plan *p) {
    return p == nullptr ? 0 : p->plan.gates.size();
}

vlaq_status vlaq_plan_dump(const vlaq_plan *p, char *buf, size_t cap,
                           size_t *needed) {
    std::string text;
    const auto st = guarded([&] {
        require_ptr(p, "plan");
        text = p->plan.dump();
    });
    return st != VLAQ_OK ? st : copy_text(text, buf, cap, needed);
}

vlaq_status vlaq_arithmetic_intensity(unsigned f, unsigned num_vals,
                                      double *out) {
    return guarded([&] {
        require_ptr(out, "out");
        *out = vlaq::arithmetic_intensity(f, num_vals);
    });
}

vlaq_status vlaq_recommend_f(unsigned lanes, vlaq_precision precision,
                             uint64_t cache_budget_bytes,
                             double machine_balance, unsigned *out) {
    return guarded([&] {
        require_ptr(out, "out");
        const auto cfg =
            vlaq::LaneConfig::from_lanes(lanes, to_precision(precision));
        *out = vlaq::recommend_f(cfg, cache_budget_bytes, machine_balance);
    });
}

vlaq_status vlaq_execute(const vlaq_circuit *c, const vlaq_config *cfg,
                         vlaq_report **report, vlaq_state **state) {
    return guarded([&] {
        require_ptr(c, "circuit");
        publish(vlaq::execute(c->circuit, to_run_config(cfg)), report, state);
    });
}

vlaq_status vlaq_execute_plan(const vlaq_plan *p, const vlaq_circuit *c,
                              const vlaq_config *cfg, vlaq_report **report,
                              vlaq_state **state) {
    return guarded([&] {
        require_ptr(p, "plan");
        require_ptr(c, "circuit");
        publish(vlaq::execute(p->plan, c->circuit, to_run_config(cfg)), report,
                state);
    });
}

vlaq_status vlaq_verify(const vlaq_circuit *c, const vlaq_config *cfg,
                        unsigned qubit_cap, double *max_abs_diff,
                        double *tolerance, int *passed, vlaq_report **report) {
    return guarded([&] {
        require_ptr(c, "circuit");
        const auto cap = qubit_cap == 0 ? vlaq::kDefaultVerifyCap : qubit_cap;
        auto v = vlaq::verify(c->circuit, to_run_config(cfg), cap);
        if (max_abs_diff != nullptr) {
            *max_abs_diff = v.max_abs_diff;
        }
        if (tolerance != nullptr) {
            *tolerance = v.tolerance;
        }
        if (passed != nullptr) {
            *passed = v.passed ? 1 : 0;
        }
        if (report != nullptr) {
            *report = new vlaq_report{std::move(v.report)};
        }
    });
}

vlaq_status vlaq_ablate(const vlaq_circuit *c, const vlaq_config *cfg,
                        vlaq_report **reports, double *diffs) {
    return guarded([&] {
        require_ptr(c, "circuit");
        require_ptr(reports, "reports");
        auto rows = vlaq::ablate(c->circuit, to_run_config(cfg));
        for (std::size_t i = 0; i < rows.size() && i < VLAQ_ABLATION_ROWS;
             ++i) {
            reports[i] = new vlaq_report{std::move(rows[i].report)};
            if (diffs != nullptr) {
                diffs[i] = rows[i].max_abs_diff;
            }
        }
    });
}

const char *vlaq_ablation_row_name(unsigned row) {
    static const char *const names[VLAQ_ABLATION_ROWS] = {
        "full", "no-buffering", "no-fusion", "scalar"};
    return row < VLAQ_ABLATION_ROWS ? names[row] : nullptr;
}

void vlaq_report_free(vlaq_report *r) { delete r; }

vlaq_status vlaq_report_counters(const vlaq_report *r, vlaq_counters *out) {
    return guarded([&] {
        require_ptr(r, "report");
        require_ptr(out, "out");
        const auto &c = r->report.counters;
        *out = vlaq_counters{c.vector_ops,      c.scalar_ops,
                             c.active_lane_sum, c.full_mask_ops,
                             c.partial_mask_ops, c.flops,
                             c.mem_bytes,       c.buffer_bytes};
    });
}

vlaq_status vlaq_report_metrics(const vlaq_report *r, vlaq_metrics *out) {
    return guarded([&] {
        require_ptr(r, "report");
        require_ptr(out, "out");
        const auto &rep = r->report;
        out->wall_ms = rep.wall_ms;
        out->avl = rep.avl;
        out->irr = rep.irr;
        out->ai = rep.ai;
        out->ai_model = rep.ai_model;
        out->expectation = rep.expectation;
        out->norm_sq = rep.norm_sq;
        out->ref_op_count = rep.ref_op_count;
        out->gates_before = rep.fusion.before;
        out->gates_after = rep.fusion.after;
        out->max_f = rep.fusion.max_f;
        out->workers = rep.workers;
    });
}

vlaq_status vlaq_report_json(const vlaq_report *r, int include_timing,
                             char *buf, size_t cap, size_t *needed) {
    std::string text;
    const auto st = guarded([&] {
        require_ptr(r, "report");
        text = vlaq::report_to_json(r->report, include_timing != 0);
    });
    return st != VLAQ_OK ? st : copy_text(text, buf, cap, needed);
}

vlaq_status vlaq_state_zero(unsigned num_qubits, vlaq_precision precision,
                            vlaq_state **out) {
    return guarded([&] {
        require_ptr(out, "out");
        *out = new vlaq_state{
            vlaq::make_zero_state(num_qubits, to_precision(precision))};
    });
}

void vlaq_state_free(vlaq_state *s) { delete s; }

unsigned vlaq_state_num_qubits(const vlaq_state *s) {
    return s == nullptr ? 0 : vlaq::num_qubits(s->state);
}

vlaq_precision vlaq_state_precision(const vlaq_state *s) {
    return s != nullptr &&
                   std::holds_alternative<vlaq::StateVector<double>>(s->state)
               ? VLAQ_DOUBLE
               : VLAQ_SINGLE;
}

size_t vlaq_state_block_lanes(const vlaq_state *s) {
    if (s == nullptr) {
        return 0;
    }
    return std::visit(
        [](const auto &sv) -> size_t {
            return sv.layout().is_blocked() ? sv.layout().lanes : 0;
        },
        s->state);
}

vlaq_status vlaq_state_amplitude(const vlaq_state *s, uint64_t index,
                                 double *re, double *im) {
    return guarded([&] {
        require_ptr(s, "state");
        std::visit(
            [&](const auto &sv) {
                const auto a = sv.amplitude_at(index);
                if (re != nullptr) {
                    *re = static_cast<double>(a.real());
                }
                if (im != nullptr) {
                    *im = static_cast<double>(a.imag());
                }
            },
            s->state);
    });
}

vlaq_status vlaq_state_norm_sq(const vlaq_state *s, double *out) {
    return guarded([&] {
        require_ptr(s, "state");
        require_ptr(out, "out");
        *out = vlaq::norm_sq(s->state);
    });
}

vlaq_status vlaq_state_max_abs_diff(const vlaq_state *a, const vlaq_state *b,
                                    double *out) {
    return guarded([&] {
        require_ptr(a, "a");
        require_ptr(b, "b");
        require_ptr(out, "out");
        *out = vlaq::max_abs_diff(a->state, b->state);
    });
}

vlaq_status vlaq_state_to_blocked(vlaq_state *s, size_t lanes) {
    return guarded([&] {
        require_ptr(s, "state");
        std::visit([&](auto &sv) { sv.to_blocked(lanes); }, s->state);
    });
}

vlaq_status vlaq_state_to_interleaved(vlaq_state *s) {
    return guarded([&] {
        require_ptr(s, "state");
        std::visit([](auto &sv) { sv.to_interleaved(); }, s->state);
    });
}

vlaq_status vlaq_state_save(const vlaq_state *s, const char *path) {
    return guarded([&] {
        require_ptr(s, "state");
        require_ptr(path, "path");
        vlaq::write_state(path, s->state);
    });
}

vlaq_status vlaq_state_load(const char *path, vlaq_state **out) {
    return guarded([&] {
        require_ptr(path, "path");
        require_ptr(out, "out");
        *out = new vlaq_state{vlaq::read_state(path)};
    });
}

} // extern "C"
