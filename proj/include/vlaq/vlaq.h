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
 * C interface to the vlaq simulator.
 *
 * Every object is an opaque handle released with its _free function.
 * Functions return a vlaq_status; on failure vlaq_last_error() holds a
 * message for the calling thread. Functions that produce text take a
 * caller buffer and report the required size (including the trailing NUL)
 * through `needed`; pass a NULL buffer to query the size.
 */
#ifndef VLAQ_VLAQ_H
#define VLAQ_VLAQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(VLAQ_BUILDING_LIBRARY)
#define VLAQ_API __declspec(dllexport)
#else
#define VLAQ_API __declspec(dllimport)
#endif
#else
#define VLAQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vlaq_status {
    VLAQ_OK = 0,
    VLAQ_ERR_INVALID_ARGUMENT = 1,
    VLAQ_ERR_LAYOUT = 2,
    VLAQ_ERR_CAPACITY = 3,
    VLAQ_ERR_RANGE = 4,
    VLAQ_ERR_PARSE = 5,
    VLAQ_ERR_IO = 6,
    VLAQ_ERR_BUFFER_TOO_SMALL = 7,
    VLAQ_ERR_INTERNAL = 8
} vlaq_status;

typedef enum vlaq_backend { VLAQ_BACKEND_REF = 0, VLAQ_BACKEND_VLA = 1 } vlaq_backend;

typedef enum vlaq_precision {
    VLAQ_SINGLE = 0,
    VLAQ_DOUBLE = 1
} vlaq_precision;

typedef struct vlaq_circuit vlaq_circuit;
typedef struct vlaq_plan vlaq_plan;
typedef struct vlaq_state vlaq_state;
typedef struct vlaq_report vlaq_report;

typedef struct vlaq_config {
    const char *bench;        /* qft, grover, ghz, qrc, qv, synthetic, file */
    unsigned qubits;
    vlaq_backend backend;
    unsigned workers;
    unsigned max_fuse;        /* 0 = no fusion */
    unsigned lanes;
    vlaq_precision precision;
    uint64_t seed;
    unsigned depth;
    int buffered;
    int qrc_entangle;
    const char *circuit_file; /* used when bench is "file" */
    uint64_t marked;
    int iterations;           /* grover; negative = default */
    unsigned synthetic_reps;
    uint64_t memory_budget;   /* bytes; 0 = environment or built-in default */
} vlaq_config;

typedef struct vlaq_counters {
    uint64_t vector_ops;
    uint64_t scalar_ops;
    uint64_t active_lane_sum;
    uint64_t full_mask_ops;
    uint64_t partial_mask_ops;
    uint64_t flops;
    uint64_t mem_bytes;
    uint64_t buffer_bytes;
} vlaq_counters;

typedef struct vlaq_metrics {
    double wall_ms;
    double avl;
    double irr;
    double ai;
    double ai_model;
    double expectation;
    double norm_sq;
    uint64_t ref_op_count;
    uint64_t gates_before;
    uint64_t gates_after;
    unsigned max_f;
    unsigned workers;
} vlaq_metrics;

#define VLAQ_ABLATION_ROWS 4

VLAQ_API const char *vlaq_version(void);
VLAQ_API const char *vlaq_last_error(void);
VLAQ_API const char *vlaq_status_string(vlaq_status status);

VLAQ_API void vlaq_config_init(vlaq_config *cfg);

/* Circuits */
VLAQ_API vlaq_status vlaq_circuit_build(const vlaq_config *cfg,
                                        vlaq_circuit **out);
VLAQ_API vlaq_status vlaq_circuit_parse(const char *text, unsigned num_qubits,
                                        vlaq_circuit **out);
VLAQ_API vlaq_status vlaq_circuit_load(const char *path, vlaq_circuit **out);
VLAQ_API void vlaq_circuit_free(vlaq_circuit *c);
VLAQ_API unsigned vlaq_circuit_num_qubits(const vlaq_circuit *c);
VLAQ_API size_t vlaq_circuit_num_gates(const vlaq_circuit *c);
VLAQ_API vlaq_status vlaq_circuit_format(const vlaq_circuit *c, char *buf,
                                         size_t cap, size_t *needed);
VLAQ_API vlaq_status vlaq_circuit_count_ops(const vlaq_circuit *c,
                                            unsigned threshold, uint64_t *low,
                                            uint64_t *high);
/* Returns VLAQ_ERR_INVALID_ARGUMENT when no formula exists for bench. */
VLAQ_API vlaq_status vlaq_published_ops(const char *bench, unsigned n,
                                        unsigned num_vals, unsigned depth,
                                        uint64_t *low, uint64_t *high);

/* Fusion */
VLAQ_API vlaq_status vlaq_plan_build(const vlaq_circuit *c, unsigned max_f,
                                     vlaq_plan **out);
VLAQ_API void vlaq_plan_free(vlaq_plan *p);
VLAQ_API size_t vlaq_plan_num_gates(const vlaq_plan *p);
VLAQ_API vlaq_status vlaq_plan_dump(const vlaq_plan *p, char *buf, size_t cap,
                                    size_t *needed);
VLAQ_API vlaq_status vlaq_arithmetic_intensity(unsigned f, unsigned num_vals,
                                               double *out);
VLAQ_API vlaq_status vlaq_recommend_f(unsigned lanes, vlaq_precision precision,
                                      uint64_t cache_budget_bytes,
                                      double machine_balance, unsigned *out);

/* Execution. `state` may be NULL when the final state is not needed. */
VLAQ_API vlaq_status vlaq_execute(const vlaq_circuit *c,
                                  const vlaq_config *cfg, vlaq_report **report,
                                  vlaq_state **state);
VLAQ_API vlaq_status vlaq_execute_plan(const vlaq_plan *p,
                                       const vlaq_circuit *c,
                                       const vlaq_config *cfg,
                                       vlaq_report **report,
                                       vlaq_state **state);
/* `report` may be NULL. qubit_cap 0 selects the default cap of 14. */
VLAQ_API vlaq_status vlaq_verify(const vlaq_circuit *c, const vlaq_config *cfg,
                                 unsigned qubit_cap, double *max_abs_diff,
                                 double *tolerance, int *passed,
                                 vlaq_report **report);
/* Fills VLAQ_ABLATION_ROWS reports and state distances from the first. */
VLAQ_API vlaq_status vlaq_ablate(const vlaq_circuit *c, const vlaq_config *cfg,
                                 vlaq_report **reports, double *diffs);
VLAQ_API const char *vlaq_ablation_row_name(unsigned row);

/* Reports */
VLAQ_API void vlaq_report_free(vlaq_report *r);
VLAQ_API vlaq_status vlaq_report_counters(const vlaq_report *r,
                                          vlaq_counters *out);
VLAQ_API vlaq_status vlaq_report_metrics(const vlaq_report *r,
                                         vlaq_metrics *out);
VLAQ_API vlaq_status vlaq_report_json(const vlaq_report *r, int include_timing,
                                      char *buf, size_t cap, size_t *needed);

/* States. Amplitude indices are basis indices independent of layout. */
VLAQ_API vlaq_status vlaq_state_zero(unsigned num_qubits,
                                     vlaq_precision precision,
                                     vlaq_state **out);
VLAQ_API void vlaq_state_free(vlaq_state *s);
VLAQ_API unsigned vlaq_state_num_qubits(const vlaq_state *s);
VLAQ_API vlaq_precision vlaq_state_precision(const vlaq_state *s);
/* 0 for interleaved, otherwise the block lane count. */
VLAQ_API size_t vlaq_state_block_lanes(const vlaq_state *s);
VLAQ_API vlaq_status vlaq_state_amplitude(const vlaq_state *s, uint64_t index,
                                          double *re, double *im);
VLAQ_API vlaq_status vlaq_state_norm_sq(const vlaq_state *s, double *out);
VLAQ_API vlaq_status vlaq_state_max_abs_diff(const vlaq_state *a,
                                             const vlaq_state *b, double *out);
VLAQ_API vlaq_status vlaq_state_to_blocked(vlaq_state *s, size_t lanes);
VLAQ_API vlaq_status vlaq_state_to_interleaved(vlaq_state *s);
VLAQ_API vlaq_status vlaq_state_save(const vlaq_state *s, const char *path);
VLAQ_API vlaq_status vlaq_state_load(const char *path, vlaq_state **out);

#ifdef __cplusplus
}
#endif

#endif
