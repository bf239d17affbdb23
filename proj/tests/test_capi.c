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
/* Plain C11 exercise of the public C API. argv[1] is a scratch directory. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "vlaq/vlaq.h"

static int failures = 0;

#define EXPECT(cond)                                                          \
    do {                                                                      \
        if (!(cond)) {                                                        \
            fprintf(stderr, "%s:%d: expectation failed: %s (%s)\n", __FILE__, \
                    __LINE__, #cond, vlaq_last_error());                      \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

static void test_errors(void) {
    vlaq_config cfg;
    vlaq_config_init(&cfg);
    cfg.bench = "nope";
    vlaq_circuit *c = NULL;
    EXPECT(vlaq_circuit_build(&cfg, &c) == VLAQ_ERR_INVALID_ARGUMENT);
    EXPECT(c == NULL);
    EXPECT(strlen(vlaq_last_error()) > 0);
    EXPECT(vlaq_circuit_build(NULL, &c) == VLAQ_ERR_INVALID_ARGUMENT);
    EXPECT(vlaq_circuit_parse("h 7\n", 3, &c) != VLAQ_OK);
    EXPECT(vlaq_circuit_parse("bogus 0\n", 3, &c) == VLAQ_ERR_PARSE);
    EXPECT(vlaq_circuit_load("/nonexistent/vlaq.txt", &c) == VLAQ_ERR_IO);

    cfg.bench = "ghz";
    cfg.qubits = 41;
    EXPECT(vlaq_circuit_build(&cfg, &c) == VLAQ_ERR_CAPACITY);

    cfg.qubits = 6;
    EXPECT(vlaq_circuit_build(&cfg, &c) == VLAQ_OK);
    vlaq_report *r = NULL;
    cfg.lanes = 3;
    EXPECT(vlaq_execute(c, &cfg, &r, NULL) == VLAQ_ERR_INVALID_ARGUMENT);
    cfg.lanes = 4;
    cfg.workers = 0;
    EXPECT(vlaq_execute(c, &cfg, &r, NULL) == VLAQ_ERR_INVALID_ARGUMENT);
    cfg.workers = 1;
    cfg.max_fuse = 7;
    EXPECT(vlaq_execute(c, &cfg, &r, NULL) == VLAQ_ERR_INVALID_ARGUMENT);
    EXPECT(r == NULL);
    vlaq_circuit_free(c);

    EXPECT(strcmp(vlaq_status_string(VLAQ_OK), vlaq_status_string(VLAQ_ERR_IO)) != 0);
    EXPECT(vlaq_ablation_row_name(VLAQ_ABLATION_ROWS) == NULL);
    vlaq_circuit_free(NULL);
    vlaq_report_free(NULL);
    vlaq_state_free(NULL);
    vlaq_plan_free(NULL);
}

static void test_run_and_report(void) {
    vlaq_config cfg;
    vlaq_config_init(&cfg);
    cfg.bench = "qrc";
    cfg.qubits = 8;
    cfg.depth = 4;
    vlaq_circuit *c = NULL;
    EXPECT(vlaq_circuit_build(&cfg, &c) == VLAQ_OK);
    EXPECT(vlaq_circuit_num_qubits(c) == 8);
    EXPECT(vlaq_circuit_num_gates(c) == 4 * 8 + 14);

    vlaq_report *r = NULL;
    vlaq_state *s = NULL;
    EXPECT(vlaq_execute(c, &cfg, &r, &s) == VLAQ_OK);
    vlaq_metrics m;
    vlaq_counters k;
    EXPECT(vlaq_report_metrics(r, &m) == VLAQ_OK);
    EXPECT(vlaq_report_counters(r, &k) == VLAQ_OK);
    EXPECT(fabs(m.norm_sq - 1.0) < 1e-5);
    EXPECT(m.gates_before == vlaq_circuit_num_gates(c));
    EXPECT(m.max_f == 3);
    EXPECT(k.vector_ops > 0);
    EXPECT(vlaq_state_block_lanes(s) == 4);
    EXPECT(vlaq_state_precision(s) == VLAQ_SINGLE);

    size_t needed = 0;
    EXPECT(vlaq_report_json(r, 0, NULL, 0, &needed) == VLAQ_OK);
    EXPECT(needed > 10);
    char small[4];
    EXPECT(vlaq_report_json(r, 0, small, sizeof small, &needed) ==
           VLAQ_ERR_BUFFER_TOO_SMALL);
    char *json = malloc(needed);
    EXPECT(vlaq_report_json(r, 0, json, needed, NULL) == VLAQ_OK);
    EXPECT(strlen(json) + 1 == needed);
    EXPECT(strstr(json, "\"backend\": \"vla\"") != NULL);
    free(json);

    vlaq_plan *p = NULL;
    EXPECT(vlaq_plan_build(c, 2, &p) == VLAQ_OK);
    EXPECT(vlaq_plan_num_gates(p) < vlaq_circuit_num_gates(c));
    vlaq_report *rp = NULL;
    vlaq_state *sp = NULL;
    EXPECT(vlaq_execute_plan(p, c, &cfg, &rp, &sp) == VLAQ_OK);
    double d = 1.0;
    EXPECT(vlaq_state_max_abs_diff(s, sp, &d) == VLAQ_OK);
    EXPECT(d <= 1e-6);
    EXPECT(vlaq_plan_dump(p, NULL, 0, &needed) == VLAQ_OK && needed > 1);

    double diff = 1.0;
    double tol = 0.0;
    int passed = 0;
    EXPECT(vlaq_verify(c, &cfg, 0, &diff, &tol, &passed, NULL) == VLAQ_OK);
    EXPECT(passed == 1 && diff <= tol && tol == 1e-6);
    EXPECT(vlaq_verify(c, &cfg, 4, &diff, &tol, &passed, NULL) == VLAQ_ERR_CAPACITY);

    vlaq_report *rows[VLAQ_ABLATION_ROWS] = {0};
    double diffs[VLAQ_ABLATION_ROWS];
    EXPECT(vlaq_ablate(c, &cfg, rows, diffs) == VLAQ_OK);
    for (unsigned i = 0; i < VLAQ_ABLATION_ROWS; ++i) {
        EXPECT(rows[i] != NULL);
        EXPECT(diffs[i] <= 1e-6);
        EXPECT(vlaq_ablation_row_name(i) != NULL);
        vlaq_report_free(rows[i]);
    }

    uint64_t low = 0;
    uint64_t high = 0;
    EXPECT(vlaq_circuit_count_ops(c, 4, &low, &high) == VLAQ_OK);
    EXPECT(low + high == vlaq_circuit_num_gates(c));
    EXPECT(vlaq_published_ops("ghz", 32, 4, 0, &low, &high) == VLAQ_OK);
    EXPECT(low == 4 && high == 28);
    EXPECT(vlaq_published_ops("synthetic", 32, 4, 0, &low, &high) ==
           VLAQ_ERR_INVALID_ARGUMENT);

    double ai = 0.0;
    EXPECT(vlaq_arithmetic_intensity(3, 4, &ai) == VLAQ_OK && ai == 1.9375);
    unsigned f = 0;
    EXPECT(vlaq_recommend_f(4, VLAQ_SINGLE, 1u << 30, 1.9, &f) == VLAQ_OK && f == 3);

    vlaq_plan_free(p);
    vlaq_report_free(rp);
    vlaq_state_free(sp);
    vlaq_report_free(r);
    vlaq_state_free(s);
    vlaq_circuit_free(c);
}

static void test_states(const char *dir) {
    vlaq_circuit *c = NULL;
    EXPECT(vlaq_circuit_parse("h 0\nx 1 | 0\n", 3, &c) == VLAQ_OK);
    size_t needed = 0;
    EXPECT(vlaq_circuit_format(c, NULL, 0, &needed) == VLAQ_OK);
    char *text = malloc(needed);
    EXPECT(vlaq_circuit_format(c, text, needed, NULL) == VLAQ_OK);
    vlaq_circuit *again = NULL;
    EXPECT(vlaq_circuit_parse(text, 0, &again) == VLAQ_OK);
    EXPECT(vlaq_circuit_num_gates(again) == 2);
    free(text);
    vlaq_circuit_free(again);

    vlaq_config cfg;
    vlaq_config_init(&cfg);
    cfg.lanes = 2;
    cfg.precision = VLAQ_DOUBLE;
    vlaq_state *s = NULL;
    EXPECT(vlaq_execute(c, &cfg, NULL, &s) == VLAQ_OK);
    double re = 0.0;
    double im = 1.0;
    EXPECT(vlaq_state_amplitude(s, 3, &re, &im) == VLAQ_OK);
    EXPECT(fabs(re - 1.0 / sqrt(2.0)) < 1e-15 && im == 0.0);
    EXPECT(vlaq_state_amplitude(s, 8, &re, &im) == VLAQ_ERR_RANGE);

    char path[4096];
    snprintf(path, sizeof path, "%s/bell.state", dir);
    EXPECT(vlaq_state_save(s, path) == VLAQ_OK);
    vlaq_state *loaded = NULL;
    EXPECT(vlaq_state_load(path, &loaded) == VLAQ_OK);
    double d = 1.0;
    EXPECT(vlaq_state_max_abs_diff(s, loaded, &d) == VLAQ_OK && d == 0.0);
    EXPECT(vlaq_state_block_lanes(loaded) == 0);

    EXPECT(vlaq_state_to_interleaved(s) == VLAQ_OK);
    EXPECT(vlaq_state_block_lanes(s) == 0);
    EXPECT(vlaq_state_to_blocked(s, 4) == VLAQ_OK);
    EXPECT(vlaq_state_block_lanes(s) == 4);
    EXPECT(vlaq_state_to_blocked(s, 3) != VLAQ_OK);
    EXPECT(vlaq_state_max_abs_diff(s, loaded, &d) == VLAQ_OK && d == 0.0);

    vlaq_state *z = NULL;
    EXPECT(vlaq_state_zero(4, VLAQ_SINGLE, &z) == VLAQ_OK);
    double n = 0.0;
    EXPECT(vlaq_state_norm_sq(z, &n) == VLAQ_OK && n == 1.0);
    EXPECT(vlaq_state_num_qubits(z) == 4);
    EXPECT(vlaq_state_max_abs_diff(z, s, &d) != VLAQ_OK);
    EXPECT(vlaq_state_load("/nonexistent/x.state", &z) == VLAQ_ERR_IO);

    vlaq_state_free(z);
    vlaq_state_free(loaded);
    vlaq_state_free(s);
    vlaq_circuit_free(c);
}

int main(int argc, char **argv) {
    if (argc < 2) {
        fprintf(stderr, "usage: test_capi <scratch-dir>\n");
        return 2;
    }
    EXPECT(strlen(vlaq_version()) > 0);
    test_errors();
    test_run_and_report();
    test_states(argv[1]);
    if (failures != 0) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    printf("capi: all checks passed\n");
    return 0;
}
