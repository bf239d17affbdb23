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
// Command-line driver. Talks to the simulator only through the C API.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "vlaq/vlaq.h"

namespace {

namespace fs = std::filesystem;

struct CliError {
    std::string message;
};

void check(vlaq_status st) {
    if (st != VLAQ_OK) {
        throw CliError{std::string(vlaq_status_string(st)) + ": " +
                       vlaq_last_error()};
    }
}

struct CircuitDeleter {
    void operator()(vlaq_circuit *c) const { vlaq_circuit_free(c); }
};
struct PlanDeleter {
    void operator()(vlaq_plan *p) const { vlaq_plan_free(p); }
};
struct ReportDeleter {
    void operator()(vlaq_report *r) const { vlaq_report_free(r); }
};
struct StateDeleter {
    void operator()(vlaq_state *s) const { vlaq_state_free(s); }
};
using CircuitPtr = std::unique_ptr<vlaq_circuit, CircuitDeleter>;
using PlanPtr = std::unique_ptr<vlaq_plan, PlanDeleter>;
using ReportPtr = std::unique_ptr<vlaq_report, ReportDeleter>;
using StatePtr = std::unique_ptr<vlaq_state, StateDeleter>;

template <typename Fn> std::string read_text(Fn &&fn) {
    std::size_t needed = 0;
    check(fn(nullptr, 0, &needed));
    std::string text(needed, '\0');
    check(fn(text.data(), text.size(), &needed));
    text.resize(needed - 1);
    return text;
}

std::string report_json(const vlaq_report *r, bool timing) {
    return read_text([&](char *buf, std::size_t cap, std::size_t *needed) {
        return vlaq_report_json(r, timing ? 1 : 0, buf, cap, needed);
    });
}

struct Options {
    std::string backend = "vla";
    std::string bench = "ghz";
    unsigned qubits = 10;
    unsigned workers = 1;
    unsigned max_fuse = 3;
    unsigned reps = 1;
    unsigned lanes = 4;
    std::string precision = "single";
    std::uint64_t seed = 1;
    unsigned depth = 64;
    std::uint64_t marked = 0;
    int iterations = -1;
    unsigned synthetic_reps = 4;
    bool verify = false;
    unsigned verify_cap = 14;
    std::string sweep_f;
    bool ablate = false;
    std::string dump_state;
    std::string circuit_file;
    std::string out = ".";
    bool json = false;
    bool csv = false;
    bool no_timing = false;
    bool no_buffering = false;
    bool qrc_no_entangle = false;
    bool plan_dump = false;
    bool table2 = false;
};

vlaq_config make_config(const Options &o) {
    vlaq_config cfg;
    vlaq_config_init(&cfg);
    cfg.bench = o.bench.c_str();
    cfg.qubits = o.qubits;
    cfg.backend = o.backend == "ref" ? VLAQ_BACKEND_REF : VLAQ_BACKEND_VLA;
    cfg.workers = o.workers;
    cfg.max_fuse = o.max_fuse;
    cfg.lanes = o.lanes;
    cfg.precision = o.precision == "double" ? VLAQ_DOUBLE : VLAQ_SINGLE;
    cfg.seed = o.seed;
    cfg.depth = o.depth;
    cfg.buffered = o.no_buffering ? 0 : 1;
    cfg.qrc_entangle = o.qrc_no_entangle ? 0 : 1;
    cfg.circuit_file = o.circuit_file.empty() ? nullptr : o.circuit_file.c_str();
    cfg.marked = o.marked;
    cfg.iterations = o.iterations;
    cfg.synthetic_reps = o.synthetic_reps;
    return cfg;
}

std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

const char *kCsvHeader =
    "bench,n,backend,precision,lanes,workers,max_f,buffered,reps,"
    "wall_ms_mean,wall_ms_min,gates_before,gates_after,vector_ops,"
    "scalar_ops,flops,mem_bytes,avl,irr,ai,ai_model";

std::string csv_row(const Options &o, const vlaq_config &cfg,
                    const vlaq_circuit *c, const std::vector<ReportPtr> &runs,
                    bool timing) {
    vlaq_metrics m0{};
    vlaq_counters k0{};
    check(vlaq_report_metrics(runs.front().get(), &m0));
    check(vlaq_report_counters(runs.front().get(), &k0));
    double sum = 0.0;
    double best = 0.0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        vlaq_metrics m{};
        check(vlaq_report_metrics(runs[i].get(), &m));
        sum += m.wall_ms;
        best = i == 0 ? m.wall_ms : std::min(best, m.wall_ms);
    }
    const double mean = timing ? sum / static_cast<double>(runs.size()) : 0.0;
    if (!timing) {
        best = 0.0;
    }
    std::ostringstream row;
    row << o.bench << ',' << vlaq_circuit_num_qubits(c) << ','
        << (cfg.backend == VLAQ_BACKEND_REF ? "ref" : "vla") << ','
        << o.precision << ',' << o.lanes << ',' << m0.workers << ','
        << m0.max_f << ',' << cfg.buffered << ',' << runs.size() << ','
        << fmt(mean, 3) << ',' << fmt(best, 3) << ',' << m0.gates_before
        << ',' << m0.gates_after << ',' << k0.vector_ops << ','
        << k0.scalar_ops << ',' << k0.flops << ',' << k0.mem_bytes << ','
        << fmt(m0.avl) << ',' << fmt(m0.irr) << ',' << fmt(m0.ai) << ','
        << fmt(m0.ai_model);
    return row.str();
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CliError{"cannot write " + path.string()};
    }
    out << text;
    if (!out) {
        throw CliError{"failed writing " + path.string()};
    }
}

std::string run_stem(const Options &o, const vlaq_circuit *c) {
    return o.bench + "_q" + std::to_string(vlaq_circuit_num_qubits(c)) + "_" +
           o.backend;
}

std::vector<ReportPtr> run_reps(const vlaq_circuit *c, const vlaq_config &cfg,
                                unsigned reps, StatePtr *last_state) {
    std::vector<ReportPtr> runs;
    for (unsigned i = 0; i < reps; ++i) {
        vlaq_report *r = nullptr;
        vlaq_state *s = nullptr;
        const bool keep = last_state != nullptr && i + 1 == reps;
        check(vlaq_execute(c, &cfg, &r, keep ? &s : nullptr));
        runs.emplace_back(r);
        if (keep) {
            last_state->reset(s);
        }
    }
    return runs;
}

void print_summary(std::ostream &os, const std::string &label,
                   const vlaq_report *r) {
    vlaq_metrics m{};
    vlaq_counters k{};
    check(vlaq_report_metrics(r, &m));
    check(vlaq_report_counters(r, &k));
    os << label << " wall_ms=" << fmt(m.wall_ms, 3)
       << " gates=" << m.gates_before << "->" << m.gates_after
       << " vector_ops=" << k.vector_ops << " scalar_ops=" << k.scalar_ops
       << " flops=" << k.flops << " avl=" << fmt(m.avl, 4)
       << " irr=" << fmt(m.irr, 4) << " ai=" << fmt(m.ai, 4)
       << " norm_sq=" << fmt(m.norm_sq, 8) << '\n';
}

int do_table2(const Options &o, const vlaq_circuit *c) {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    check(vlaq_circuit_count_ops(c, o.lanes, &low, &high));
    std::cout << "bench,n,num_vals,low,high,published_low,published_high,"
                 "match\n";
    std::uint64_t plow = 0;
    std::uint64_t phigh = 0;
    const auto st = vlaq_published_ops(o.bench.c_str(),
                                       vlaq_circuit_num_qubits(c), o.lanes,
                                       o.depth, &plow, &phigh);
    std::cout << o.bench << ',' << vlaq_circuit_num_qubits(c) << ','
              << o.lanes << ',' << low << ',' << high << ',';
    if (st == VLAQ_OK) {
        std::cout << plow << ',' << phigh << ','
                  << (plow == low && phigh == high ? "yes" : "no") << '\n';
    } else {
        std::cout << "-,-,-\n";
    }
    return 0;
}

int do_verify(const Options &o, const vlaq_circuit *c,
              const vlaq_config &cfg) {
    double diff = 0.0;
    double tol = 0.0;
    int passed = 0;
    vlaq_report *raw = nullptr;
    check(vlaq_verify(c, &cfg, o.verify_cap, &diff, &tol, &passed, &raw));
    ReportPtr report(raw);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", diff);
    std::string tol_text(32, '\0');
    tol_text.resize(static_cast<std::size_t>(
        std::snprintf(tol_text.data(), tol_text.size(), "%.0e", tol)));
    std::cout << "verify " << o.bench << " n=" << vlaq_circuit_num_qubits(c)
              << " lanes=" << o.lanes << " max_f=" << o.max_fuse
              << " precision=" << o.precision << " max_abs_diff=" << buf
              << " tolerance=" << tol_text << ' '
              << (passed != 0 ? "PASS" : "FAIL") << '\n';
    if (o.json) {
        fs::create_directories(o.out);
        write_file(fs::path(o.out) / (run_stem(o, c) + "_verify.json"),
                   report_json(report.get(), !o.no_timing));
    }
    return passed != 0 ? 0 : 2;
}

int do_ablate(const Options &o, const vlaq_circuit *c,
              const vlaq_config &cfg) {
    vlaq_report *raw[VLAQ_ABLATION_ROWS] = {};
    double diffs[VLAQ_ABLATION_ROWS] = {};
    check(vlaq_ablate(c, &cfg, raw, diffs));
    std::vector<ReportPtr> rows;
    for (auto *r : raw) {
        rows.emplace_back(r);
    }
    std::ostringstream table;
    table << "config,wall_ms,gates,vector_ops,scalar_ops,flops,mem_bytes,"
             "buffer_bytes,avl,irr,ai,max_abs_diff\n";
    for (unsigned i = 0; i < VLAQ_ABLATION_ROWS; ++i) {
        vlaq_metrics m{};
        vlaq_counters k{};
        check(vlaq_report_metrics(rows[i].get(), &m));
        check(vlaq_report_counters(rows[i].get(), &k));
        char diff[32];
        std::snprintf(diff, sizeof diff, "%.3e", diffs[i]);
        table << vlaq_ablation_row_name(i) << ','
              << fmt(o.no_timing ? 0.0 : m.wall_ms, 3) << ','
              << m.gates_after << ',' << k.vector_ops << ',' << k.scalar_ops
              << ',' << k.flops << ',' << k.mem_bytes << ','
              << k.buffer_bytes << ',' << fmt(m.avl) << ',' << fmt(m.irr)
              << ',' << fmt(m.ai) << ',' << diff << '\n';
    }
    std::cout << table.str();
    if (o.csv) {
        fs::create_directories(o.out);
        write_file(fs::path(o.out) / (run_stem(o, c) + "_ablation.csv"),
                   table.str());
    }
    if (o.json) {
        fs::create_directories(o.out);
        for (unsigned i = 0; i < VLAQ_ABLATION_ROWS; ++i) {
            write_file(fs::path(o.out) / (run_stem(o, c) + "_ablate_" +
                                          vlaq_ablation_row_name(i) + ".json"),
                       report_json(rows[i].get(), !o.no_timing));
        }
    }
    const double tol = cfg.precision == VLAQ_DOUBLE ? 1e-12 : 1e-6;
    for (double d : diffs) {
        if (d > tol) {
            std::cerr << "ablation rows disagree beyond " << tol << '\n';
            return 2;
        }
    }
    return 0;
}

int do_sweep(const Options &o, const vlaq_circuit *c, vlaq_config cfg) {
    const auto colon = o.sweep_f.find(':');
    unsigned lo = 0;
    unsigned hi = 0;
    try {
        if (colon == std::string::npos) {
            throw std::invalid_argument("missing ':'");
        }
        lo = static_cast<unsigned>(std::stoul(o.sweep_f.substr(0, colon)));
        hi = static_cast<unsigned>(std::stoul(o.sweep_f.substr(colon + 1)));
    } catch (const std::exception &) {
        throw CliError{"--sweep-f expects A:B, got '" + o.sweep_f + "'"};
    }
    if (lo < 1 || hi < lo) {
        throw CliError{"--sweep-f needs 1 <= A <= B"};
    }
    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (unsigned f = lo; f <= hi; ++f) {
        cfg.max_fuse = f;
        const auto runs = run_reps(c, cfg, o.reps, nullptr);
        Options row_opts = o;
        row_opts.max_fuse = f;
        csv << csv_row(row_opts, cfg, c, runs, !o.no_timing) << '\n';
    }
    std::cout << csv.str();
    if (o.csv) {
        fs::create_directories(o.out);
        write_file(fs::path(o.out) / (run_stem(o, c) + "_sweep_f.csv"),
                   csv.str());
    }
    return 0;
}

int do_run(const Options &o, const vlaq_circuit *c, const vlaq_config &cfg) {
    StatePtr state;
    const auto runs =
        run_reps(c, cfg, o.reps, o.dump_state.empty() ? nullptr : &state);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        print_summary(std::cout,
                      run_stem(o, c) + " run=" + std::to_string(i + 1),
                      runs[i].get());
    }
    if (o.json || o.csv) {
        fs::create_directories(o.out);
    }
    if (o.json) {
        for (std::size_t i = 0; i < runs.size(); ++i) {
            write_file(fs::path(o.out) / (run_stem(o, c) + "_run" +
                                          std::to_string(i + 1) + ".json"),
                       report_json(runs[i].get(), !o.no_timing));
        }
    }
    if (o.csv) {
        write_file(fs::path(o.out) / (run_stem(o, c) + ".csv"),
                   std::string(kCsvHeader) + '\n' +
                       csv_row(o, cfg, c, runs, !o.no_timing) + '\n');
    }
    if (state) {
        check(vlaq_state_save(state.get(), o.dump_state.c_str()));
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"vlaq: state-vector simulator with an emulated vector unit"};
    app.set_version_flag("--version", std::string(vlaq_version()));
    Options o;

    app.add_option("--backend", o.backend, "Execution backend")
        ->check(CLI::IsMember({"ref", "vla"}))
        ->capture_default_str();
    app.add_option("-b,--bench", o.bench, "Benchmark circuit")
        ->check(CLI::IsMember(
            {"qft", "grover", "ghz", "qrc", "qv", "synthetic", "file"}))
        ->capture_default_str();
    app.add_option("-q,--qubits", o.qubits, "Number of qubits")
        ->capture_default_str();
    app.add_option("-t,--workers", o.workers, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("-f,--max-fuse", o.max_fuse,
                   "Largest fused gate width, 0 disables fusion")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    app.add_option("-r,--reps", o.reps, "Repetitions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--lanes", o.lanes, "Emulated vector lanes (power of two)")
        ->capture_default_str();
    app.add_option("--precision", o.precision, "single or double")
        ->check(CLI::IsMember({"single", "double"}))
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for qrc and qv")
        ->capture_default_str();
    app.add_option("--depth", o.depth, "QRC depth")->capture_default_str();
    app.add_option("--marked", o.marked, "Grover marked element")
        ->capture_default_str();
    app.add_option("--iterations", o.iterations,
                   "Grover iterations (default: round(pi/4 sqrt(2^(n-1))))");
    app.add_option("--synthetic-reps", o.synthetic_reps,
                   "Rounds of the synthetic circuit")
        ->capture_default_str();
    app.add_flag("--verify", o.verify, "Compare against the ref backend");
    app.add_option("--verify-cap", o.verify_cap, "Largest n for --verify")
        ->capture_default_str();
    app.add_option("--sweep-f", o.sweep_f, "Sweep max fused width A:B");
    app.add_flag("--ablate", o.ablate, "Run the ablation set");
    app.add_option("--dump-state", o.dump_state,
                   "Write the final state of the last repetition");
    app.add_option("--circuit-file", o.circuit_file, "Circuit text file");
    app.add_option("--out", o.out, "Output directory")->capture_default_str();
    app.add_flag("--json", o.json, "Write JSON reports");
    app.add_flag("--csv", o.csv, "Write CSV summaries");
    app.add_flag("--no-timing", o.no_timing,
                 "Zero timing fields so outputs are byte-stable");
    app.add_flag("--no-buffering", o.no_buffering,
                 "Use the temp-result kernel variant");
    app.add_flag("--qrc-no-entangle", o.qrc_no_entangle,
                 "Drop the CZ layers from qrc");
    app.add_flag("--plan-dump", o.plan_dump, "Print the fusion plan");
    app.add_flag("--table2", o.table2,
                 "Compare low/high gate-op counts with the published formulas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (!o.circuit_file.empty()) {
        o.bench = "file";
    }

    try {
        const vlaq_config cfg = make_config(o);
        vlaq_circuit *raw = nullptr;
        check(vlaq_circuit_build(&cfg, &raw));
        CircuitPtr circuit(raw);

        if (o.table2) {
            return do_table2(o, circuit.get());
        }
        if (o.plan_dump) {
            vlaq_plan *p = nullptr;
            check(vlaq_plan_build(circuit.get(), o.max_fuse, &p));
            PlanPtr plan(p);
            std::cout << read_text([&](char *buf, std::size_t cap,
                                       std::size_t *needed) {
                return vlaq_plan_dump(plan.get(), buf, cap, needed);
            });
        }
        if (o.verify) {
            return do_verify(o, circuit.get(), cfg);
        }
        if (o.ablate) {
            return do_ablate(o, circuit.get(), cfg);
        }
        if (!o.sweep_f.empty()) {
            return do_sweep(o, circuit.get(), cfg);
        }
        return do_run(o, circuit.get(), cfg);
    } catch (const CliError &e) {
        std::cerr << "vlaq: " << e.message << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "vlaq: " << e.what() << '\n';
        return 1;
    }
}
