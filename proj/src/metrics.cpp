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
#include "vlaq/metrics.hpp"

#include <json.hpp>

#include "vlaq/error.hpp"

namespace vlaq {

using nlohmann::json;

VectorCounters merge(std::span<const VectorCounters> parts) {
    VectorCounters total;
    for (const auto &p : parts) {
        total += p;
    }
    return total;
}

VectorCounters merge(std::initializer_list<VectorCounters> parts) {
    return merge(std::span<const VectorCounters>(parts.begin(), parts.size()));
}

double avl(const VectorCounters &c) {
    if (c.vector_ops == 0) {
        return 0.0;
    }
    return static_cast<double>(c.active_lane_sum) /
           static_cast<double>(c.vector_ops);
}

double irr(const VectorCounters &c, std::uint64_t ref_op_count) {
    const std::uint64_t issued = c.vector_ops + c.scalar_ops;
    if (issued == 0) {
        return 1.0;
    }
    return static_cast<double>(ref_op_count) / static_cast<double>(issued);
}

double ai_measured(const VectorCounters &c) {
    if (c.mem_bytes == 0) {
        return 0.0;
    }
    return static_cast<double>(c.flops) / static_cast<double>(c.mem_bytes);
}

std::vector<ReferenceAnnotation> reference_annotations(unsigned lanes) {
    // Published hardware counter figures (Grace: 128-bit SVE, A64FX: 512-bit
    // SVE, both FP32). Never asserted against the emulator.
    if (lanes == 4) {
        return {{"grace-sve128-fp32", 3.40, 3.75, 1.3, 1.5}};
    }
    if (lanes == 16) {
        return {{"a64fx-sve512-fp32", 11.6, 12.6, 3.5, 4.7}};
    }
    return {};
}

namespace {

json counters_json(const VectorCounters &c) {
    return {{"vector_ops", c.vector_ops},
            {"scalar_ops", c.scalar_ops},
            {"active_lane_sum", c.active_lane_sum},
            {"full_mask_ops", c.full_mask_ops},
            {"partial_mask_ops", c.partial_mask_ops},
            {"flops", c.flops},
            {"mem_bytes", c.mem_bytes},
            {"buffer_bytes", c.buffer_bytes}};
}

VectorCounters counters_from(const json &j) {
    VectorCounters c;
    c.vector_ops = j.at("vector_ops").get<std::uint64_t>();
    c.scalar_ops = j.at("scalar_ops").get<std::uint64_t>();
    c.active_lane_sum = j.at("active_lane_sum").get<std::uint64_t>();
    c.full_mask_ops = j.at("full_mask_ops").get<std::uint64_t>();
    c.partial_mask_ops = j.at("partial_mask_ops").get<std::uint64_t>();
    c.flops = j.at("flops").get<std::uint64_t>();
    c.mem_bytes = j.at("mem_bytes").get<std::uint64_t>();
    c.buffer_bytes = j.at("buffer_bytes").get<std::uint64_t>();
    return c;
}

} // namespace

std::string report_to_json(const RunReport &r, bool include_timing,
                           int indent) {
    json hist = json::object();
    for (const auto &[f, count] : r.fusion.histogram) {
        hist[std::to_string(f)] = count;
    }
    json refs = json::array();
    for (const auto &a : r.paper_reference) {
        refs.push_back({{"source", a.source},
                        {"avl_low", a.avl_low},
                        {"avl_high", a.avl_high},
                        {"irr_low", a.irr_low},
                        {"irr_high", a.irr_high}});
    }
    json j = {
        {"backend", r.backend},
        {"precision", r.precision},
        {"lanes", r.lanes},
        {"workers", r.workers},
        {"buffered", r.buffered},
        {"wall_ms", include_timing ? r.wall_ms : 0.0},
        {"gate_ms", include_timing ? r.gate_ms : std::vector<double>{}},
        {"avl", r.avl},
        {"irr", r.irr},
        {"ai", r.ai},
        {"ai_model", r.ai_model},
        {"expectation", r.expectation},
        {"norm_sq", r.norm_sq},
        {"ref_op_count", r.ref_op_count},
        {"vector_ops", r.counters.vector_ops},
        {"scalar_ops", r.counters.scalar_ops},
        {"counters", counters_json(r.counters)},
        {"fusion",
         {{"before", r.fusion.before},
          {"after", r.fusion.after},
          {"max_f", r.fusion.max_f},
          {"histogram", hist}}},
        {"circuit",
         {{"name", r.circuit.name},
          {"n", r.circuit.n},
          {"seed", r.circuit.seed ? json(*r.circuit.seed) : json(nullptr)}}},
        {"paper_reference", refs},
    };
    return j.dump(indent);
}

RunReport report_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorCode::Parse, std::string("report JSON: ") + e.what());
    }
    try {
        RunReport r;
        r.backend = j.at("backend").get<std::string>();
        r.precision = j.at("precision").get<std::string>();
        r.lanes = j.at("lanes").get<unsigned>();
        r.workers = j.at("workers").get<unsigned>();
        r.buffered = j.at("buffered").get<bool>();
        r.wall_ms = j.at("wall_ms").get<double>();
        r.gate_ms = j.at("gate_ms").get<std::vector<double>>();
        r.avl = j.at("avl").get<double>();
        r.irr = j.at("irr").get<double>();
        r.ai = j.at("ai").get<double>();
        r.ai_model = j.at("ai_model").get<double>();
        r.expectation = j.at("expectation").get<double>();
        r.norm_sq = j.at("norm_sq").get<double>();
        r.ref_op_count = j.at("ref_op_count").get<std::uint64_t>();
        r.counters = counters_from(j.at("counters"));
        require(r.counters.vector_ops ==
                        j.at("vector_ops").get<std::uint64_t>() &&
                    r.counters.scalar_ops ==
                        j.at("scalar_ops").get<std::uint64_t>(),
                ErrorCode::Parse, "report op totals disagree with counters");
        const auto &fusion = j.at("fusion");
        r.fusion.before = fusion.at("before").get<std::size_t>();
        r.fusion.after = fusion.at("after").get<std::size_t>();
        r.fusion.max_f = fusion.at("max_f").get<unsigned>();
        for (const auto &[key, value] : fusion.at("histogram").items()) {
            r.fusion.histogram[static_cast<unsigned>(std::stoul(key))] =
                value.get<std::size_t>();
        }
        const auto &circuit = j.at("circuit");
        r.circuit.name = circuit.at("name").get<std::string>();
        r.circuit.n = circuit.at("n").get<unsigned>();
        if (!circuit.at("seed").is_null()) {
            r.circuit.seed = circuit.at("seed").get<std::uint64_t>();
        }
        for (const auto &a : j.at("paper_reference")) {
            r.paper_reference.push_back(
                {a.at("source").get<std::string>(),
                 a.at("avl_low").get<double>(), a.at("avl_high").get<double>(),
                 a.at("irr_low").get<double>(),
                 a.at("irr_high").get<double>()});
        }
        return r;
    } catch (const json::exception &e) {
        fail(ErrorCode::Parse, std::string("report JSON: ") + e.what());
    }
}

} // namespace vlaq
