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
#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <functional>
#include <sstream>

#include "vlaq/error.hpp"
#include "vlaq/gates.hpp"

namespace vlaq {

namespace {

struct ParsedLine {
    std::string name;
    std::vector<unsigned> qubits;
    std::vector<unsigned> controls;
    std::vector<double> params;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string &msg) {
    fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

std::vector<unsigned> parse_qubits(const std::string &text,
                                   std::size_t line_no) {
    std::istringstream ss(text);
    std::vector<unsigned> out;
    std::string tok;
    while (ss >> tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
            parse_error(line_no, "bad qubit index '" + tok + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    return out;
}

std::vector<double> parse_params(const std::string &text,
                                 std::size_t line_no) {
    std::istringstream ss(text);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size()) {
            parse_error(line_no, "bad parameter '" + tok + "'");
        }
        out.push_back(v);
    }
    return out;
}

ParsedLine split_line(const std::string &line, std::size_t line_no) {
    std::string body = line;
    std::string params_text;
    std::string controls_text;
    if (const auto at = body.find('@'); at != std::string::npos) {
        params_text = body.substr(at + 1);
        body.resize(at);
    }
    if (const auto bar = body.find('|'); bar != std::string::npos) {
        controls_text = body.substr(bar + 1);
        body.resize(bar);
    }
    std::istringstream ss(body);
    ParsedLine p;
    ss >> p.name;
    p.name = lower(p.name);
    std::string rest((std::istreambuf_iterator<char>(ss)),
                     std::istreambuf_iterator<char>());
    p.qubits = parse_qubits(rest, line_no);
    p.controls = parse_qubits(controls_text, line_no);
    p.params = parse_params(params_text, line_no);
    return p;
}

void expect_counts(const ParsedLine &p, std::size_t line_no,
                   std::size_t qubits, std::size_t params) {
    if (p.qubits.size() != qubits) {
        parse_error(line_no, "'" + p.name + "' expects " +
                                 std::to_string(qubits) + " qubit(s)");
    }
    if (p.params.size() != params) {
        parse_error(line_no, "'" + p.name + "' expects " +
                                 std::to_string(params) + " parameter(s)");
    }
}

Gate build_gate(const ParsedLine &p, std::size_t line_no) {
    using Fixed = std::function<Gate(unsigned)>;
    using Rot = std::function<Gate(unsigned, double)>;
    static const std::map<std::string, Fixed> fixed = {
        {"h", gates::hadamard}, {"id", gates::identity}, {"i", gates::identity},
        {"x", gates::pauli_x},  {"y", gates::pauli_y},   {"z", gates::pauli_z},
        {"s", gates::s},        {"sdg", gates::sdg},     {"t", gates::t},
        {"tdg", gates::tdg},
    };
    static const std::map<std::string, Rot> rotations = {
        {"p", gates::phase}, {"phase", gates::phase}, {"rx", gates::rx},
        {"ry", gates::ry},   {"rz", gates::rz},
    };

    Gate g;
    if (auto it = fixed.find(p.name); it != fixed.end()) {
        expect_counts(p, line_no, 1, 0);
        g = it->second(p.qubits[0]);
    } else if (auto rit = rotations.find(p.name); rit != rotations.end()) {
        expect_counts(p, line_no, 1, 1);
        g = rit->second(p.qubits[0], p.params[0]);
    } else if (p.name == "u3") {
        expect_counts(p, line_no, 1, 3);
        g = gates::u3(p.qubits[0], p.params[0], p.params[1], p.params[2]);
    } else if (p.name == "swap") {
        expect_counts(p, line_no, 2, 0);
        g = gates::swap(p.qubits[0], p.qubits[1]);
    } else if (p.name == "cx" || p.name == "cnot") {
        expect_counts(p, line_no, 2, 0);
        g = gates::cnot(p.qubits[0], p.qubits[1]);
    } else if (p.name == "cz") {
        expect_counts(p, line_no, 2, 0);
        g = gates::cz(p.qubits[0], p.qubits[1]);
    } else if (p.name == "cp") {
        expect_counts(p, line_no, 2, 1);
        g = gates::cphase(p.qubits[0], p.qubits[1], p.params[0]);
    } else if (p.name == "ccx" || p.name == "toffoli") {
        expect_counts(p, line_no, 3, 0);
        g = gates::toffoli(p.qubits[0], p.qubits[1], p.qubits[2]);
    } else if (p.name == "mcx") {
        if (p.qubits.size() < 2 || !p.params.empty()) {
            parse_error(line_no, "'mcx' expects controls then a target");
        }
        g = gates::mcx({p.qubits.begin(), p.qubits.end() - 1},
                       p.qubits.back());
    } else {
        parse_error(line_no, "unknown gate '" + p.name + "'");
    }
    if (!p.controls.empty()) {
        g = gates::controlled(std::move(g), p.controls);
    }
    return g;
}

} // namespace

Circuit parse_circuit(std::istream &in, std::optional<unsigned> num_qubits,
                      std::string name) {
    std::vector<Gate> parsed;
    std::optional<unsigned> declared;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        if (std::all_of(line.begin(), line.end(), ::isspace)) {
            continue;
        }
        const auto p = split_line(line, line_no);
        if (p.name == "qubits") {
            if (p.qubits.size() != 1 || p.qubits[0] == 0) {
                parse_error(line_no, "'qubits' expects one positive count");
            }
            declared = p.qubits[0];
            continue;
        }
        try {
            parsed.push_back(build_gate(p, line_no));
        } catch (const Error &e) {
            if (e.code() == ErrorCode::Parse) {
                throw;
            }
            parse_error(line_no, e.what());
        }
    }

    unsigned width = 1;
    for (const auto &g : parsed) {
        width = std::max(width, g.max_qubit() + 1);
    }
    if (declared) {
        require(!num_qubits || *num_qubits == *declared, ErrorCode::Parse,
                "file declares " + std::to_string(*declared) +
                    " qubits but " + std::to_string(*num_qubits) +
                    " were requested");
        width = *declared;
    } else if (num_qubits) {
        width = *num_qubits;
    }
    Circuit c(width, std::move(name));
    for (auto &g : parsed) {
        c.add(std::move(g));
    }
    return c;
}

Circuit load_circuit(const std::string &path,
                     std::optional<unsigned> num_qubits) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + path);
    return parse_circuit(in, num_qubits,
                         std::filesystem::path(path).stem().string());
}

std::string format_circuit(const Circuit &c) {
    static const std::vector<std::string> known = {
        "h", "id", "x", "y", "z", "s", "sdg", "t", "tdg",
        "p", "rx", "ry", "rz", "u3", "swap"};
    std::ostringstream out;
    out << std::setprecision(17);
    out << "qubits " << c.num_qubits() << '\n';
    for (const auto &g : c.gates()) {
        require(std::find(known.begin(), known.end(), g.label) != known.end(),
                ErrorCode::InvalidArgument,
                "gate '" + g.label + "' has no text form");
        out << g.label;
        for (const unsigned q : g.targets) {
            out << ' ' << q;
        }
        if (!g.controls.empty()) {
            out << " |";
            for (const unsigned q : g.controls) {
                out << ' ' << q;
            }
        }
        if (!g.params.empty()) {
            out << " @";
            for (const double v : g.params) {
                out << ' ' << v;
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace vlaq
