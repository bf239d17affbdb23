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
#include "vlaq/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "vlaq/error.hpp"

namespace vlaq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_width(unsigned n, unsigned minimum, const char *bench) {
    require(n >= minimum, ErrorCode::InvalidArgument,
            std::string(bench) + " needs at least " + std::to_string(minimum) +
                " qubit(s), got " + std::to_string(n));
}

} // namespace

Circuit build_qft(unsigned n) {
    require_width(n, 1, "qft");
    Circuit c(n, "qft");
    for (unsigned j = n; j-- > 0;) {
        c.add(gates::hadamard(j));
        for (unsigned m = j; m-- > 0;) {
            c.add(gates::cphase(m, j, std::numbers::pi /
                                          std::ldexp(1.0, static_cast<int>(j - m))));
        }
    }
    for (unsigned i = 0; i < n / 2; ++i) {
        c.add(gates::swap(i, n - 1 - i));
    }
    return c;
}

unsigned grover_default_iterations(unsigned n) {
    require_width(n, 2, "grover");
    const double space = std::ldexp(1.0, static_cast<int>(n - 1));
    const auto iters = static_cast<unsigned>(
        std::lround(std::numbers::pi / 4.0 * std::sqrt(space)));
    return std::max(1U, iters);
}

Circuit build_grover(unsigned n, std::uint64_t marked,
                     std::optional<unsigned> iterations) {
    require_width(n, 2, "grover");
    const unsigned search = n - 1;
    const unsigned oracle = n - 1;
    require(marked < (std::uint64_t{1} << search), ErrorCode::InvalidArgument,
            "marked element " + std::to_string(marked) +
                " outside the " + std::to_string(search) +
                "-qubit search space");
    const unsigned rounds = iterations.value_or(grover_default_iterations(n));

    std::vector<unsigned> register_qubits(search);
    std::iota(register_qubits.begin(), register_qubits.end(), 0U);

    Circuit c(n, "grover");
    for (const unsigned q : register_qubits) {
        c.add(gates::hadamard(q));
    }
    c.add(gates::pauli_x(oracle));
    c.add(gates::hadamard(oracle));

    for (unsigned it = 0; it < rounds; ++it) {
        // Phase oracle: flip the sign of |marked> via kickback on |->.
        for (const unsigned q : register_qubits) {
            if (((marked >> q) & 1U) == 0) {
                c.add(gates::pauli_x(q));
            }
        }
        c.add(gates::mcx(register_qubits, oracle));
        for (const unsigned q : register_qubits) {
            if (((marked >> q) & 1U) == 0) {
                c.add(gates::pauli_x(q));
            }
        }
        // Diffusion: H X (phase flip of |1..1>) X H on the search register.
        for (const unsigned q : register_qubits) {
            c.add(gates::hadamard(q));
        }
        for (const unsigned q : register_qubits) {
            c.add(gates::pauli_x(q));
        }
        c.add(gates::mcx(register_qubits, oracle));
        for (const unsigned q : register_qubits) {
            c.add(gates::pauli_x(q));
        }
        for (const unsigned q : register_qubits) {
            c.add(gates::hadamard(q));
        }
    }
    return c;
}

Circuit build_ghz(unsigned n) {
    require_width(n, 1, "ghz");
    Circuit c(n, "ghz");
    c.add(gates::hadamard(0));
    for (unsigned j = 1; j < n; ++j) {
        c.add(gates::cnot(j - 1, j));
    }
    return c;
}

Circuit build_qrc(unsigned n, unsigned depth, std::uint64_t seed,
                  bool entangle) {
    require_width(n, 1, "qrc");
    Circuit c(n, "qrc", seed);
    Lcg64 rng(seed);
    for (unsigned layer = 0; layer < depth; ++layer) {
        for (unsigned q = 0; q < n; ++q) {
            const auto kind = rng.below(3);
            const double angle = rng.uniform() * kTwoPi;
            switch (kind) {
            case 0:
                c.add(gates::rx(q, angle));
                break;
            case 1:
                c.add(gates::ry(q, angle));
                break;
            default:
                c.add(gates::rz(q, angle));
                break;
            }
        }
        if (entangle) {
            for (unsigned a = layer % 2; a + 1 < n; a += 2) {
                c.add(gates::cz(a, a + 1));
            }
        }
    }
    return c;
}

Circuit build_qv(unsigned n, std::uint64_t seed) {
    require_width(n, 2, "qv");
    Circuit c(n, "qv", seed);
    Lcg64 rng(seed);
    auto random_u3 = [&](unsigned q) {
        const double theta = rng.uniform() * std::numbers::pi;
        const double phi = rng.uniform() * kTwoPi;
        const double lambda = rng.uniform() * kTwoPi;
        return gates::u3(q, theta, phi, lambda);
    };
    std::vector<unsigned> perm(n);
    for (unsigned layer = 0; layer < n; ++layer) {
        std::iota(perm.begin(), perm.end(), 0U);
        for (unsigned i = n - 1; i > 0; --i) {
            std::swap(perm[i], perm[rng.below(i + 1)]);
        }
        for (unsigned k = 0; k + 1 < n; k += 2) {
            const unsigned a = perm[k];
            const unsigned b = perm[k + 1];
            c.add(random_u3(a));
            c.add(random_u3(b));
            c.add(gates::cnot(a, b));
            c.add(random_u3(a));
            c.add(random_u3(b));
        }
    }
    return c;
}

Circuit build_synthetic(unsigned n, unsigned reps) {
    require_width(n, 1, "synthetic");
    Circuit c(n, "synthetic");
    for (unsigned r = 0; r < reps; ++r) {
        for (unsigned p = kSyntheticLowestQubit; p < n; ++p) {
            switch ((r + p) % 4) {
            case 0:
                c.add(gates::hadamard(p));
                break;
            case 1:
                c.add(gates::rx(p, 0.3));
                break;
            case 2:
                c.add(gates::ry(p, 0.7));
                break;
            default:
                c.add(gates::rz(p, 1.1));
                break;
            }
        }
    }
    return c;
}

GateOpCounts count_gate_ops(const Circuit &c, unsigned threshold) {
    GateOpCounts counts;
    for (const auto &g : c.gates()) {
        const unsigned lowest =
            *std::min_element(g.targets.begin(), g.targets.end());
        if (lowest + 1 <= threshold) {
            ++counts.low;
        } else {
            ++counts.high;
        }
    }
    return counts;
}

std::optional<GateOpCounts> published_gate_ops(const std::string &bench,
                                               unsigned n, unsigned num_vals,
                                               unsigned depth) {
    if (n < num_vals) {
        return std::nullopt;
    }
    const std::uint64_t N = n;
    const std::uint64_t v = num_vals;
    const std::uint64_t rest = N - v;
    if (bench == "qft") {
        return GateOpCounts{v * (v + 3) / 2, rest * (rest + 3) / 2};
    }
    if (bench == "grover") {
        return GateOpCounts{5 * v, 5 * rest + 4};
    }
    if (bench == "ghz") {
        return GateOpCounts{v, rest};
    }
    if (bench == "qrc") {
        return GateOpCounts{depth * v * (v + 11) / 4,
                            depth * N * (rest + 11) / 4};
    }
    if (bench == "qv") {
        return GateOpCounts{3 * v * (v - 1) / 4, 3 * N * (N - 1) / 4};
    }
    return std::nullopt;
}

} // namespace vlaq
