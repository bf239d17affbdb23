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
 * Deterministic benchmark circuit generators and the low/high gate-op
 * counter.
 *
 * Random circuits draw from Lcg64, a 64-bit linear congruential generator
 * x' = 6364136223846793005 * x + 1442695040888963407 (mod 2^64), seeded
 * with x0 = seed. Uniform doubles are (x' >> 11) * 2^-53, so any language
 * reproduces the same circuits bit for bit.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "vlaq/gates.hpp"

namespace vlaq {

class Lcg64 {
  public:
    using engine_type =
        std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                        1442695040888963407ULL, 0ULL>;

    explicit Lcg64(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(uniform() *
                                          static_cast<double>(bound));
    }

  private:
    engine_type engine_;
};

/// H on each qubit from high to low with controlled phases from the lower
/// qubits, then swaps of mirrored pairs: n(n+1)/2 + floor(n/2) gates.
[[nodiscard]] Circuit build_qft(unsigned n);

/// n total qubits: an (n-1)-qubit search register on positions 0..n-2 and
/// an oracle qubit on n-1 prepared in |->.
[[nodiscard]] unsigned grover_default_iterations(unsigned n);
[[nodiscard]] Circuit build_grover(unsigned n, std::uint64_t marked,
                                   std::optional<unsigned> iterations =
                                       std::nullopt);
/// Probability of measuring `marked` on the search register.
template <typename State>
[[nodiscard]] double grover_success_probability(const State &sv,
                                                std::uint64_t marked) {
    const unsigned search = sv.num_qubits() - 1;
    const auto a0 = sv.amplitude_at(marked);
    const auto a1 = sv.amplitude_at(marked | (std::uint64_t{1} << search));
    return static_cast<double>(std::norm(a0)) +
           static_cast<double>(std::norm(a1));
}

[[nodiscard]] Circuit build_ghz(unsigned n);

/// depth layers of per-qubit random rx/ry/rz (angles uniform in [0, 2pi)),
/// each followed by a CZ brick on pairs (2i, 2i+1) for even layers and
/// (2i+1, 2i+2) for odd layers unless entangle is false.
[[nodiscard]] Circuit build_qrc(unsigned n, unsigned depth, std::uint64_t seed,
                                bool entangle = true);

/// n layers; each pairs qubits through a random permutation and applies
/// u3, u3, CNOT, u3, u3 with random angles to every pair.
[[nodiscard]] Circuit build_qv(unsigned n, std::uint64_t seed);

/// Lowest qubit position the synthetic benchmark touches (2^4 = 16 lanes).
inline constexpr unsigned kSyntheticLowestQubit = 4;

/// reps rounds of uncontrolled 1-qubit gates cycling h, rx, ry, rz on every
/// position >= kSyntheticLowestQubit.
[[nodiscard]] Circuit build_synthetic(unsigned n, unsigned reps);

struct GateOpCounts {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    friend bool operator==(const GateOpCounts &, const GateOpCounts &) = default;
};

/// Each gate counts once: low when its lowest target qubit, numbered from 1,
/// is <= threshold, otherwise high.
[[nodiscard]] GateOpCounts count_gate_ops(const Circuit &c,
                                          unsigned threshold);

/// Published per-benchmark op-count formulas for a num_vals threshold,
/// used for the comparison table. QV values are upper bounds.
[[nodiscard]] std::optional<GateOpCounts>
published_gate_ops(const std::string &bench, unsigned n, unsigned num_vals,
                   unsigned depth);

} // namespace vlaq
