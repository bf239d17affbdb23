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
 * Amplitude storage for the simulator.
 *
 * A state of n qubits holds 2^n complex amplitudes as a flat sequence of
 * 2^(n+1) real components. Two storage layouts are supported:
 *
 *  - Interleaved: [re0, im0, re1, im1, ...]
 *  - Blocked(L):  per block b, the L real parts of amplitudes [bL, bL+L)
 *                 followed by their L imaginary parts.
 *
 * The blocked layout lets an emulated vector unit of L lanes load L real
 * parts (or L imaginary parts) from consecutive addresses.
 */
#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "vlaq/error.hpp"

namespace vlaq {

enum class Precision { Single, Double };

[[nodiscard]] constexpr unsigned element_bits(Precision p) noexcept {
    return p == Precision::Single ? 32U : 64U;
}

[[nodiscard]] constexpr unsigned element_bytes(Precision p) noexcept {
    return element_bits(p) / 8U;
}

[[nodiscard]] std::string to_string(Precision p);
[[nodiscard]] Precision parse_precision(const std::string &text);

template <typename T> struct PrecisionOf;
template <> struct PrecisionOf<float> {
    static constexpr Precision value = Precision::Single;
};
template <> struct PrecisionOf<double> {
    static constexpr Precision value = Precision::Double;
};

/// Lane count of the emulated vector unit: num_vals = VLEN / ELEN.
class LaneConfig {
  public:
    static constexpr unsigned kMinVlenBits = 64;
    static constexpr unsigned kMaxVlenBits = 2048;

    static LaneConfig from_vlen(unsigned vlen_bits, Precision precision);
    static LaneConfig from_lanes(unsigned num_vals, Precision precision);

    [[nodiscard]] unsigned vlen_bits() const noexcept { return vlen_bits_; }
    [[nodiscard]] unsigned elen_bits() const noexcept {
        return element_bits(precision_);
    }
    [[nodiscard]] unsigned num_vals() const noexcept {
        return vlen_bits_ / elen_bits();
    }
    /// log2(num_vals): qubit positions below this are lane bits.
    [[nodiscard]] unsigned lane_bits() const noexcept {
        return static_cast<unsigned>(std::countr_zero(num_vals()));
    }
    [[nodiscard]] Precision precision() const noexcept { return precision_; }

    friend bool operator==(const LaneConfig &, const LaneConfig &) = default;

  private:
    LaneConfig(unsigned vlen_bits, Precision precision)
        : vlen_bits_(vlen_bits), precision_(precision) {}

    unsigned vlen_bits_;
    Precision precision_;
};

enum class LayoutKind : std::uint8_t { Interleaved = 0, Blocked = 1 };

struct Layout {
    LayoutKind kind = LayoutKind::Interleaved;
    std::size_t lanes = 0; // only meaningful for Blocked

    static constexpr Layout interleaved() noexcept { return {}; }
    static constexpr Layout blocked(std::size_t lanes) noexcept {
        return {LayoutKind::Blocked, lanes};
    }
    [[nodiscard]] bool is_blocked() const noexcept {
        return kind == LayoutKind::Blocked;
    }

    friend bool operator==(const Layout &, const Layout &) = default;
};

[[nodiscard]] std::string to_string(const Layout &layout);

inline constexpr unsigned kMaxQubits = 40;
inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 34;

/// Budget in bytes for amplitude storage. Reads VLAQ_MEM_BUDGET_BYTES when
/// set, otherwise kDefaultMemoryBudget.
[[nodiscard]] std::uint64_t default_memory_budget();

template <typename T> class StateVector {
    static_assert(std::is_same_v<T, float> || std::is_same_v<T, double>);

  public:
    using value_type = T;
    using complex_type = std::complex<T>;

    /// |0...0> in the requested layout.
    static StateVector zero(unsigned num_qubits,
                            Layout layout = Layout::interleaved(),
                            std::uint64_t memory_budget = default_memory_budget());

    /// Build from interleaved amplitudes; mainly for tests and state loading.
    static StateVector from_amplitudes(std::span<const complex_type> amps,
                                       Layout layout = Layout::interleaved());

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_amplitudes() const noexcept {
        return std::size_t{1} << num_qubits_;
    }
    [[nodiscard]] Precision precision() const noexcept {
        return PrecisionOf<T>::value;
    }
    [[nodiscard]] const Layout &layout() const noexcept { return layout_; }

    [[nodiscard]] std::span<T> data() noexcept { return data_; }
    [[nodiscard]] std::span<const T> data() const noexcept { return data_; }

    /// Storage offset of the real part of amplitude i (imag follows at
    /// +1 interleaved, +L blocked).
    [[nodiscard]] std::size_t re_offset(std::size_t i) const noexcept {
        if (!layout_.is_blocked()) {
            return 2 * i;
        }
        const std::size_t lanes = layout_.lanes;
        return 2 * (i - i % lanes) + i % lanes;
    }
    [[nodiscard]] std::size_t im_offset(std::size_t i) const noexcept {
        return layout_.is_blocked() ? re_offset(i) + layout_.lanes
                                    : 2 * i + 1;
    }

    [[nodiscard]] complex_type amplitude_at(std::size_t i) const;
    void set_amplitude(std::size_t i, complex_type value);

    /// In-place relayout with O(lanes) scratch.
    void to_blocked(std::size_t lanes);
    void to_interleaved();

  private:
    StateVector(unsigned n, Layout layout, std::vector<T> data)
        : num_qubits_(n), layout_(layout), data_(std::move(data)) {}

    unsigned num_qubits_;
    Layout layout_;
    std::vector<T> data_;
};

template <typename T> [[nodiscard]] double norm_sq(const StateVector<T> &sv);

/// max_i |a_i - b_i|; layouts may differ, qubit counts must match.
template <typename A, typename B>
[[nodiscard]] double max_abs_diff(const StateVector<A> &a,
                                  const StateVector<B> &b);

using AnyState = std::variant<StateVector<float>, StateVector<double>>;

[[nodiscard]] AnyState make_zero_state(unsigned num_qubits, Precision precision,
                                       Layout layout = Layout::interleaved(),
                                       std::uint64_t memory_budget =
                                           default_memory_budget());
[[nodiscard]] double max_abs_diff(const AnyState &a, const AnyState &b);
[[nodiscard]] double norm_sq(const AnyState &sv);
[[nodiscard]] unsigned num_qubits(const AnyState &sv);

/// Binary dump: 16-byte header (magic "VLAQSTAT", u8 version, u8 precision,
/// u8 layout, u8 reserved, u32 n_qubits LE) then the little-endian real
/// components in storage order. Blocked states are written interleaved
/// because the header has no field for the lane count.
inline constexpr std::uint8_t kStateDumpVersion = 1;
inline constexpr std::size_t kStateDumpHeaderBytes = 16;

void write_state(const std::filesystem::path &path, const AnyState &sv);
[[nodiscard]] std::vector<std::uint8_t> encode_state(const AnyState &sv);
[[nodiscard]] AnyState decode_state(std::span<const std::uint8_t> bytes);
[[nodiscard]] AnyState read_state(const std::filesystem::path &path);

} // namespace vlaq
