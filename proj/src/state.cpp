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
#include "vlaq/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>

namespace vlaq {

std::string to_string(Precision p) {
    return p == Precision::Single ? "single" : "double";
}

Precision parse_precision(const std::string &text) {
    if (text == "single" || text == "float" || text == "fp32") {
        return Precision::Single;
    }
    if (text == "double" || text == "fp64") {
        return Precision::Double;
    }
    fail(ErrorCode::InvalidArgument, "unknown precision '" + text + "'");
}

LaneConfig LaneConfig::from_vlen(unsigned vlen_bits, Precision precision) {
    require(std::has_single_bit(vlen_bits) && vlen_bits >= kMinVlenBits &&
                vlen_bits <= kMaxVlenBits,
            ErrorCode::InvalidArgument,
            "VLEN must be a power of two in [64, 2048] bits, got " +
                std::to_string(vlen_bits));
    require(vlen_bits / element_bits(precision) >= 2,
            ErrorCode::InvalidArgument,
            "VLEN " + std::to_string(vlen_bits) +
                " holds fewer than two elements");
    return {vlen_bits, precision};
}

LaneConfig LaneConfig::from_lanes(unsigned num_vals, Precision precision) {
    require(std::has_single_bit(num_vals) && num_vals >= 2,
            ErrorCode::InvalidArgument,
            "lane count must be a power of two >= 2, got " +
                std::to_string(num_vals));
    return from_vlen(num_vals * element_bits(precision), precision);
}

std::string to_string(const Layout &layout) {
    if (!layout.is_blocked()) {
        return "interleaved";
    }
    return "blocked(" + std::to_string(layout.lanes) + ")";
}

std::uint64_t default_memory_budget() {
    if (const char *env = std::getenv("VLAQ_MEM_BUDGET_BYTES")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultMemoryBudget;
}

namespace {

void check_layout(unsigned n, const Layout &layout) {
    if (!layout.is_blocked()) {
        return;
    }
    const std::size_t lanes = layout.lanes;
    require(lanes >= 1 && std::has_single_bit(lanes), ErrorCode::Layout,
            "blocked lane count must be a power of two, got " +
                std::to_string(lanes));
    require(lanes <= (std::size_t{1} << n), ErrorCode::Layout,
            "blocked lane count " + std::to_string(lanes) +
                " exceeds 2^" + std::to_string(n) + " amplitudes");
}

} // namespace

template <typename T>
StateVector<T> StateVector<T>::zero(unsigned num_qubits, Layout layout,
                                    std::uint64_t memory_budget) {
    require(num_qubits >= 1 && num_qubits <= kMaxQubits, ErrorCode::Capacity,
            "qubit count must be in [1, 40], got " +
                std::to_string(num_qubits));
    const std::uint64_t bytes =
        (std::uint64_t{2} << num_qubits) * sizeof(T);
    require(bytes <= memory_budget, ErrorCode::Capacity,
            std::to_string(num_qubits) + " qubits need " +
                std::to_string(bytes) + " bytes, budget is " +
                std::to_string(memory_budget));
    check_layout(num_qubits, layout);
    std::vector<T> data(std::size_t{2} << num_qubits, T{0});
    data[0] = T{1};
    return StateVector(num_qubits, layout, std::move(data));
}

template <typename T>
StateVector<T>
StateVector<T>::from_amplitudes(std::span<const complex_type> amps,
                                Layout layout) {
    require(amps.size() >= 2 && std::has_single_bit(amps.size()),
            ErrorCode::InvalidArgument,
            "amplitude count must be a power of two >= 2");
    const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
    check_layout(n, layout);
    StateVector sv(n, Layout::interleaved(),
                   std::vector<T>(2 * amps.size(), T{0}));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        sv.data_[2 * i] = amps[i].real();
        sv.data_[2 * i + 1] = amps[i].imag();
    }
    if (layout.is_blocked()) {
        sv.to_blocked(layout.lanes);
    }
    return sv;
}

template <typename T>
typename StateVector<T>::complex_type
StateVector<T>::amplitude_at(std::size_t i) const {
    require(i < num_amplitudes(), ErrorCode::Range,
            "basis index " + std::to_string(i) + " out of range for " +
                std::to_string(num_qubits_) + " qubits");
    return {data_[re_offset(i)], data_[im_offset(i)]};
}

template <typename T>
void StateVector<T>::set_amplitude(std::size_t i, complex_type value) {
    require(i < num_amplitudes(), ErrorCode::Range,
            "basis index " + std::to_string(i) + " out of range for " +
                std::to_string(num_qubits_) + " qubits");
    data_[re_offset(i)] = value.real();
    data_[im_offset(i)] = value.imag();
}

template <typename T> void StateVector<T>::to_blocked(std::size_t lanes) {
    if (layout_.is_blocked()) {
        require(layout_.lanes == lanes, ErrorCode::Layout,
                "state is already " + to_string(layout_) +
                    ", cannot reblock to " + std::to_string(lanes));
        return;
    }
    check_layout(num_qubits_, Layout::blocked(lanes));
    // Each block of L amplitudes occupies the same 2L components in both
    // layouts, so blocks are permuted independently.
    std::vector<T> scratch(2 * lanes);
    for (std::size_t base = 0; base < data_.size(); base += 2 * lanes) {
        T *block = data_.data() + base;
        for (std::size_t o = 0; o < lanes; ++o) {
            scratch[o] = block[2 * o];
            scratch[lanes + o] = block[2 * o + 1];
        }
        std::copy(scratch.begin(), scratch.end(), block);
    }
    layout_ = Layout::blocked(lanes);
}

template <typename T> void StateVector<T>::to_interleaved() {
    require(layout_.is_blocked(), ErrorCode::Layout,
            "state is already interleaved");
    const std::size_t lanes = layout_.lanes;
    std::vector<T> scratch(2 * lanes);
    for (std::size_t base = 0; base < data_.size(); base += 2 * lanes) {
        T *block = data_.data() + base;
        for (std::size_t o = 0; o < lanes; ++o) {
            scratch[2 * o] = block[o];
            scratch[2 * o + 1] = block[lanes + o];
        }
        std::copy(scratch.begin(), scratch.end(), block);
    }
    layout_ = Layout::interleaved();
}

template <typename T> double norm_sq(const StateVector<T> &sv) {
    // Components are stored pairwise in both layouts, so the sum of squares
    // over the flat data is layout independent.
    double acc = 0.0;
    for (const T v : sv.data()) {
        acc += static_cast<double>(v) * static_cast<double>(v);
    }
    return acc;
}

template <typename A, typename B>
double max_abs_diff(const StateVector<A> &a, const StateVector<B> &b) {
    require(a.num_qubits() == b.num_qubits(), ErrorCode::InvalidArgument,
            "qubit count mismatch: " + std::to_string(a.num_qubits()) +
                " vs " + std::to_string(b.num_qubits()));
    double worst = 0.0;
    const auto ad = a.data();
    const auto bd = b.data();
    for (std::size_t i = 0; i < a.num_amplitudes(); ++i) {
        const double dr = static_cast<double>(ad[a.re_offset(i)]) -
                          static_cast<double>(bd[b.re_offset(i)]);
        const double di = static_cast<double>(ad[a.im_offset(i)]) -
                          static_cast<double>(bd[b.im_offset(i)]);
        worst = std::max(worst, std::hypot(dr, di));
    }
    return worst;
}

template class StateVector<float>;
template class StateVector<double>;
template double norm_sq(const StateVector<float> &);
template double norm_sq(const StateVector<double> &);
template double max_abs_diff(const StateVector<float> &,
                             const StateVector<float> &);
template double max_abs_diff(const StateVector<float> &,
                             const StateVector<double> &);
template double max_abs_diff(const StateVector<double> &,
                             const StateVector<float> &);
template double max_abs_diff(const StateVector<double> &,
                             const StateVector<double> &);

AnyState make_zero_state(unsigned num_qubits, Precision precision,
                         Layout layout, std::uint64_t memory_budget) {
    if (precision == Precision::Single) {
        return StateVector<float>::zero(num_qubits, layout, memory_budget);
    }
    return StateVector<double>::zero(num_qubits, layout, memory_budget);
}

double max_abs_diff(const AnyState &a, const AnyState &b) {
    return std::visit([](const auto &x, const auto &y) {
        return max_abs_diff(x, y);
    }, a, b);
}

double norm_sq(const AnyState &sv) {
    return std::visit([](const auto &s) { return norm_sq(s); }, sv);
}

unsigned num_qubits(const AnyState &sv) {
    return std::visit([](const auto &s) { return s.num_qubits(); }, sv);
}

namespace {

constexpr std::array<char, 8> kMagic = {'V', 'L', 'A', 'Q',
                                        'S', 'T', 'A', 'T'};

template <typename U> void put_le(std::vector<std::uint8_t> &out, U value) {
    using Bits = std::conditional_t<sizeof(U) == 4, std::uint32_t,
                                    std::uint64_t>;
    Bits bits = 0;
    std::memcpy(&bits, &value, sizeof(U));
    for (std::size_t b = 0; b < sizeof(U); ++b) {
        out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
    }
}

template <typename U> U get_le(const std::uint8_t *in) {
    using Bits = std::conditional_t<sizeof(U) == 4, std::uint32_t,
                                    std::uint64_t>;
    Bits bits = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b) {
        bits |= static_cast<Bits>(in[b]) << (8 * b);
    }
    U value;
    std::memcpy(&value, &bits, sizeof(U));
    return value;
}

template <typename T>
std::vector<std::uint8_t> encode(const StateVector<T> &sv) {
    std::vector<std::uint8_t> out;
    out.reserve(kStateDumpHeaderBytes + sv.data().size() * sizeof(T));
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kStateDumpVersion);
    out.push_back(sv.precision() == Precision::Single ? 0 : 1);
    out.push_back(static_cast<std::uint8_t>(LayoutKind::Interleaved));
    out.push_back(0);
    put_le<std::uint32_t>(out, sv.num_qubits());
    for (std::size_t i = 0; i < sv.num_amplitudes(); ++i) {
        put_le<T>(out, sv.data()[sv.re_offset(i)]);
        put_le<T>(out, sv.data()[sv.im_offset(i)]);
    }
    return out;
}

template <typename T>
StateVector<T> decode_body(unsigned n, std::span<const std::uint8_t> body) {
    const std::size_t count = std::size_t{2} << n;
    require(body.size() == count * sizeof(T), ErrorCode::Parse,
            "state dump body has " + std::to_string(body.size()) +
                " bytes, expected " + std::to_string(count * sizeof(T)));
    auto sv = StateVector<T>::zero(n);
    auto data = sv.data();
    for (std::size_t k = 0; k < count; ++k) {
        data[k] = get_le<T>(body.data() + k * sizeof(T));
    }
    return sv;
}

} // namespace

std::vector<std::uint8_t> encode_state(const AnyState &sv) {
    return std::visit([](const auto &s) { return encode(s); }, sv);
}

AnyState decode_state(std::span<const std::uint8_t> bytes) {
    require(bytes.size() >= kStateDumpHeaderBytes, ErrorCode::Parse,
            "state dump shorter than its header");
    require(std::equal(kMagic.begin(), kMagic.end(), bytes.begin()),
            ErrorCode::Parse, "bad state dump magic");
    require(bytes[8] == kStateDumpVersion, ErrorCode::Parse,
            "unsupported state dump version " + std::to_string(bytes[8]));
    require(bytes[10] == static_cast<std::uint8_t>(LayoutKind::Interleaved),
            ErrorCode::Parse, "only interleaved state dumps are supported");
    const auto n = get_le<std::uint32_t>(bytes.data() + 12);
    require(n >= 1 && n <= kMaxQubits, ErrorCode::Parse,
            "state dump qubit count " + std::to_string(n) + " out of range");
    const auto body = bytes.subspan(kStateDumpHeaderBytes);
    switch (bytes[9]) {
    case 0:
        return decode_body<float>(n, body);
    case 1:
        return decode_body<double>(n, body);
    default:
        fail(ErrorCode::Parse,
             "unknown precision code " + std::to_string(bytes[9]));
    }
}

void write_state(const std::filesystem::path &path, const AnyState &sv) {
    const auto bytes = encode_state(sv);
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorCode::Io,
            "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char *>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    require(static_cast<bool>(out), ErrorCode::Io,
            "write to " + path.string() + " failed");
}

AnyState read_state(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::Io,
            "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_state(bytes);
}

} // namespace vlaq
