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
// Independent dense oracle used by the tests. It shares nothing with the
// simulator kernels: every output amplitude is computed directly from
// the gate definition by walking all basis indices in std::complex<double>.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "vlaq/gates.hpp"
#include "vlaq/state.hpp"

namespace oracle {

using cd = std::complex<double>;
using Amps = std::vector<cd>;

inline Amps zero_state(unsigned n) {
    Amps s(std::size_t{1} << n, cd{0.0, 0.0});
    s[0] = 1.0;
    return s;
}

inline Amps random_state(unsigned n, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    Amps s(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : s) {
        a = {d(rng), d(rng)};
        norm += std::norm(a);
    }
    for (auto &a : s) {
        a /= std::sqrt(norm);
    }
    return s;
}

/// Row index of basis state i inside the gate's matrix: bit j is the bit of
/// i at targets[j].
inline std::size_t local_index(std::size_t i, const vlaq::Gate &g) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < g.targets.size(); ++j) {
        r |= ((i >> g.targets[j]) & 1U) << j;
    }
    return r;
}

inline std::size_t with_local(std::size_t i, std::size_t r,
                              const vlaq::Gate &g) {
    for (std::size_t j = 0; j < g.targets.size(); ++j) {
        const std::size_t bit = std::size_t{1} << g.targets[j];
        i = ((r >> j) & 1U) != 0 ? (i | bit) : (i & ~bit);
    }
    return i;
}

inline bool controls_on(std::size_t i, const vlaq::Gate &g) {
    return std::all_of(g.controls.begin(), g.controls.end(),
                       [&](unsigned c) { return ((i >> c) & 1U) != 0; });
}

inline Amps apply(const Amps &in, const vlaq::Gate &g) {
    Amps out(in.size());
    const std::size_t dim = std::size_t{1} << g.targets.size();
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (!controls_on(i, g)) {
            out[i] = in[i];
            continue;
        }
        const std::size_t row = local_index(i, g);
        cd acc = 0.0;
        for (std::size_t col = 0; col < dim; ++col) {
            acc += g.matrix(row, col) * in[with_local(i, col, g)];
        }
        out[i] = acc;
    }
    return out;
}

inline Amps run(const std::vector<vlaq::Gate> &gates, Amps s) {
    for (const auto &g : gates) {
        s = oracle::apply(s, g);
    }
    return s;
}

inline Amps run(const vlaq::Circuit &c) {
    return run(c.gates(), zero_state(c.num_qubits()));
}

/// Full 2^n x 2^n matrix of a gate (controls included) for small n.
inline std::vector<cd> embed(const vlaq::Gate &g, unsigned n) {
    const std::size_t N = std::size_t{1} << n;
    std::vector<cd> m(N * N);
    for (std::size_t col = 0; col < N; ++col) {
        Amps e(N, 0.0);
        e[col] = 1.0;
        const auto out = oracle::apply(e, g);
        for (std::size_t row = 0; row < N; ++row) {
            m[row * N + col] = out[row];
        }
    }
    return m;
}

template <typename T>
double max_abs_diff(const Amps &a, const vlaq::StateVector<T> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto v = b.amplitude_at(i);
        worst = std::max(worst, std::abs(a[i] - cd(v.real(), v.imag())));
    }
    return worst;
}

inline double max_abs_diff(const Amps &a, const Amps &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs_diff(const Amps &a, const vlaq::AnyState &b) {
    return std::visit([&](const auto &sv) { return max_abs_diff(a, sv); }, b);
}

template <typename T>
vlaq::StateVector<T> to_state(const Amps &a,
                              vlaq::Layout layout = vlaq::Layout::interleaved()) {
    std::vector<std::complex<T>> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        v[i] = {static_cast<T>(a[i].real()), static_cast<T>(a[i].imag())};
    }
    return vlaq::StateVector<T>::from_amplitudes(v, layout);
}

/// Haar-ish random unitary from Gram-Schmidt on a Gaussian matrix.
inline vlaq::ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    std::vector<std::vector<cd>> cols(dim, std::vector<cd>(dim));
    for (auto &c : cols) {
        for (auto &x : c) {
            x = {d(rng), d(rng)};
        }
    }
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            cd proj = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                proj += std::conj(cols[j][i]) * cols[k][i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                cols[k][i] -= proj * cols[j][i];
            }
        }
        double norm = 0.0;
        for (const auto &x : cols[k]) {
            norm += std::norm(x);
        }
        for (auto &x : cols[k]) {
            x /= std::sqrt(norm);
        }
    }
    vlaq::ComplexMatrix u(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

/// Random circuit of uncontrolled and controlled gates with up to max_k
/// targets.
inline vlaq::Circuit random_circuit(unsigned n, std::size_t gates,
                                    unsigned max_k, std::mt19937_64 &rng) {
    vlaq::Circuit c(n, "random");
    std::vector<unsigned> qubits(n);
    for (unsigned q = 0; q < n; ++q) {
        qubits[q] = q;
    }
    for (std::size_t i = 0; i < gates; ++i) {
        std::shuffle(qubits.begin(), qubits.end(), rng);
        const unsigned k =
            1 + static_cast<unsigned>(rng() % std::min(max_k, n));
        const unsigned spare = n - k;
        const unsigned nc =
            spare == 0 ? 0 : static_cast<unsigned>(rng() % (std::min(spare, 2U) + 1));
        std::vector<unsigned> targets(qubits.begin(), qubits.begin() + k);
        std::vector<unsigned> controls(qubits.begin() + k,
                                       qubits.begin() + k + nc);
        c.add(vlaq::gates::custom(random_unitary(std::size_t{1} << k, rng),
                                  targets, controls));
    }
    return c;
}

} // namespace oracle
