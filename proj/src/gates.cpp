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
#include "vlaq/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "vlaq/error.hpp"

namespace vlaq {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, cplx{0.0, 0.0}) {
    require(std::has_single_bit(dim), ErrorCode::InvalidArgument,
            "matrix dimension must be a power of two, got " +
                std::to_string(dim));
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require(std::has_single_bit(dim), ErrorCode::InvalidArgument,
            "matrix dimension must be a power of two, got " +
                std::to_string(dim));
    require(entries_.size() == dim * dim, ErrorCode::InvalidArgument,
            "matrix needs dim^2 entries");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : ComplexMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        require(row.size() == dim_, ErrorCode::InvalidArgument,
                "matrix rows must all have dim entries");
        std::copy(row.begin(), row.end(), entries_.begin() + r * dim_);
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

unsigned ComplexMatrix::num_qubits() const noexcept {
    return static_cast<unsigned>(std::countr_zero(dim_));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix &left,
                             const ComplexMatrix &right) {
    const std::size_t d1 = left.dim();
    const std::size_t d2 = right.dim();
    ComplexMatrix out(d1 * d2);
    for (std::size_t a = 0; a < d1; ++a) {
        for (std::size_t c = 0; c < d1; ++c) {
            const cplx l = left(a, c);
            for (std::size_t b = 0; b < d2; ++b) {
                for (std::size_t d = 0; d < d2; ++d) {
                    out(a * d2 + b, c * d2 + d) = l * right(b, d);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &later, const ComplexMatrix &earlier) {
    require(later.dim() == earlier.dim(), ErrorCode::InvalidArgument,
            "matmul dimension mismatch: " + std::to_string(later.dim()) +
                " vs " + std::to_string(earlier.dim()));
    const std::size_t d = later.dim();
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            const cplx lk = later(r, k);
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += lk * earlier(k, c);
            }
        }
    }
    return out;
}

double unitarity_error(const ComplexMatrix &u) {
    const std::size_t d = u.dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) {
                acc += u(r, k) * std::conj(u(c, k));
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    return u.dim() > 0 && unitarity_error(u) <= tol;
}

ComplexMatrix permute_qubits(const ComplexMatrix &u,
                             std::span<const unsigned> perm) {
    const std::size_t d = u.dim();
    require(perm.size() == u.num_qubits(), ErrorCode::InvalidArgument,
            "permutation length must equal the matrix qubit count");
    auto map_index = [&](std::size_t x) {
        std::size_t orig = 0;
        for (std::size_t j = 0; j < perm.size(); ++j) {
            orig |= ((x >> j) & 1U) << perm[j];
        }
        return orig;
    };
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out(r, c) = u(map_index(r), map_index(c));
        }
    }
    return out;
}

std::vector<unsigned> Gate::qubits() const {
    std::vector<unsigned> all = targets;
    all.insert(all.end(), controls.begin(), controls.end());
    return all;
}

unsigned Gate::max_qubit() const {
    const auto all = qubits();
    return all.empty() ? 0 : *std::max_element(all.begin(), all.end());
}

void validate_gate(const Gate &g) {
    require(!g.targets.empty(), ErrorCode::InvalidArgument,
            "gate '" + g.label + "' has no targets");
    auto all = g.qubits();
    std::sort(all.begin(), all.end());
    require(std::adjacent_find(all.begin(), all.end()) == all.end(),
            ErrorCode::InvalidArgument,
            "gate '" + g.label + "' has overlapping qubit positions");
    require(g.matrix.dim() == (std::size_t{1} << g.targets.size()),
            ErrorCode::InvalidArgument,
            "gate '" + g.label + "' matrix dimension does not match " +
                std::to_string(g.targets.size()) + " targets");
}

namespace gates {

namespace {

using namespace std::complex_literals;

Gate make(std::string label, std::vector<unsigned> targets, ComplexMatrix m,
          std::vector<double> params = {},
          std::vector<unsigned> controls = {}) {
    Gate g{std::move(targets), std::move(controls), std::move(m),
           std::move(label), std::move(params)};
    validate_gate(g);
    return g;
}

} // namespace

Gate hadamard(unsigned q) {
    const double h = 1.0 / std::numbers::sqrt2;
    return make("h", {q}, {{h, h}, {h, -h}});
}

Gate identity(unsigned q) { return make("id", {q}, ComplexMatrix::identity(2)); }

Gate pauli_x(unsigned q) { return make("x", {q}, {{0.0, 1.0}, {1.0, 0.0}}); }

Gate pauli_y(unsigned q) { return make("y", {q}, {{0.0, -1i}, {1i, 0.0}}); }

Gate pauli_z(unsigned q) { return make("z", {q}, {{1.0, 0.0}, {0.0, -1.0}}); }

Gate s(unsigned q) { return make("s", {q}, {{1.0, 0.0}, {0.0, 1i}}); }

Gate sdg(unsigned q) { return make("sdg", {q}, {{1.0, 0.0}, {0.0, -1i}}); }

Gate t(unsigned q) {
    return make("t", {q}, {{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4)}});
}

Gate tdg(unsigned q) {
    return make("tdg", {q},
                {{1.0, 0.0}, {0.0, std::polar(1.0, -std::numbers::pi / 4)}});
}

Gate phase(unsigned q, double theta) {
    return make("p", {q}, {{1.0, 0.0}, {0.0, std::polar(1.0, theta)}},
                {theta});
}

Gate rx(unsigned q, double theta) {
    const double c = std::cos(theta / 2);
    const double sn = std::sin(theta / 2);
    return make("rx", {q}, {{c, -1i * sn}, {-1i * sn, c}}, {theta});
}

Gate ry(unsigned q, double theta) {
    const double c = std::cos(theta / 2);
    const double sn = std::sin(theta / 2);
    return make("ry", {q}, {{c, -sn}, {sn, c}}, {theta});
}

Gate rz(unsigned q, double theta) {
    return make("rz", {q},
                {{std::polar(1.0, -theta / 2), 0.0},
                 {0.0, std::polar(1.0, theta / 2)}},
                {theta});
}

Gate u3(unsigned q, double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double sn = std::sin(theta / 2);
    return make("u3", {q},
                {{c, -std::polar(sn, lambda)},
                 {std::polar(sn, phi), std::polar(c, phi + lambda)}},
                {theta, phi, lambda});
}

Gate controlled(Gate base, std::vector<unsigned> controls) {
    base.controls.insert(base.controls.end(), controls.begin(),
                         controls.end());
    validate_gate(base);
    return base;
}

Gate cnot(unsigned control, unsigned target) {
    return controlled(pauli_x(target), {control});
}

Gate cz(unsigned control, unsigned target) {
    return controlled(pauli_z(target), {control});
}

Gate cphase(unsigned control, unsigned target, double theta) {
    return controlled(phase(target, theta), {control});
}

Gate swap(unsigned a, unsigned b) {
    return make("swap", {a, b},
                {{1.0, 0.0, 0.0, 0.0},
                 {0.0, 0.0, 1.0, 0.0},
                 {0.0, 1.0, 0.0, 0.0},
                 {0.0, 0.0, 0.0, 1.0}});
}

Gate toffoli(unsigned c1, unsigned c2, unsigned target) {
    return mcx({c1, c2}, target);
}

Gate mcx(std::vector<unsigned> controls, unsigned target) {
    return controlled(pauli_x(target), std::move(controls));
}

Gate custom(ComplexMatrix matrix, std::vector<unsigned> targets,
            std::vector<unsigned> controls, std::string label) {
    require(is_unitary(matrix, kUnitaryTolSingle), ErrorCode::InvalidArgument,
            "matrix for gate '" + label + "' is not unitary");
    return make(std::move(label), std::move(targets), std::move(matrix), {},
                std::move(controls));
}

} // namespace gates

Circuit::Circuit(unsigned num_qubits, std::string name,
                 std::optional<std::uint64_t> seed)
    : num_qubits_(num_qubits), name_(std::move(name)), seed_(seed) {
    require(num_qubits >= 1, ErrorCode::InvalidArgument,
            "a circuit needs at least one qubit");
}

Circuit &Circuit::add(Gate g) {
    validate_gate(g);
    require(g.max_qubit() < num_qubits_, ErrorCode::Range,
            "gate '" + g.label + "' touches qubit " +
                std::to_string(g.max_qubit()) + " of a " +
                std::to_string(num_qubits_) + "-qubit circuit");
    gates_.push_back(std::move(g));
    return *this;
}

} // namespace vlaq
