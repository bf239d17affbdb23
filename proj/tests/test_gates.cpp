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
#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "vlaq/gates.hpp"

using namespace vlaq;
using namespace std::complex_literals;

namespace {

double entry_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    REQUIRE(a.dim() == b.dim());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

std::vector<Gate> every_constructor() {
    return {gates::hadamard(0),  gates::identity(0), gates::pauli_x(0),
            gates::pauli_y(0),   gates::pauli_z(0),  gates::s(0),
            gates::sdg(0),       gates::t(0),        gates::tdg(0),
            gates::phase(0, 0.3), gates::rx(0, 1.1), gates::ry(0, -0.4),
            gates::rz(0, 2.5),   gates::u3(0, 0.1, 0.2, 0.3),
            gates::cnot(1, 0),   gates::cz(1, 0),    gates::cphase(1, 0, 0.7),
            gates::swap(0, 1),   gates::toffoli(1, 2, 0),
            gates::mcx({1, 2, 3}, 0)};
}

} // namespace

TEST_CASE("hadamard and zero rotations") {
    const double h = 1.0 / std::sqrt(2.0);
    const auto H = gates::hadamard(0).matrix;
    CHECK(entry_diff(H, ComplexMatrix{{h, h}, {h, -h}}) < 1e-15);
    CHECK(entry_diff(gates::rx(0, 0.0).matrix, ComplexMatrix::identity(2)) == 0.0);
    CHECK(entry_diff(gates::ry(0, 0.0).matrix, ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("every constructor is unitary at double tolerance") {
    for (const auto &g : every_constructor()) {
        INFO(g.label);
        CHECK(is_unitary(g.matrix, kUnitaryTolDouble));
        CHECK(g.matrix.dim() == (std::size_t{1} << g.num_targets()));
    }
}

TEST_CASE("toffoli swaps |110> and |111> in the 3-qubit embedding") {
    // Controls on q1, q2, target q0: basis 6 = |110>, 7 = |111>.
    const auto m = oracle::embed(gates::toffoli(1, 2, 0), 3);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            std::size_t image = c;
            if (c == 6) {
                image = 7;
            } else if (c == 7) {
                image = 6;
            }
            CHECK(m[r * 8 + c] == oracle::cd(r == image ? 1.0 : 0.0, 0.0));
        }
    }
}

TEST_CASE("controls act on |1>") {
    // CNOT(control 0, target 1): |01> (index 1) -> |11> (index 3).
    auto s = oracle::Amps(4, 0.0);
    s[1] = 1.0;
    const auto out = oracle::apply(s, gates::cnot(0, 1));
    CHECK(out[3] == oracle::cd(1.0, 0.0));
    CHECK(out[1] == oracle::cd(0.0, 0.0));
}

TEST_CASE("tensor product") {
    CHECK(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) ==
          ComplexMatrix::identity(4));

    const auto H = gates::hadamard(0).matrix;
    const auto HH = tensor_product(H, H);
    CHECK(HH.dim() == 4);
    for (const auto &e : HH.entries()) {
        CHECK(std::abs(std::abs(e.real()) - 0.5) < 1e-15);
        CHECK(e.imag() == 0.0);
    }

    std::mt19937_64 rng(3);
    const auto A = oracle::random_unitary(2, rng);
    const auto B = oracle::random_unitary(4, rng);
    const auto C = oracle::random_unitary(2, rng);
    const auto AB = tensor_product(A, B);
    CHECK(AB.dim() == 8);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            for (std::size_t c = 0; c < 2; ++c) {
                for (std::size_t d = 0; d < 4; ++d) {
                    CHECK(AB(a * 4 + b, c * 4 + d) == A(a, c) * B(b, d));
                }
            }
        }
    }
    CHECK(is_unitary(AB, kUnitaryTolDouble));
    // Associativity: identical products in the same order per entry.
    CHECK(entry_diff(tensor_product(tensor_product(A, B), C),
                     tensor_product(A, tensor_product(B, C))) < 1e-15);
}

TEST_CASE("tensor product orientation: right factor on targets[0]") {
    std::mt19937_64 rng(11);
    const auto A = oracle::random_unitary(2, rng);
    const auto B = oracle::random_unitary(2, rng);
    const auto s = oracle::random_state(3, rng);
    const auto two_step = oracle::apply(
        oracle::apply(s, gates::custom(B, {0})), gates::custom(A, {2}));
    const auto fused = oracle::apply(s, gates::custom(tensor_product(A, B), {0, 2}));
    CHECK(oracle::max_abs_diff(two_step, fused) < 1e-14);
}

TEST_CASE("matmul order and closure") {
    const auto H = gates::hadamard(0).matrix;
    CHECK(entry_diff(matmul(H, H), ComplexMatrix::identity(2)) < 1e-15);

    const auto X = gates::pauli_x(0).matrix;
    const auto Z = gates::pauli_z(0).matrix;
    const auto Y = gates::pauli_y(0).matrix;
    std::mt19937_64 rng(5);
    const auto s = oracle::random_state(1, rng);
    const auto xz = oracle::apply(s, gates::custom(matmul(X, Z), {0}));
    const auto z_then_x =
        oracle::apply(oracle::apply(s, gates::pauli_z(0)), gates::pauli_x(0));
    CHECK(oracle::max_abs_diff(xz, z_then_x) < 1e-15);
    // X Z = -i Y: the same state up to the global phase -i.
    auto y_state = oracle::apply(s, gates::pauli_y(0));
    for (auto &a : y_state) {
        a *= -1i;
    }
    CHECK(oracle::max_abs_diff(xz, y_state) < 1e-15);
    (void)Y;

    const auto U = oracle::random_unitary(8, rng);
    const auto V = oracle::random_unitary(8, rng);
    CHECK(is_unitary(matmul(U, V), kUnitaryTolDouble));
    CHECK_THROWS_AS(matmul(U, H), Error);
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(ComplexMatrix::identity(4), kUnitaryTolDouble));
    CHECK(is_unitary(gates::hadamard(0).matrix, kUnitaryTolDouble));
    auto bad = gates::hadamard(0).matrix;
    bad(0, 0) *= 2.0;
    bad(0, 1) *= 2.0;
    CHECK_FALSE(is_unitary(bad, kUnitaryTolSingle));
    CHECK(unitarity_error(bad) > 1.0);
    CHECK_THROWS_AS(gates::custom(bad, {0}), Error);
}

TEST_CASE("permute_qubits re-expresses a matrix for reordered targets") {
    std::mt19937_64 rng(9);
    const auto U = oracle::random_unitary(8, rng);
    const std::vector<unsigned> targets{4, 1, 2};
    const std::vector<unsigned> perm{2, 0, 1};
    std::vector<unsigned> reordered;
    for (const unsigned p : perm) {
        reordered.push_back(targets[p]);
    }
    const auto s = oracle::random_state(5, rng);
    const auto a = oracle::apply(s, gates::custom(U, targets));
    const auto b = oracle::apply(s, gates::custom(permute_qubits(U, perm), reordered));
    CHECK(oracle::max_abs_diff(a, b) < 1e-14);
}

TEST_CASE("gate validation") {
    CHECK_THROWS_AS(gates::cnot(1, 1), Error);
    CHECK_THROWS_AS(gates::swap(2, 2), Error);
    CHECK_THROWS_AS(gates::mcx({0, 0}, 1), Error);
    CHECK_THROWS_AS(gates::custom(ComplexMatrix::identity(4), {0}), Error);

    Circuit c(3);
    CHECK_NOTHROW(c.add(gates::toffoli(0, 1, 2)));
    try {
        c.add(gates::hadamard(3));
        FAIL("expected a range error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Range);
    }
    CHECK(c.size() == 1);
}

TEST_CASE("circuit text round trip") {
    Circuit c(4, "demo");
    c.add(gates::hadamard(0));
    c.add(gates::cnot(0, 1));
    c.add(gates::rz(3, 0.7853981));
    c.add(gates::u3(2, 0.1, 0.2, 0.3));
    c.add(gates::swap(1, 3));
    c.add(gates::mcx({0, 1, 2}, 3));
    c.add(gates::cphase(2, 0, std::numbers::pi / 8));
    const auto text = format_circuit(c);
    std::istringstream in(text);
    const auto back = parse_circuit(in);
    REQUIRE(back.size() == c.size());
    CHECK(back.num_qubits() == 4);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.gates()[i].targets == c.gates()[i].targets);
        CHECK(back.gates()[i].controls == c.gates()[i].controls);
        CHECK(entry_diff(back.gates()[i].matrix, c.gates()[i].matrix) == 0.0);
    }
}

TEST_CASE("circuit text parsing") {
    std::istringstream in(
        "# bell pair\n"
        "h 0\n"
        "cx 0 1   # entangle\n"
        "\n"
        "x 2 | 0 1\n"
        "RZ 3 @ 0.5\n");
    const auto c = parse_circuit(in);
    CHECK(c.num_qubits() == 4);
    REQUIRE(c.size() == 4);
    CHECK(c.gates()[1].controls == std::vector<unsigned>{0});
    CHECK(c.gates()[1].targets == std::vector<unsigned>{1});
    CHECK(c.gates()[2].controls == std::vector<unsigned>{0, 1});
    CHECK(c.gates()[3].params == std::vector<double>{0.5});

    std::istringstream declared("qubits 6\nh 0\n");
    CHECK(parse_circuit(declared).num_qubits() == 6);

    auto parse_code = [](const std::string &text) {
        std::istringstream s(text);
        try {
            (void)parse_circuit(s);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::Io; // sentinel: no error
    };
    CHECK(parse_code("bogus 0\n") == ErrorCode::Parse);
    CHECK(parse_code("h\n") == ErrorCode::Parse);
    CHECK(parse_code("rx 0\n") == ErrorCode::Parse);
    CHECK(parse_code("h a\n") == ErrorCode::Parse);
    CHECK(parse_code("cx 1 1\n") == ErrorCode::Parse);
    CHECK(parse_code("qubits 2\nh 3\n") == ErrorCode::Range);
    CHECK_THROWS_AS(load_circuit("/nonexistent/file.txt"), Error);
}
