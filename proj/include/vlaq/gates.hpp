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
 * Gate and circuit data model plus the small dense-matrix algebra used by
 * gate fusion.
 *
 * Qubit positions are 0-based with position 0 the least significant bit of
 * the basis index. A gate's matrix acts on its targets only; controls stay
 * symbolic so kernels can predicate on them. Row/column index bit j of the
 * matrix corresponds to targets[j].
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vlaq {

using cplx = std::complex<double>;

inline constexpr double kUnitaryTolSingle = 1e-6;
inline constexpr double kUnitaryTolDouble = 1e-12;

/// Row-major dense complex matrix with power-of-two dimension.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] unsigned num_qubits() const noexcept;
    [[nodiscard]] std::span<const cplx> entries() const noexcept {
        return entries_;
    }

    [[nodiscard]] cplx &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] const cplx &operator()(std::size_t row,
                                         std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] ComplexMatrix adjoint() const;

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

/// left ⊗ right. The right factor owns the low bits of the combined index:
/// (left ⊗ right)[a*d2 + b, c*d2 + d] = left[a, c] * right[b, d].
[[nodiscard]] ComplexMatrix tensor_product(const ComplexMatrix &left,
                                           const ComplexMatrix &right);

/// Product ordered so that applying the result equals applying `earlier`
/// then `later`, i.e. later * earlier.
[[nodiscard]] ComplexMatrix matmul(const ComplexMatrix &later,
                                   const ComplexMatrix &earlier);

[[nodiscard]] bool is_unitary(const ComplexMatrix &u, double tol);

/// Largest |(U U^dagger - I)_ij|.
[[nodiscard]] double unitarity_error(const ComplexMatrix &u);

/// Re-express `u` for a reordered target list: result bit j corresponds to
/// original bit perm[j].
[[nodiscard]] ComplexMatrix permute_qubits(const ComplexMatrix &u,
                                           std::span<const unsigned> perm);

struct Gate {
    std::vector<unsigned> targets;
    std::vector<unsigned> controls;
    ComplexMatrix matrix;
    std::string label;
    std::vector<double> params;

    [[nodiscard]] unsigned num_targets() const noexcept {
        return static_cast<unsigned>(targets.size());
    }
    [[nodiscard]] bool is_controlled() const noexcept {
        return !controls.empty();
    }
    /// Targets followed by controls.
    [[nodiscard]] std::vector<unsigned> qubits() const;
    [[nodiscard]] unsigned max_qubit() const;
};

/// Structural checks: non-empty distinct targets, controls disjoint from
/// targets, matrix dimension 2^|targets|. Throws vlaq::Error.
void validate_gate(const Gate &g);

namespace gates {

Gate hadamard(unsigned q);
Gate identity(unsigned q);
Gate pauli_x(unsigned q);
Gate pauli_y(unsigned q);
Gate pauli_z(unsigned q);
Gate s(unsigned q);
Gate sdg(unsigned q);
Gate t(unsigned q);
Gate tdg(unsigned q);
/// diag(1, e^{i theta})
Gate phase(unsigned q, double theta);
Gate rx(unsigned q, double theta);
Gate ry(unsigned q, double theta);
Gate rz(unsigned q, double theta);
/// General single-qubit unitary U3(theta, phi, lambda).
Gate u3(unsigned q, double theta, double phi, double lambda);
Gate cnot(unsigned control, unsigned target);
Gate cz(unsigned control, unsigned target);
Gate cphase(unsigned control, unsigned target, double theta);
/// One 2-qubit gate, not three CNOTs.
Gate swap(unsigned a, unsigned b);
Gate toffoli(unsigned c1, unsigned c2, unsigned target);
Gate mcx(std::vector<unsigned> controls, unsigned target);
/// Any single-qubit constructor result with extra controls attached.
Gate controlled(Gate base, std::vector<unsigned> controls);
/// Arbitrary unitary; rejected unless unitary within kUnitaryTolSingle.
Gate custom(ComplexMatrix matrix, std::vector<unsigned> targets,
            std::vector<unsigned> controls = {}, std::string label = "u");

} // namespace gates

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(unsigned num_qubits, std::string name = "circuit",
                     std::optional<std::uint64_t> seed = std::nullopt);

    /// Appends after validating the gate against the circuit width.
    Circuit &add(Gate g);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] std::optional<std::uint64_t> seed() const noexcept {
        return seed_;
    }

  private:
    unsigned num_qubits_ = 0;
    std::vector<Gate> gates_;
    std::string name_ = "circuit";
    std::optional<std::uint64_t> seed_;
};

/// Text circuit format, one gate per line:
///
///     GATE q_targets [| controls] [@ params]
///
/// e.g. `h 0`, `cx 0 1`, `rz 3 @ 0.7853981`, `x 2 | 0 1`. Qubits are
/// 0-based. Blank lines and `#` comments are skipped; an optional
/// `qubits N` line fixes the width, otherwise it is max qubit + 1 or
/// `num_qubits` when given.
[[nodiscard]] Circuit parse_circuit(std::istream &in,
                                    std::optional<unsigned> num_qubits =
                                        std::nullopt,
                                    std::string name = "file");
[[nodiscard]] Circuit load_circuit(const std::string &path,
                                   std::optional<unsigned> num_qubits =
                                       std::nullopt);
/// Inverse of parse_circuit for gates built by named constructors.
[[nodiscard]] std::string format_circuit(const Circuit &c);

} // namespace vlaq
