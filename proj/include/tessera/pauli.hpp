// Copyright 2026 The Tessera Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tessera {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(PauliLetter p) { return "IXYZ"[static_cast<int>(p)]; }

/// Signed multi-qubit Pauli operator.
///
/// Internally stored in the i-exponent form  P = i^k * prod_q X_q^{x_q} Z_q^{z_q},
/// which makes products and Clifford conjugation exact integer arithmetic.
/// The public phase is one of {+1, -1, +i, -i}; a Y letter on qubit q
/// corresponds to x_q = z_q = 1 with one factor of i absorbed into k.
///
/// Qubit 0 is the most significant bit of a basis-state index, matching the
/// global qubit ordering used everywhere in the library.
class PauliString {
  public:
    explicit PauliString(int n_qubits) : n_(n_qubits) {
        if (n_qubits < 1 || n_qubits > 16)
            throw std::invalid_argument("PauliString: bad qubit count");
    }

    static PauliString from_letters(const std::vector<PauliLetter>& letters,
                                    std::complex<double> phase = {1.0, 0.0}) {
        PauliString p(static_cast<int>(letters.size()));
        p.k_ = phase_to_exponent(phase);
        for (int q = 0; q < p.n_; ++q) p.set_letter(q, letters[q]);
        return p;
    }

    /// Identity string with a single non-identity letter on `qubit`.
    static PauliString single(int n_qubits, int qubit, PauliLetter l) {
        PauliString p(n_qubits);
        p.check_qubit(qubit);
        p.set_letter(qubit, l);
        return p;
    }

    int n_qubits() const { return n_; }

    PauliLetter letter(int q) const {
        check_qubit(q);
        int x = bit(x_, q), z = bit(z_, q);
        return static_cast<PauliLetter>(x && z ? 2 : (x ? 1 : (z ? 3 : 0)));
    }

    /// External phase, one of {+1, +i, -1, -i}.
    std::complex<double> phase() const {
        static const std::complex<double> table[4] = {
            {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        int y_count = std::popcount(x_ & z_);
        return table[(k_ + 4 - (y_count & 3)) & 3];
    }

    bool is_identity_letters() const { return x_ == 0 && z_ == 0; }

    /// Product (this * rhs) with exact phase tracking.
    PauliString operator*(const PauliString& rhs) const {
        if (n_ != rhs.n_)
            throw std::invalid_argument("PauliString: size mismatch");
        PauliString out(n_);
        // Moving Z^{z1} past X^{x2} yields (-1)^{|z1 & x2|}.
        int swaps = std::popcount(z_ & rhs.x_);
        out.k_ = static_cast<std::uint8_t>((k_ + rhs.k_ + 2 * swaps) & 3);
        out.x_ = x_ ^ rhs.x_;
        out.z_ = z_ ^ rhs.z_;
        return out;
    }

    bool operator==(const PauliString& rhs) const {
        return n_ == rhs.n_ && x_ == rhs.x_ && z_ == rhs.z_ && k_ == rhs.k_;
    }

    /// Conjugation by H on `q`: X <-> Z, Y -> -Y.
    void conjugate_hadamard(int q) {
        check_qubit(q);
        int x = bit(x_, q), z = bit(z_, q);
        k_ = static_cast<std::uint8_t>((k_ + 2 * (x & z)) & 3);
        set_bit(x_, q, z);
        set_bit(z_, q, x);
    }

    /// Conjugation by the phase gate S on `q`: X -> Y, Z -> Z.
    void conjugate_phase_gate(int q) {
        check_qubit(q);
        int x = bit(x_, q);
        k_ = static_cast<std::uint8_t>((k_ + x) & 3);
        set_bit(z_, q, bit(z_, q) ^ x);
    }

    /// Conjugation by CNOT(control -> target).
    void conjugate_cnot(int control, int target) {
        check_qubit(control);
        check_qubit(target);
        if (control == target)
            throw std::invalid_argument("PauliString: control == target");
        set_bit(x_, target, bit(x_, target) ^ bit(x_, control));
        set_bit(z_, control, bit(z_, control) ^ bit(z_, target));
    }

    /// Dense matrix realization (dimension 2^n), including the phase.
    Eigen::MatrixXcd matrix() const {
        static const Eigen::Matrix2cd singles[4] = {
            (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
            (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
            (Eigen::Matrix2cd() << 0, std::complex<double>(0, -1),
             std::complex<double>(0, 1), 0)
                .finished(),
            (Eigen::Matrix2cd() << 1, 0, 0, -1).finished()};
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = 0; q < n_; ++q) {
            const Eigen::Matrix2cd& g = singles[static_cast<int>(letter(q))];
            Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    next.block(a * out.rows(), b * out.cols(), out.rows(),
                               out.cols()) = g(a, b) * out;
            out = next;
        }
        return phase() * out;
    }

    std::string str() const {
        std::complex<double> ph = phase();
        std::string s;
        if (ph.real() > 0.5) s = "+";
        else if (ph.real() < -0.5) s = "-";
        else if (ph.imag() > 0.5) s = "+i";
        else s = "-i";
        for (int q = 0; q < n_; ++q) s += to_char(letter(q));
        return s;
    }

    /// Stable key for hashing / ordering (ignores nothing; phase included).
    std::uint64_t key() const {
        return (std::uint64_t(x_) << 40) | (std::uint64_t(z_) << 16) |
               (std::uint64_t(k_) << 8) | std::uint64_t(n_);
    }

  private:
    static std::uint8_t phase_to_exponent(std::complex<double> phase) {
        if (std::abs(phase - std::complex<double>(1, 0)) < 1e-12) return 0;
        if (std::abs(phase - std::complex<double>(0, 1)) < 1e-12) return 1;
        if (std::abs(phase + std::complex<double>(1, 0)) < 1e-12) return 2;
        if (std::abs(phase + std::complex<double>(0, 1)) < 1e-12) return 3;
        throw std::invalid_argument("PauliString: phase must be a power of i");
    }

    void set_letter(int q, PauliLetter l) {
        switch (l) {
            case PauliLetter::I: break;
            case PauliLetter::X: set_bit(x_, q, 1); break;
            case PauliLetter::Z: set_bit(z_, q, 1); break;
            case PauliLetter::Y:
                set_bit(x_, q, 1);
                set_bit(z_, q, 1);
                k_ = static_cast<std::uint8_t>((k_ + 1) & 3); // Y = i X Z
                break;
        }
    }

    void check_qubit(int q) const {
        if (q < 0 || q >= n_)
            throw std::invalid_argument("PauliString: qubit out of range");
    }

    static int bit(std::uint32_t bits, int q) { return (bits >> q) & 1; }
    static void set_bit(std::uint32_t& bits, int q, int v) {
        bits = (bits & ~(1u << q)) | (std::uint32_t(v & 1) << q);
    }

    int n_;
    std::uint32_t x_ = 0, z_ = 0;
    std::uint8_t k_ = 0;
};

/// Named single- and two-qubit Clifford gates usable for symbolic
/// conjugation.
struct CliffordOp {
    enum class Kind { hadamard, phase_gate, cnot };
    Kind kind;
    int q0 = 0; // hadamard/phase target, or cnot control
    int q1 = 0; // cnot target

    static CliffordOp hadamard(int q) { return {Kind::hadamard, q, 0}; }
    static CliffordOp phase_gate(int q) { return {Kind::phase_gate, q, 0}; }
    static CliffordOp cnot(int control, int target) {
        return {Kind::cnot, control, target};
    }
};

/// Returns U p U^dagger for the named Clifford gate.
inline PauliString pauli_conjugate(const PauliString& p, const CliffordOp& g) {
    PauliString out = p;
    switch (g.kind) {
        case CliffordOp::Kind::hadamard: out.conjugate_hadamard(g.q0); break;
        case CliffordOp::Kind::phase_gate:
            out.conjugate_phase_gate(g.q0);
            break;
        case CliffordOp::Kind::cnot: out.conjugate_cnot(g.q0, g.q1); break;
    }
    return out;
}

/// Conjugates through a gate list in time order:
/// returns (U_n ... U_1) p (U_n ... U_1)^dagger.
inline PauliString pauli_conjugate(const PauliString& p,
                                   const std::vector<CliffordOp>& gates) {
    PauliString out = p;
    for (const CliffordOp& g : gates) out = pauli_conjugate(out, g);
    return out;
}

} // namespace tessera
