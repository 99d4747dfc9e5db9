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

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace tessera {

using cx = std::complex<double>;

/// Bit position convention: qubit 0 is the most significant bit of a basis
/// index, so for n qubits the bit of qubit q sits at shift (n - 1 - q).
inline int bit_of(int index, int qubit, int n_qubits) {
    return (index >> (n_qubits - 1 - qubit)) & 1;
}

inline int set_bit_of(int index, int qubit, int n_qubits, int value) {
    int shift = n_qubits - 1 - qubit;
    return (index & ~(1 << shift)) | ((value & 1) << shift);
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

inline void check_targets(std::span<const int> targets, int n_qubits) {
    for (size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits)
            throw std::invalid_argument("target qubit out of range");
        for (size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j])
                throw std::invalid_argument("repeated target qubit");
    }
}

/// Embeds a 2^k x 2^k operator acting on `targets` into the full
/// 2^n x 2^n space. targets[0] is the most significant qubit of the local
/// operator index.
inline Eigen::MatrixXcd embed_op(const Eigen::MatrixXcd& op,
                                 std::span<const int> targets, int n_qubits) {
    const int k = static_cast<int>(targets.size());
    const int local_dim = 1 << k;
    if (op.rows() != local_dim || op.cols() != local_dim)
        throw std::invalid_argument("embed_op: operator/target size mismatch");
    check_targets(targets, n_qubits);

    const int dim = 1 << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int row = 0; row < dim; ++row) {
        int local_row = 0;
        for (int j = 0; j < k; ++j)
            local_row |= bit_of(row, targets[j], n_qubits) << (k - 1 - j);
        for (int local_col = 0; local_col < local_dim; ++local_col) {
            cx v = op(local_row, local_col);
            if (v == cx{0.0, 0.0}) continue;
            int col = row;
            for (int j = 0; j < k; ++j)
                col = set_bit_of(col, targets[j], n_qubits,
                                 (local_col >> (k - 1 - j)) & 1);
            out(row, col) = v;
        }
    }
    return out;
}

/// Largest absolute element of (a - e^{i phi} b) after choosing the global
/// phase phi that aligns the largest-magnitude element of b with a.
inline double distance_up_to_global_phase(const Eigen::MatrixXcd& a,
                                          const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("distance_up_to_global_phase: shape");
    Eigen::Index pi = 0, pj = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (std::abs(b(i, j)) > best) {
                best = std::abs(b(i, j));
                pi = i;
                pj = j;
            }
    if (best < 1e-300) return a.cwiseAbs().maxCoeff();
    cx phase = a(pi, pj) / b(pi, pj);
    double mag = std::abs(phase);
    phase = (mag < 1e-300) ? cx{1, 0} : phase / mag;
    return (a - phase * b).cwiseAbs().maxCoeff();
}

/// Hermitian square root with eigenvalue clamping at zero; input is
/// symmetrized first so 1e-10-scale asymmetry is tolerated.
inline Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() *
           es.eigenvectors().adjoint();
}

} // namespace tessera
