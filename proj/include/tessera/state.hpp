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

#include <utility>

#include "tessera/gates.hpp"
#include "tessera/rng.hpp"

namespace tessera {

namespace detail {
inline void check_qubit_count(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("state: qubit count must be 1..4");
}
} // namespace detail

/// Pure state of 1..4 qubits. Qubit 0 is the most significant bit of the
/// basis index.
class StateVector {
  public:
    explicit StateVector(int n_qubits, int basis_index = 0)
        : n_(n_qubits), amps_(Eigen::VectorXcd::Zero(1 << n_qubits)) {
        detail::check_qubit_count(n_qubits);
        if (basis_index < 0 || basis_index >= amps_.size())
            throw std::invalid_argument("StateVector: basis index");
        amps_(basis_index) = 1.0;
    }

    static StateVector from_amplitudes(int n_qubits, Eigen::VectorXcd amps) {
        detail::check_qubit_count(n_qubits);
        if (amps.size() != (1 << n_qubits))
            throw std::invalid_argument("StateVector: length != 2^n");
        if (std::abs(amps.squaredNorm() - 1.0) > 1e-10)
            throw std::invalid_argument("StateVector: not normalized");
        StateVector s(n_qubits);
        s.amps_ = std::move(amps);
        return s;
    }

    int n_qubits() const { return n_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    cx amplitude(int i) const { return amps_(i); }

    /// Born probabilities over computational basis outcomes.
    Eigen::VectorXd probabilities() const {
        return amps_.cwiseAbs2();
    }

  private:
    friend StateVector apply_unitary(const StateVector&, const UnitaryMatrix&,
                                     std::span<const int>);
    friend struct MeasureResultSv;
    friend std::pair<StateVector, double> collapse(const StateVector&, int,
                                                   int);
    int n_;
    Eigen::VectorXcd amps_;
};

/// Mixed state of 1..4 qubits; Hermitian, unit trace, PSD within tolerance.
class DensityMatrix {
  public:
    explicit DensityMatrix(int n_qubits, int basis_index = 0)
        : n_(n_qubits),
          m_(Eigen::MatrixXcd::Zero(1 << n_qubits, 1 << n_qubits)) {
        detail::check_qubit_count(n_qubits);
        m_(basis_index, basis_index) = 1.0;
    }

    static DensityMatrix from_matrix(int n_qubits, Eigen::MatrixXcd m,
                                     double psd_tol = 1e-9) {
        detail::check_qubit_count(n_qubits);
        int dim = 1 << n_qubits;
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("DensityMatrix: shape != 2^n");
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        if (std::abs(m.trace().real() - 1.0) > 1e-10 ||
            std::abs(m.trace().imag()) > 1e-10)
            throw std::invalid_argument("DensityMatrix: trace != 1");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -psd_tol)
            throw std::invalid_argument("DensityMatrix: negative eigenvalue");
        DensityMatrix d(n_qubits);
        d.m_ = std::move(m);
        return d;
    }

    static DensityMatrix from_state(const StateVector& s) {
        DensityMatrix d(s.n_qubits());
        d.m_ = s.amplitudes() * s.amplitudes().adjoint();
        return d;
    }

    int n_qubits() const { return n_; }
    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return m_; }

    Eigen::VectorXd probabilities() const {
        return m_.diagonal().real();
    }

    double purity() const { return (m_ * m_).trace().real(); }

  private:
    friend DensityMatrix apply_unitary(const DensityMatrix&,
                                       const UnitaryMatrix&,
                                       std::span<const int>);
    friend DensityMatrix apply_kraus_ops(
        const DensityMatrix&, const std::vector<Eigen::MatrixXcd>&,
        std::span<const int>);
    friend DensityMatrix partial_trace(const DensityMatrix&,
                                       std::span<const int>);
    friend std::pair<DensityMatrix, double> collapse(const DensityMatrix&,
                                                     int, int);
    int n_;
    Eigen::MatrixXcd m_;
};

inline StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u,
                                 std::span<const int> targets) {
    if (u.dim() != (1 << targets.size()))
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    Eigen::MatrixXcd full = embed_op(u.matrix(), targets, s.n_qubits());
    StateVector out = s;
    out.amps_ = full * s.amps_;
    return out;
}

inline DensityMatrix apply_unitary(const DensityMatrix& d,
                                   const UnitaryMatrix& u,
                                   std::span<const int> targets) {
    if (u.dim() != (1 << targets.size()))
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    Eigen::MatrixXcd full = embed_op(u.matrix(), targets, d.n_qubits());
    DensityMatrix out = d;
    out.m_ = full * d.m_ * full.adjoint();
    return out;
}

inline StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u,
                                 std::initializer_list<int> targets) {
    return apply_unitary(s, u, std::span<const int>(targets.begin(),
                                                    targets.size()));
}
inline DensityMatrix apply_unitary(const DensityMatrix& d,
                                   const UnitaryMatrix& u,
                                   std::initializer_list<int> targets) {
    return apply_unitary(d, u, std::span<const int>(targets.begin(),
                                                    targets.size()));
}

/// Reduced state over `keep` (order of `keep` fixes the output qubit order).
inline DensityMatrix partial_trace(const DensityMatrix& d,
                                   std::span<const int> keep) {
    if (keep.empty())
        throw std::invalid_argument("partial_trace: keep list empty");
    check_targets(keep, d.n_qubits());
    const int n = d.n_qubits();
    const int k = static_cast<int>(keep.size());
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        bool kept = false;
        for (int t : keep) kept |= (t == q);
        if (!kept) traced.push_back(q);
    }
    const int out_dim = 1 << k;
    const int tr_dim = 1 << static_cast<int>(traced.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
    for (int i = 0; i < out_dim; ++i) {
        for (int j = 0; j < out_dim; ++j) {
            cx sum = 0;
            for (int t = 0; t < tr_dim; ++t) {
                int row = 0, col = 0;
                for (int b = 0; b < k; ++b) {
                    row = set_bit_of(row, keep[b], n, (i >> (k - 1 - b)) & 1);
                    col = set_bit_of(col, keep[b], n, (j >> (k - 1 - b)) & 1);
                }
                for (size_t b = 0; b < traced.size(); ++b) {
                    int bitv = (t >> (traced.size() - 1 - b)) & 1;
                    row = set_bit_of(row, traced[b], n, bitv);
                    col = set_bit_of(col, traced[b], n, bitv);
                }
                sum += d.matrix()(row, col);
            }
            out(i, j) = sum;
        }
    }
    DensityMatrix result(k);
    result.m_ = out;
    return result;
}

inline DensityMatrix partial_trace(const DensityMatrix& d,
                                   std::initializer_list<int> keep) {
    return partial_trace(d, std::span<const int>(keep.begin(), keep.size()));
}

inline std::pair<StateVector, double> collapse(const StateVector& s,
                                               int qubit, int bit) {
    const int n = s.n_qubits();
    double p = 0;
    for (int i = 0; i < s.dim(); ++i)
        if (bit_of(i, qubit, n) == bit) p += std::norm(s.amplitude(i));
    StateVector out = s;
    if (p < 1e-300) throw std::runtime_error("collapse: zero probability");
    for (int i = 0; i < s.dim(); ++i)
        out.amps_(i) = (bit_of(i, qubit, n) == bit)
                           ? s.amplitude(i) / std::sqrt(p)
                           : cx{0, 0};
    return {out, p};
}

inline std::pair<DensityMatrix, double> collapse(const DensityMatrix& d,
                                                 int qubit, int bit) {
    const int n = d.n_qubits();
    double p = 0;
    for (int i = 0; i < d.dim(); ++i)
        if (bit_of(i, qubit, n) == bit) p += d.matrix()(i, i).real();
    if (p < 1e-300) throw std::runtime_error("collapse: zero probability");
    DensityMatrix out = d;
    for (int i = 0; i < d.dim(); ++i)
        for (int j = 0; j < d.dim(); ++j)
            out.m_(i, j) = (bit_of(i, qubit, n) == bit &&
                            bit_of(j, qubit, n) == bit)
                               ? d.matrix()(i, j) / p
                               : cx{0, 0};
    return {out, p};
}

/// Projective measurement of one qubit in the computational basis.
/// Returns the sampled bit, the renormalized post-measurement state, and the
/// Born probability of the sampled outcome.
template <typename State>
struct MeasureResult {
    int bit;
    State state;
    double probability;
};

template <typename State>
MeasureResult<State> measure_qubit(const State& s, int qubit,
                                   RngStream& rng) {
    if (qubit < 0 || qubit >= s.n_qubits())
        throw std::invalid_argument("measure_qubit: qubit out of range");
    const int n = s.n_qubits();
    Eigen::VectorXd probs = s.probabilities();
    double p1 = 0;
    for (int i = 0; i < probs.size(); ++i)
        if (bit_of(i, qubit, n) == 1) p1 += probs(i);
    int bit = (rng.uniform() < p1) ? 1 : 0;
    auto [state, p] = collapse(s, qubit, bit);
    return {bit, std::move(state), p};
}

} // namespace tessera
