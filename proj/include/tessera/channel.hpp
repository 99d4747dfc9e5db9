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

#include "tessera/pauli.hpp"
#include "tessera/state.hpp"

namespace tessera {

/// Trace-preserving Kraus channel: sum_k K^dag K = I within 1e-9.
class KrausChannel {
  public:
    explicit KrausChannel(std::vector<Eigen::MatrixXcd> ops, double tol = 1e-9)
        : ops_(std::move(ops)) {
        if (ops_.empty())
            throw std::invalid_argument("KrausChannel: no operators");
        Eigen::Index dim = ops_.front().rows();
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto& k : ops_) {
            if (k.rows() != dim || k.cols() != dim)
                throw std::invalid_argument("KrausChannel: mixed dimensions");
            sum += k.adjoint() * k;
        }
        Eigen::MatrixXcd err =
            sum - Eigen::MatrixXcd::Identity(dim, dim);
        if (err.cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("KrausChannel: not trace preserving");
    }

    int dim() const { return static_cast<int>(ops_.front().rows()); }
    const std::vector<Eigen::MatrixXcd>& operators() const { return ops_; }

    bool is_identity(double tol = 1e-12) const {
        if (ops_.size() != 1) return false;
        return distance_up_to_global_phase(
                   Eigen::MatrixXcd::Identity(dim(), dim()), ops_[0]) < tol;
    }

    /// Channel equal to applying `this` first, then `later`.
    KrausChannel then(const KrausChannel& later) const {
        if (later.dim() != dim())
            throw std::invalid_argument("KrausChannel::then: dim mismatch");
        std::vector<Eigen::MatrixXcd> prods;
        prods.reserve(ops_.size() * later.ops_.size());
        for (const auto& b : later.ops_)
            for (const auto& a : ops_) prods.push_back(b * a);
        return KrausChannel(std::move(prods));
    }

  private:
    std::vector<Eigen::MatrixXcd> ops_;
};

namespace detail {
inline DensityMatrix apply_kraus_embedded(const DensityMatrix& d,
                                          const KrausChannel& ch,
                                          std::span<const int> targets) {
    Eigen::MatrixXcd acc =
        Eigen::MatrixXcd::Zero(d.dim(), d.dim());
    for (const auto& k : ch.operators()) {
        Eigen::MatrixXcd full = embed_op(k, targets, d.n_qubits());
        acc += full * d.matrix() * full.adjoint();
    }
    // Trusted path: channel validation guarantees trace/Hermiticity.
    return DensityMatrix::from_matrix(d.n_qubits(), 0.5 * (acc + acc.adjoint()),
                                      1e-7);
}
} // namespace detail

inline DensityMatrix apply_channel(const DensityMatrix& d,
                                   const KrausChannel& ch,
                                   std::span<const int> targets) {
    if (ch.dim() != (1 << targets.size()))
        throw std::invalid_argument("apply_channel: dimension mismatch");
    return detail::apply_kraus_embedded(d, ch, targets);
}

inline DensityMatrix apply_channel(const DensityMatrix& d,
                                   const KrausChannel& ch,
                                   std::initializer_list<int> targets) {
    return apply_channel(d, ch, std::span<const int>(targets.begin(),
                                                     targets.size()));
}

namespace channel {

inline KrausChannel identity(int dim = 2) {
    return KrausChannel({Eigen::MatrixXcd::Identity(dim, dim)});
}

/// Amplitude damping with decay probability gamma.
inline KrausChannel amplitude_damping(double gamma) {
    if (gamma < 0 || gamma > 1)
        throw std::invalid_argument("amplitude_damping: gamma in [0,1]");
    Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1 - gamma);
    k1(0, 1) = std::sqrt(gamma);
    return KrausChannel({k0, k1});
}

/// Phase-flip dephasing: Z applied with probability p. Off-diagonals shrink
/// by (1 - 2p).
inline KrausChannel dephasing(double p) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("dephasing: p in [0,1]");
    Eigen::Matrix2cd k0 = std::sqrt(1 - p) * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd k1 = std::sqrt(p) * gate::pauli_z().cast<cx>();
    return KrausChannel({k0, k1});
}

/// n-qubit depolarizing channel rho -> (1-lambda) rho + lambda I/d, where
/// lambda is the mixing probability. The uniform Pauli form assigns weight
/// lambda/d^2 to every non-identity Pauli.
inline KrausChannel depolarizing(double lambda, int n_qubits) {
    if (lambda < 0 || lambda > 1)
        throw std::invalid_argument("depolarizing: lambda in [0,1]");
    const int d = 1 << n_qubits;
    const int count = d * d;
    std::vector<Eigen::MatrixXcd> ops;
    ops.reserve(count);
    for (int code = 0; code < count; ++code) {
        std::vector<PauliLetter> letters(n_qubits);
        int c = code;
        for (int q = n_qubits - 1; q >= 0; --q) {
            letters[q] = static_cast<PauliLetter>(c & 3);
            c >>= 2;
        }
        double w = (code == 0) ? 1.0 - lambda + lambda / count
                               : lambda / count;
        ops.push_back(std::sqrt(w) *
                      PauliString::from_letters(letters).matrix());
    }
    return KrausChannel(std::move(ops));
}

/// Mixing probability that produces an average gate error `r` on d = 2^n
/// dimensions: r = lambda (d-1)/d.
inline double mixing_for_gate_error(double r, int n_qubits) {
    const double d = double(1 << n_qubits);
    double lambda = r * d / (d - 1.0);
    if (lambda < 0 || lambda > 1)
        throw std::invalid_argument("mixing_for_gate_error: rate out of range");
    return lambda;
}

} // namespace channel

} // namespace tessera
