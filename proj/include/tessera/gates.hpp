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

#include <cmath>
#include <numbers>

#include "tessera/linalg.hpp"

namespace tessera {

/// Validated unitary operator.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(Eigen::MatrixXcd m, double tol = 1e-10)
        : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() < 1)
            throw std::invalid_argument("UnitaryMatrix: not square");
        Eigen::MatrixXcd err =
            m_.adjoint() * m_ -
            Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
        if (err.cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("UnitaryMatrix: U^dag U != I");
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return m_; }

    UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint()); }

    /// Whether the operator factors as a tensor product of single-qubit
    /// unitaries (4x4 only). Decided by the operator Schmidt rank of the
    /// reshuffled matrix.
    bool is_product_two_qubit() const {
        if (dim() != 4)
            throw std::invalid_argument("is_product_two_qubit: dim != 4");
        Eigen::MatrixXcd r(4, 4); // R[(i,j),(k,l)] = U[(i,k),(j,l)]
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        r(2 * i + j, 2 * k + l) = m_(2 * i + k, 2 * j + l);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
        Eigen::VectorXd s = svd.singularValues();
        return s.tail(s.size() - 1).maxCoeff() < 1e-9 * s(0);
    }

  private:
    Eigen::MatrixXcd m_;
};

namespace gate {

inline Eigen::Matrix2cd pauli_x() {
    return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
}
inline Eigen::Matrix2cd pauli_y() {
    return (Eigen::Matrix2cd() << 0, cx(0, -1), cx(0, 1), 0).finished();
}
inline Eigen::Matrix2cd pauli_z() {
    return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
}

inline UnitaryMatrix identity(int dim = 2) {
    return UnitaryMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

inline UnitaryMatrix hadamard() {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    return UnitaryMatrix(h / std::numbers::sqrt2);
}

inline UnitaryMatrix x() { return UnitaryMatrix(pauli_x()); }
inline UnitaryMatrix y() { return UnitaryMatrix(pauli_y()); }
inline UnitaryMatrix z() { return UnitaryMatrix(pauli_z()); }

inline UnitaryMatrix phase_gate() {
    return UnitaryMatrix(
        (Eigen::Matrix2cd() << 1, 0, 0, cx(0, 1)).finished());
}

/// exp(-i theta/2 n.sigma) for a unit axis n.
inline UnitaryMatrix rotation(const Eigen::Vector3d& axis, double theta) {
    if (std::abs(axis.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("rotation: axis must be unit norm");
    Eigen::Matrix2cd n_sigma = axis.x() * pauli_x() + axis.y() * pauli_y() +
                               axis.z() * pauli_z();
    Eigen::Matrix2cd u =
        std::cos(theta / 2) * Eigen::Matrix2cd::Identity() -
        cx(0, 1) * std::sin(theta / 2) * n_sigma;
    return UnitaryMatrix(u);
}

inline UnitaryMatrix rx(double theta) {
    return rotation(Eigen::Vector3d::UnitX(), theta);
}
inline UnitaryMatrix ry(double theta) {
    return rotation(Eigen::Vector3d::UnitY(), theta);
}
inline UnitaryMatrix rz(double theta) {
    return rotation(Eigen::Vector3d::UnitZ(), theta);
}

/// CNOT in local ordering (control = most significant local qubit).
inline UnitaryMatrix cnot() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return UnitaryMatrix(m);
}

/// exp(-i theta/2 Z (x) X): the cross-resonance interaction propagator with
/// the control on the more significant local qubit.
inline UnitaryMatrix zx_interaction(double theta) {
    Eigen::Matrix4cd zx = kron(pauli_z(), pauli_x());
    Eigen::Matrix4cd u = std::cos(theta / 2) * Eigen::Matrix4cd::Identity() -
                         cx(0, 1) * std::sin(theta / 2) * zx;
    return UnitaryMatrix(u);
}

} // namespace gate

/// Axis-angle decomposition of a single-qubit unitary,
/// U = e^{i alpha} exp(-i theta/2 n.sigma) with theta in [0, pi].
struct AxisAngle {
    Eigen::Vector3d axis;
    double theta;
};

inline AxisAngle axis_angle(const Eigen::Matrix2cd& u) {
    cx det = u.determinant();
    cx root = std::sqrt(det);
    Eigen::Matrix2cd v = u / root; // SU(2) up to overall sign
    double c = 0.5 * v.trace().real();
    if (c < 0) { // flip the sign branch so theta lands in [0, pi]
        v = -v;
        c = -c;
    }
    c = std::min(1.0, std::max(-1.0, c));
    double theta = 2.0 * std::acos(c);
    double s = std::sin(theta / 2);
    if (s < 1e-12) return {Eigen::Vector3d::UnitZ(), 0.0};
    Eigen::Vector3d axis;
    axis.x() = -0.5 * (v * gate::pauli_x()).trace().imag() / s;
    axis.y() = -0.5 * (v * gate::pauli_y()).trace().imag() / s;
    axis.z() = -0.5 * (v * gate::pauli_z()).trace().imag() / s;
    double norm = axis.norm();
    if (norm < 1e-12) return {Eigen::Vector3d::UnitZ(), 0.0};
    return {axis / norm, theta};
}

} // namespace tessera
