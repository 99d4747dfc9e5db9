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

#include "tessera/state.hpp"

namespace tessera {

/// Uhlmann state fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
///
/// Inputs are Hermitian-symmetrized and eigenvalues are clamped at zero
/// before the square roots, so states valid within 1e-10-scale numerical
/// noise are accepted.
inline double state_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("state_fidelity: dimension mismatch");
    Eigen::MatrixXcd sa = sqrt_psd(a.matrix());
    Eigen::MatrixXcd inner = sa * b.matrix() * sa;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
    double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return tr * tr;
}

inline double state_fidelity(const DensityMatrix& a, const StateVector& b) {
    return state_fidelity(a, DensityMatrix::from_state(b));
}

inline double state_fidelity(const StateVector& a, const StateVector& b) {
    return state_fidelity(DensityMatrix::from_state(a),
                          DensityMatrix::from_state(b));
}

} // namespace tessera
