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

#include <optional>

#include "tessera/circuit.hpp"
#include "tessera/pauli.hpp"

namespace tessera {

// ---------------------------------------------------------------------------
// Syndrome vocabulary.
//
// A shot's syndrome bin is (M2 bit, M4 bit). Q4 is measured after a
// Hadamard, so M4 low means "+". Bins are indexed m2 + 2*m4, i.e.
// {0+, 1+, 0-, 1-}, which is also the (00, 10, 01, 11) order of the
// two-bit syndrome labels (first bit = bit-flip check, second = phase-flip
// check).
// ---------------------------------------------------------------------------

enum class SyndromeBin : int {
    zero_plus = 0,  // 00: no error
    one_plus = 1,   // 10: bit flip
    zero_minus = 2, // 01: phase flip
    one_minus = 3,  // 11: both
};

inline SyndromeBin bin_from_bits(int m2, int m4) {
    return static_cast<SyndromeBin>((m2 & 1) + 2 * (m4 & 1));
}
inline int bin_m2(SyndromeBin b) { return static_cast<int>(b) & 1; }
inline int bin_m4(SyndromeBin b) { return static_cast<int>(b) >> 1; }

/// Display label, e.g. "0+".
inline std::string bin_label(SyndromeBin b) {
    static const char* names[4] = {"0+", "1+", "0-", "1-"};
    return names[static_cast<int>(b)];
}

/// Two-bit syndrome label, e.g. "10".
inline std::string bin_bits_label(SyndromeBin b) {
    static const char* names[4] = {"00", "10", "01", "11"};
    return names[static_cast<int>(b)];
}

/// Syndrome produced by a definite single-qubit Pauli error on a code
/// qubit: I -> 00, X -> 10, Z -> 01, Y -> 11.
inline SyndromeBin syndrome_map(const PauliString& error) {
    if (error.n_qubits() != 1)
        throw std::invalid_argument("syndrome_map: single-qubit Pauli only");
    switch (error.letter(0)) {
        case PauliLetter::I: return SyndromeBin::zero_plus;
        case PauliLetter::X: return SyndromeBin::one_plus;
        case PauliLetter::Z: return SyndromeBin::zero_minus;
        case PauliLetter::Y: return SyndromeBin::one_minus;
    }
    throw std::logic_error("syndrome_map: unreachable");
}

// ---------------------------------------------------------------------------
// Error specification: a sequence of single-qubit pulses applied to Q1.
// ---------------------------------------------------------------------------

struct Pulse {
    Eigen::Vector3d axis;
    double theta;
};

/// Intentional error applied to the first code qubit, expressed as pulses in
/// time order. Composite labels like "X60Y120" follow the operator-product
/// convention: the rightmost factor acts first.
struct ErrorSpec {
    std::vector<Pulse> pulses;
    std::string label = "none";

    bool empty() const { return pulses.empty(); }

    static ErrorSpec none() { return ErrorSpec{}; }

    static ErrorSpec single(const Eigen::Vector3d& axis, double theta,
                            std::string label = "") {
        ErrorSpec e;
        e.pulses.push_back({axis, theta});
        e.label = std::move(label);
        return e;
    }

    /// Grammar: "none" | "I" | token+ where token is one of
    ///   X | Y | Z            pi rotation about that axis
    ///   X<deg> etc.          rotation by <deg> degrees (signed)
    ///   H                    Hadamard (pi about (x+z)/sqrt2)
    ///   R                    Y90 X90 composite
    /// Tokens are an operator product, so they are applied right to left.
    static ErrorSpec parse(const std::string& text) {
        ErrorSpec e;
        e.label = text;
        if (text.empty() || text == "none" || text == "I" || text == "id")
            return e;
        std::vector<Pulse> product; // in operator order (leftmost first)
        size_t i = 0;
        const double pi = std::numbers::pi;
        while (i < text.size()) {
            char axis_ch = text[i];
            if (axis_ch == 'H') {
                product.push_back(
                    {Eigen::Vector3d(1, 0, 1).normalized(), pi});
                ++i;
                continue;
            }
            if (axis_ch == 'R') {
                product.push_back({Eigen::Vector3d::UnitY(), pi / 2});
                product.push_back({Eigen::Vector3d::UnitX(), pi / 2});
                ++i;
                continue;
            }
            Eigen::Vector3d axis;
            if (axis_ch == 'X') axis = Eigen::Vector3d::UnitX();
            else if (axis_ch == 'Y') axis = Eigen::Vector3d::UnitY();
            else if (axis_ch == 'Z') axis = Eigen::Vector3d::UnitZ();
            else
                throw std::invalid_argument("ErrorSpec: bad token in \"" +
                                            text + "\"");
            ++i;
            size_t start = i;
            while (i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[i])) ||
                    text[i] == '-' || text[i] == '+' || text[i] == '.'))
                ++i;
            double deg = 180.0;
            if (i > start) deg = std::stod(text.substr(start, i - start));
            product.push_back({axis, deg * pi / 180.0});
        }
        e.pulses.assign(product.rbegin(), product.rend());
        return e;
    }

    /// Composite 2x2 unitary (later pulses multiply from the left).
    Eigen::Matrix2cd unitary() const {
        Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
        for (const Pulse& p : pulses)
            u = gate::rotation(p.axis, p.theta).matrix() * u;
        return u;
    }
};

// ---------------------------------------------------------------------------
// Native-gate synthesis.
// ---------------------------------------------------------------------------

/// ECR unitary for a connected (control, target) pair. The matrix is pair
/// independent; the pair argument is validated against device connectivity.
inline UnitaryMatrix ecr_unitary(int control, int target) {
    if (!device_topology().pair_index(control, target))
        throw std::invalid_argument("ecr_unitary: pair not in connectivity");
    return ecr_matrix();
}

namespace detail {

inline void end_moment(Circuit& c) { c.append(GateOp::barrier()); }

/// CNOT(control -> target) where the native ECR direction is
/// control -> target. Gate identity (up to a global phase):
/// CNOT = [(Rz(90) X) on control (x) Rx(90) on target] * ECR.
inline void append_direct_cnot(Circuit& c, int control, int target,
                               int pair_idx) {
    const auto& dev = device_topology();
    const double t1 = dev.oneq_gate_ns;
    c.append(GateOp::ecr(control, target, dev.ecr_duration_ns(pair_idx)));
    end_moment(c);
    c.append(GateOp::rotation(control, Eigen::Vector3d::UnitX(),
                              std::numbers::pi, t1));
    c.append(GateOp::rotation(target, Eigen::Vector3d::UnitX(),
                              std::numbers::pi / 2, t1));
    end_moment(c);
    c.append(GateOp::rotation(control, Eigen::Vector3d::UnitZ(),
                              std::numbers::pi / 2, t1));
    end_moment(c);
}

} // namespace detail

/// Appends a CNOT(control -> target) compiled to the native gate set. If the
/// required direction is not native, the available direction is used with
/// Hadamards on both qubits.
inline void append_cnot(Circuit& c, int control, int target) {
    const auto& dev = device_topology();
    const double t1 = dev.oneq_gate_ns;
    if (auto idx = dev.pair_index(control, target)) {
        detail::append_direct_cnot(c, control, target, *idx);
        return;
    }
    auto rev = dev.pair_index(target, control);
    if (!rev)
        throw std::invalid_argument("append_cnot: qubits not connected");
    c.append(GateOp::hadamard(control, t1));
    c.append(GateOp::hadamard(target, t1));
    detail::end_moment(c);
    detail::append_direct_cnot(c, target, control, *rev);
    c.append(GateOp::hadamard(control, t1));
    c.append(GateOp::hadamard(target, t1));
    detail::end_moment(c);
}

/// Standalone compiled CNOT on the four-qubit device.
inline Circuit cnot_from_ecr(int control, int target) {
    Circuit c(4, "cnot_" + std::to_string(control + 1) +
                     std::to_string(target + 1));
    append_cnot(c, control, target);
    return c;
}

// ---------------------------------------------------------------------------
// Detection circuit.
// ---------------------------------------------------------------------------

/// Builds the full error-detection sequence on qubits (Q1..Q4) = (0..3):
///
///   1. H on Q1 and Q4 (Q4 is the phase-parity ancilla, prepared in |+>).
///   2. CNOT(Q1->Q2), CNOT(Q2->Q3): entangles the code pair (Q1,Q3) through
///      the shared neighbour Q2; together with step 4 this doubles as the
///      bit-parity (ZZ) encoding. The swap that moves the Bell half from Q2
///      to Q3 is pre-simplified structurally, leaving five CNOTs in total.
///   3. The intentional error pulses on Q1.
///   4. CNOT(Q1->Q2): completes the ZZ parity write onto Q2.
///   5. CNOT(Q4->Q1), CNOT(Q4->Q3): phase-parity (XX) encoding onto Q4.
///   6. H on Q4 (basis change) alongside the tomography pre-rotations on the
///      code qubits, then measurement of all four channels.
///
/// With no error and no noise, the pre-measurement state is
/// (|00>+|11>)/sqrt2 on (Q1,Q3), |0> on Q2, |0> on Q4.
///
/// `tomo` holds the pre-rotations applied to (Q1, Q3); identity settings are
/// emitted as zero-angle pulses so the timing is the same for all settings.
inline Circuit build_detection_circuit(
    const ErrorSpec& error, int error_qubit = 0,
    const std::optional<std::pair<Pulse, Pulse>>& tomo = std::nullopt) {
    if (error_qubit != 0 && !error.empty())
        throw std::invalid_argument(
            "build_detection_circuit: error must act on Q1");
    const auto& dev = device_topology();
    const double t1 = dev.oneq_gate_ns;
    Circuit c(4, error.label.empty() ? "detect" : "detect_" + error.label);

    c.append(GateOp::hadamard(0, t1));
    c.append(GateOp::hadamard(3, t1));
    detail::end_moment(c);

    append_cnot(c, 0, 1);
    append_cnot(c, 1, 2);

    for (const Pulse& p : error.pulses) {
        c.append(GateOp::rotation(0, p.axis, p.theta, t1));
        detail::end_moment(c);
    }

    append_cnot(c, 0, 1);
    append_cnot(c, 3, 0);
    append_cnot(c, 3, 2);

    c.append(GateOp::hadamard(3, t1));
    if (tomo) {
        c.append(GateOp::rotation(0, tomo->first.axis, tomo->first.theta, t1));
        c.append(
            GateOp::rotation(2, tomo->second.axis, tomo->second.theta, t1));
    }
    detail::end_moment(c);

    for (int q = 0; q < 4; ++q) c.append(GateOp::measure(q, q));
    return c;
}

// ---------------------------------------------------------------------------
// Closed-form syndrome probabilities.
// ---------------------------------------------------------------------------

/// Ideal syndrome distribution (p00, p10, p01, p11) for a unitary error
/// exp(-i theta/2 n.sigma) on a code qubit:
///
///   p00 = cos^2(theta/2)
///   p10 = sin^2(theta/2) nx^2   (bit-flip bin)
///   p01 = sin^2(theta/2) nz^2   (phase-flip bin)
///   p11 = sin^2(theta/2) ny^2   (double-flip bin)
///
/// The assignment of the nz/ny weights follows the propagation identities
/// (a Z component flips only the phase check; a Y component flips both) and
/// is pinned by direct simulation of the detection circuit.
inline std::array<double, 4> ideal_syndrome_probs(const Eigen::Vector3d& axis,
                                                  double theta) {
    if (std::abs(axis.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("ideal_syndrome_probs: axis not unit");
    double c2 = std::cos(theta / 2), s2 = std::sin(theta / 2);
    double s_sq = s2 * s2;
    return {c2 * c2, s_sq * axis.x() * axis.x(), s_sq * axis.z() * axis.z(),
            s_sq * axis.y() * axis.y()};
}

/// Composite errors are reduced to an axis-angle pair first.
inline std::array<double, 4> ideal_syndrome_probs(const ErrorSpec& error) {
    if (error.empty()) return {1.0, 0.0, 0.0, 0.0};
    AxisAngle aa = axis_angle(error.unitary());
    if (aa.theta == 0.0) return {1.0, 0.0, 0.0, 0.0};
    return ideal_syndrome_probs(aa.axis, aa.theta);
}

} // namespace tessera
