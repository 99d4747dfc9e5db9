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

#include <array>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "tessera/gates.hpp"

namespace tessera {

/// Qubit roles on the 2x2 device: Q1/Q3 carry the code word, Q2 checks bit
/// (ZZ) parity, Q4 checks phase (XX) parity. Qubits are indexed 0..3 for
/// Q1..Q4.
enum class QubitRole { code, z_syndrome, x_syndrome };

struct DeviceTopology {
    // Native ECR direction is fixed per pair: (control, target).
    std::array<std::pair<int, int>, 4> ecr_pairs{
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    std::array<QubitRole, 4> roles{QubitRole::code, QubitRole::z_syndrome,
                                   QubitRole::code, QubitRole::x_syndrome};
    // Cross-resonance pulse length tau per pair; total ECR time is
    // 2*tau + oneq_gate_ns (the echo pi pulse).
    std::array<double, 4> ecr_tau_ns{400.0, 360.0, 440.0, 190.0};
    double oneq_gate_ns = 53.3;

    std::optional<int> pair_index(int control, int target) const {
        for (size_t i = 0; i < ecr_pairs.size(); ++i)
            if (ecr_pairs[i].first == control && ecr_pairs[i].second == target)
                return static_cast<int>(i);
        return std::nullopt;
    }

    double ecr_duration_ns(int pair_idx) const {
        return 2.0 * ecr_tau_ns[pair_idx] + oneq_gate_ns;
    }
};

inline const DeviceTopology& device_topology() {
    static const DeviceTopology t{};
    return t;
}

/// The fixed two-qubit unitary adopted for the native echoed
/// cross-resonance gate: ECR = ZX_90 * (X (x) I), i.e. the ZX interaction
/// propagator composed with the echo pi pulse on the control. The convention
/// is pinned by the requirement that the CNOT synthesis in detection.hpp
/// reproduces the canonical CNOT up to global phase.
inline const UnitaryMatrix& ecr_matrix() {
    static const UnitaryMatrix u = [] {
        Eigen::MatrixXcd zx90 =
            gate::zx_interaction(std::numbers::pi / 2).matrix();
        Eigen::MatrixXcd xi =
            kron(gate::pauli_x(), Eigen::Matrix2cd::Identity());
        return UnitaryMatrix(zx90 * xi);
    }();
    return u;
}

struct GateOp {
    enum class Kind { rotation, hadamard, ecr, measure, barrier };

    Kind kind;
    std::vector<int> qubits;     // rotation/hadamard/measure: 1; ecr: {c, t}
    Eigen::Vector3d axis{0, 0, 1}; // rotation only, unit norm
    double theta = 0.0;          // rotation only
    int channel = -1;            // measure only (readout channel index)
    double duration_ns = 0.0;

    static GateOp rotation(int q, const Eigen::Vector3d& ax, double theta,
                           double duration_ns) {
        if (std::abs(ax.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("GateOp: rotation axis not unit");
        GateOp op{Kind::rotation, {q}, ax, theta, -1, duration_ns};
        return op;
    }
    static GateOp hadamard(int q, double duration_ns) {
        return GateOp{Kind::hadamard, {q}, {0, 0, 1}, 0, -1, duration_ns};
    }
    static GateOp ecr(int control, int target, double duration_ns) {
        if (!device_topology().pair_index(control, target))
            throw std::invalid_argument("GateOp: ECR pair not in device");
        return GateOp{Kind::ecr, {control, target}, {0, 0, 1}, 0, -1,
                      duration_ns};
    }
    static GateOp measure(int q, int channel, double duration_ns = 0.0) {
        return GateOp{Kind::measure, {q}, {0, 0, 1}, 0, channel, duration_ns};
    }
    static GateOp barrier(double duration_ns = 0.0) {
        return GateOp{Kind::barrier, {}, {0, 0, 1}, 0, -1, duration_ns};
    }

    /// Local unitary of the op (rotation: 2x2, hadamard: 2x2, ecr: 4x4).
    UnitaryMatrix unitary() const {
        switch (kind) {
            case Kind::rotation: return gate::rotation(axis, theta);
            case Kind::hadamard: return gate::hadamard();
            case Kind::ecr: return ecr_matrix();
            default:
                throw std::invalid_argument("GateOp: op has no unitary");
        }
    }
};

/// Timed sequence of native operations. Ops between barrier markers form a
/// moment: they act on disjoint qubits and run concurrently, and a moment's
/// wall time is the longest op inside it. Idle qubits decohere for the full
/// moment in the noisy path.
class Circuit {
  public:
    explicit Circuit(int n_qubits, std::string name = "")
        : n_(n_qubits), name_(std::move(name)) {
        if (n_qubits < 1 || n_qubits > 4)
            throw std::invalid_argument("Circuit: qubit count 1..4");
    }

    int n_qubits() const { return n_; }
    const std::string& name() const { return name_; }
    const std::vector<GateOp>& ops() const { return ops_; }

    void append(GateOp op) {
        for (int q : op.qubits)
            if (q < 0 || q >= n_)
                throw std::invalid_argument("Circuit: qubit out of range");
        if (op.duration_ns < 0)
            throw std::invalid_argument("Circuit: negative duration");
        ops_.push_back(std::move(op));
    }

    /// Total wall time: sum over moments of the longest op per moment.
    double total_duration_ns() const {
        double total = 0;
        for_each_moment([&](std::span<const GateOp>, double dur) {
            total += dur;
        });
        return total;
    }

    /// Invokes fn(ops_in_moment, moment_duration) for each moment in time
    /// order. Barriers delimit moments; a barrier with nonzero duration is a
    /// pure idle moment.
    void for_each_moment(
        const std::function<void(std::span<const GateOp>, double)>& fn) const {
        size_t start = 0;
        while (start < ops_.size()) {
            size_t end = start;
            double dur = 0;
            while (end < ops_.size() &&
                   ops_[end].kind != GateOp::Kind::barrier) {
                dur = std::max(dur, ops_[end].duration_ns);
                ++end;
            }
            if (end > start) fn({ops_.data() + start, end - start}, dur);
            if (end < ops_.size()) { // the barrier itself
                if (ops_[end].duration_ns > 0)
                    fn({ops_.data() + end, 0}, ops_[end].duration_ns);
                ++end;
            }
            start = end;
        }
    }

    int count_ecr() const {
        int n = 0;
        for (const auto& op : ops_)
            if (op.kind == GateOp::Kind::ecr) ++n;
        return n;
    }

    std::vector<GateOp> measurements() const {
        std::vector<GateOp> m;
        for (const auto& op : ops_)
            if (op.kind == GateOp::Kind::measure) m.push_back(op);
        return m;
    }

  private:
    int n_;
    std::string name_;
    std::vector<GateOp> ops_;
};

/// Composite unitary of the circuit's gate ops (measurements must not be
/// present unless `ignore_measurements`).
inline Eigen::MatrixXcd circuit_unitary(const Circuit& c,
                                        bool ignore_measurements = false) {
    const int dim = 1 << c.n_qubits();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& op : c.ops()) {
        switch (op.kind) {
            case GateOp::Kind::barrier: break;
            case GateOp::Kind::measure:
                if (!ignore_measurements)
                    throw std::invalid_argument(
                        "circuit_unitary: circuit contains measurements");
                break;
            default:
                u = embed_op(op.unitary().matrix(), op.qubits, c.n_qubits()) *
                    u;
        }
    }
    return u;
}

// ---------------------------------------------------------------------------
// Text serialization: one op per line, doubles printed with 17 significant
// digits so parse(serialize(c)) reproduces the exact bits.
// ---------------------------------------------------------------------------

namespace detail {
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace detail

inline std::string circuit_to_text(const Circuit& c) {
    std::string out = "CIRCUIT " + std::to_string(c.n_qubits());
    if (!c.name().empty()) out += " " + c.name();
    out += "\n";
    for (const auto& op : c.ops()) {
        switch (op.kind) {
            case GateOp::Kind::rotation:
                out += "ROT " + std::to_string(op.qubits[0]) + " " +
                       detail::fmt_g17(op.axis.x()) + " " +
                       detail::fmt_g17(op.axis.y()) + " " +
                       detail::fmt_g17(op.axis.z()) + " " +
                       detail::fmt_g17(op.theta) + " " +
                       detail::fmt_g17(op.duration_ns) + "\n";
                break;
            case GateOp::Kind::hadamard:
                out += "H " + std::to_string(op.qubits[0]) + " " +
                       detail::fmt_g17(op.duration_ns) + "\n";
                break;
            case GateOp::Kind::ecr:
                out += "ECR " + std::to_string(op.qubits[0]) + " " +
                       std::to_string(op.qubits[1]) + " " +
                       detail::fmt_g17(op.duration_ns) + "\n";
                break;
            case GateOp::Kind::measure:
                out += "MEASURE " + std::to_string(op.qubits[0]) + " " +
                       std::to_string(op.channel) + " " +
                       detail::fmt_g17(op.duration_ns) + "\n";
                break;
            case GateOp::Kind::barrier:
                out += "BARRIER " + detail::fmt_g17(op.duration_ns) + "\n";
                break;
        }
    }
    return out;
}

inline Circuit circuit_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("circuit_from_text: empty input");
    std::istringstream head(line);
    std::string tag;
    int n = 0;
    head >> tag >> n;
    if (tag != "CIRCUIT" || n < 1)
        throw std::invalid_argument("circuit_from_text: bad header");
    std::string name;
    std::getline(head >> std::ws, name);
    Circuit c(n, name);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "ROT") {
            int q;
            double nx, ny, nz, theta, dur;
            ls >> q >> nx >> ny >> nz >> theta >> dur;
            c.append(GateOp::rotation(q, {nx, ny, nz}, theta, dur));
        } else if (kind == "H") {
            int q;
            double dur;
            ls >> q >> dur;
            c.append(GateOp::hadamard(q, dur));
        } else if (kind == "ECR") {
            int a, b;
            double dur;
            ls >> a >> b >> dur;
            c.append(GateOp::ecr(a, b, dur));
        } else if (kind == "MEASURE") {
            int q, ch;
            double dur;
            ls >> q >> ch >> dur;
            c.append(GateOp::measure(q, ch, dur));
        } else if (kind == "BARRIER") {
            double dur;
            ls >> dur;
            c.append(GateOp::barrier(dur));
        } else {
            throw std::invalid_argument("circuit_from_text: unknown op " +
                                        kind);
        }
        if (ls.fail())
            throw std::invalid_argument("circuit_from_text: bad line: " +
                                        line);
    }
    return c;
}

} // namespace tessera
