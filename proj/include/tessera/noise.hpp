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

#include "tessera/channel.hpp"
#include "tessera/circuit.hpp"

namespace tessera {

// ---------------------------------------------------------------------------
// Coherence parameters.
// ---------------------------------------------------------------------------

/// Per-qubit relaxation and echo coherence times. Defaults are the measured
/// device values.
struct QubitNoiseParams {
    std::array<double, 4> t1_us{33.0, 36.0, 31.0, 29.0};
    std::array<double, 4> t2_echo_us{17.0, 16.0, 18.0, 22.0};

    void validate() const {
        for (int q = 0; q < 4; ++q) {
            if (t1_us[q] <= 0 || t2_echo_us[q] <= 0)
                throw std::invalid_argument("QubitNoiseParams: nonpositive");
            if (t2_echo_us[q] > 2.0 * t1_us[q] + 1e-12)
                throw std::invalid_argument("QubitNoiseParams: T2 > 2 T1");
        }
    }
};

/// Free-evolution decoherence over `duration_ns`: amplitude damping with
/// gamma = 1 - exp(-t/T1) composed with pure dephasing at rate
/// 1/Tphi = 1/T2 - 1/(2 T1). The off-diagonal of a single qubit decays by
/// exactly exp(-t/T2), matching the closed-form free-evolution solution,
/// and composition over consecutive intervals equals the channel for the
/// summed interval.
inline KrausChannel decoherence_channel(double duration_ns, double t1_us,
                                        double t2_us) {
    if (duration_ns < 0)
        throw std::invalid_argument("decoherence_channel: negative duration");
    if (t1_us <= 0 || t2_us <= 0)
        throw std::invalid_argument("decoherence_channel: nonpositive time");
    if (t2_us > 2.0 * t1_us + 1e-12)
        throw std::invalid_argument("decoherence_channel: T2 > 2 T1");
    const double t_us = duration_ns * 1e-3;
    const double gamma = 1.0 - std::exp(-t_us / t1_us);
    const double inv_tphi =
        std::max(0.0, 1.0 / t2_us - 1.0 / (2.0 * t1_us));
    // Phase-flip probability giving an off-diagonal factor exp(-t/Tphi).
    const double p_flip = 0.5 * (1.0 - std::exp(-t_us * inv_tphi));
    return channel::amplitude_damping(gamma).then(channel::dephasing(p_flip));
}

// ---------------------------------------------------------------------------
// Readout.
// ---------------------------------------------------------------------------

/// Dispersive readout reduced to one scalar per shot: a Gaussian centered on
/// the class mean (-1 for |0>, +1 for |1>) with a shared width solved from
/// the target assignment fidelity. Binarization is a threshold test;
/// exactly-threshold values assign to 1.
struct ReadoutChannelModel {
    double mean0 = -1.0;
    double mean1 = +1.0;
    double sigma = 0.0;
    double threshold = 0.0;
    double target_assignment_fidelity = 1.0;

    int binarize(double value) const { return value >= threshold ? 1 : 0; }

    /// P(0|1) = P(1|0) for the symmetric Gaussian model.
    double implied_misassignment() const {
        if (sigma == 0.0) return 0.0;
        return 0.5 * std::erfc((mean1 - threshold) /
                               (sigma * std::numbers::sqrt2));
    }
};

inline double sample_readout(int bit, const ReadoutChannelModel& ch,
                             RngStream& rng) {
    double mean = bit ? ch.mean1 : ch.mean0;
    if (ch.sigma == 0.0) return mean;
    return mean + ch.sigma * rng.normal();
}

namespace detail {
/// Solves sigma so that 0.5 erfc(1/(sigma sqrt2)) equals the misassignment
/// probability eps (bisection; erfc is monotone).
inline double sigma_for_misassignment(double eps) {
    if (eps <= 0.0) return 0.0;
    if (eps >= 0.5)
        throw std::invalid_argument("readout: assignment fidelity <= 0.5");
    double lo = 0.0, hi = 40.0; // x = 1/sigma in units of sqrt2-less z-score
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double val = 0.5 * std::erfc(mid / std::numbers::sqrt2);
        (val > eps ? lo : hi) = mid;
    }
    return 1.0 / (0.5 * (lo + hi));
}
} // namespace detail

struct ReadoutModel {
    std::array<ReadoutChannelModel, 4> channels;

    static ReadoutModel from_assignment_fidelities(
        const std::array<double, 4>& fidelities) {
        ReadoutModel m;
        for (int c = 0; c < 4; ++c) {
            double f = fidelities[c];
            if (f <= 0.5 || f > 1.0)
                throw std::invalid_argument(
                    "ReadoutModel: fidelity must lie in (0.5, 1]");
            ReadoutChannelModel& ch = m.channels[c];
            ch.target_assignment_fidelity = f;
            ch.sigma = detail::sigma_for_misassignment(1.0 - f);
            ch.threshold = 0.5 * (ch.mean0 + ch.mean1);
            double implied = 1.0 - ch.implied_misassignment();
            if (std::abs(implied - f) > 1e-6)
                throw std::logic_error(
                    "ReadoutModel: sigma solve failed to reproduce target");
        }
        return m;
    }

    static ReadoutModel perfect() {
        return from_assignment_fidelities({1.0, 1.0, 1.0, 1.0});
    }

    /// Measured device assignment fidelities.
    static ReadoutModel paper() {
        return from_assignment_fidelities({0.9592, 0.9476, 0.9416, 0.9646});
    }
};

/// Symmetric assignment fidelity 1 - P(0|1)/2 - P(1|0)/2 estimated from
/// labeled binarized shots.
inline double assignment_fidelity(std::span<const int> assigned_given_0,
                                  std::span<const int> assigned_given_1) {
    if (assigned_given_0.empty() || assigned_given_1.empty())
        throw std::invalid_argument(
            "assignment_fidelity: both classes required");
    double p10 = 0, p01 = 0;
    for (int b : assigned_given_0) p10 += (b != 0);
    for (int b : assigned_given_1) p01 += (b == 0);
    p10 /= double(assigned_given_0.size());
    p01 /= double(assigned_given_1.size());
    return 1.0 - 0.5 * p01 - 0.5 * p10;
}

// ---------------------------------------------------------------------------
// Gate-error (depolarizing) parameters.
// ---------------------------------------------------------------------------

/// Average gate errors, converted to depolarizing mixing probabilities via
/// lambda = r d/(d-1) when channels are built. The ECR entries are indexed
/// by connectivity pair and are normally produced by the benchmarking-based
/// calibration in rb.hpp; the single-qubit entry comes from the benchmarked
/// 0.998 gate fidelity.
struct DepolarizingParams {
    std::array<double, 4> ecr_gate_error{0, 0, 0, 0};
    double oneq_gate_error = 0.0;

    void validate() const {
        for (double e : ecr_gate_error)
            if (e < 0 || e > 0.75)
                throw std::invalid_argument("DepolarizingParams: ecr error");
        if (oneq_gate_error < 0 || oneq_gate_error > 0.5)
            throw std::invalid_argument("DepolarizingParams: 1q error");
    }
};

// ---------------------------------------------------------------------------
// Full model and circuit application.
// ---------------------------------------------------------------------------

struct NoiseModel {
    QubitNoiseParams qubits;
    ReadoutModel readout = ReadoutModel::perfect();
    DepolarizingParams depol;
    bool decoherence_enabled = false;
    bool depolarizing_enabled = false;
    bool readout_noise_enabled = false;

    static NoiseModel off() { return NoiseModel{}; }

    bool unitary_path_noiseless() const {
        return !decoherence_enabled && !depolarizing_enabled;
    }
};

/// Evolves `rho` through the circuit: per moment, the ideal unitaries, then
/// decoherence on every qubit (spectators included) for the moment duration,
/// then depolarizing on each gate's qubits. Measurement ops are not applied
/// here; sampling is the caller's job.
inline DensityMatrix apply_noisy_circuit(const Circuit& c,
                                         const NoiseModel& noise,
                                         DensityMatrix rho) {
    if (rho.n_qubits() != c.n_qubits())
        throw std::invalid_argument("apply_noisy_circuit: dimension mismatch");
    noise.qubits.validate();
    noise.depol.validate();
    c.for_each_moment([&](std::span<const GateOp> ops, double duration) {
        for (const GateOp& op : ops) {
            if (op.kind == GateOp::Kind::measure ||
                op.kind == GateOp::Kind::barrier)
                continue;
            rho = apply_unitary(rho, op.unitary(), op.qubits);
        }
        if (noise.decoherence_enabled && duration > 0) {
            for (int q = 0; q < c.n_qubits(); ++q) {
                rho = apply_channel(
                    rho,
                    decoherence_channel(duration, noise.qubits.t1_us[q],
                                        noise.qubits.t2_echo_us[q]),
                    {q});
            }
        }
        if (noise.depolarizing_enabled) {
            for (const GateOp& op : ops) {
                if (op.kind == GateOp::Kind::ecr) {
                    int idx = *device_topology().pair_index(op.qubits[0],
                                                            op.qubits[1]);
                    double r = noise.depol.ecr_gate_error[idx];
                    if (r > 0)
                        rho = apply_channel(
                            rho,
                            channel::depolarizing(
                                channel::mixing_for_gate_error(r, 2), 2),
                            op.qubits);
                } else if (op.kind == GateOp::Kind::rotation ||
                           op.kind == GateOp::Kind::hadamard) {
                    double r = noise.depol.oneq_gate_error;
                    if (r > 0)
                        rho = apply_channel(
                            rho,
                            channel::depolarizing(
                                channel::mixing_for_gate_error(r, 1), 1),
                            op.qubits);
                }
            }
        }
    });
    return rho;
}

} // namespace tessera
