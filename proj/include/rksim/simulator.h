// Copyright 2026 The rksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RKSIM_SIMULATOR_H
#define RKSIM_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "rksim/circuits.h"
#include "rksim/pulse.h"

namespace rksim {

/// Normalized pure state on Q qubits. Qubit 0 is the most significant index bit.
class StateVector {
   public:
    explicit StateVector(Eigen::VectorXcd amplitudes);

    /// Computational basis state |index>.
    static StateVector basis(size_t qubits, size_t index = 0);

    size_t qubits() const {
        return qubits_;
    }
    size_t dim() const {
        return static_cast<size_t>(amplitudes_.size());
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amplitudes_;
    }
    std::vector<double> probabilities() const;

    void apply(const Gate &gate);

   private:
    Eigen::VectorXcd amplitudes_;
    size_t qubits_;
};

/// Density operator on Q qubits: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    explicit DensityMatrix(Eigen::MatrixXcd rho);
    static DensityMatrix from_state(const StateVector &psi);

    size_t qubits() const {
        return qubits_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return rho_;
    }
    std::vector<double> probabilities() const;

    /// <psi| rho |psi>.
    double fidelity(const StateVector &psi) const;

   private:
    Eigen::MatrixXcd rho_;
    size_t qubits_;
};

/// Depolarizing gate noise plus symmetric readout bit flips.
struct NoiseModel {
    double p1 = 3e-4;
    double p2 = 8e-3;
    double p_readout = 1e-2;
    size_t shots = 8192;
    PulseCalibration pulse;

    static NoiseModel noiseless();

    void validate() const;

    /// Depolarizing probability after `gate`: p1 for single-qubit gates, p2 for CNOT,
    /// p2 * duration ratio for scaled cross-resonance gates.
    double gate_error(const Gate &gate) const;

    bool operator==(const NoiseModel &) const = default;
};

void to_json(nlohmann::json &j, const NoiseModel &noise);

/// Pulse angle in (0, pi/2] realizing a scaled two-qubit rotation by `theta`
/// (sign carried by the drive phase, multiples of pi by single-qubit frames).
double scaled_pulse_angle(double theta);

/// In-place local unitary on a state vector of `qubits` qubits.
void apply_gate(Eigen::Ref<Eigen::VectorXcd> psi, size_t qubits, const Gate &gate);

/// rho -> U rho U^dagger for the gate. Works on any operator, not only states.
void apply_gate(Eigen::MatrixXcd &rho, size_t qubits, const Gate &gate);

/// rho -> (1-p) rho + p (I/2^k (x) Tr_support rho).
void apply_depolarizing(Eigen::MatrixXcd &rho, size_t qubits, std::span<const size_t> support, double p);

/// Noisy gate-by-gate propagation of an arbitrary operator (linear in rho).
void propagate_noisy(Eigen::MatrixXcd &rho, size_t qubits, const Circuit &c, const NoiseModel &noise);

Eigen::MatrixXcd circuit_unitary(const Circuit &c);

StateVector run_ideal(const Circuit &c, const StateVector &psi0);

DensityMatrix run_density(const Circuit &c, const NoiseModel &noise, const DensityMatrix &rho0);

/// Histogram of measured computational basis indices.
struct Counts {
    size_t qubits = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;

    std::uint64_t total() const;
    /// Qubit 0 first.
    std::string bitstring(std::uint64_t index) const;
    nlohmann::json to_json() const;
};

/// Per-task generator derived from a root seed (splitmix64 mixing).
std::mt19937_64 task_rng(std::uint64_t root_seed, std::uint64_t task);

/// Uniform double in [0, 1) from the raw 64-bit stream; identical on every platform.
double uniform01(std::mt19937_64 &rng);

/// Outcome distribution after independent per-qubit readout flips.
std::vector<double> apply_readout_error(std::span<const double> probs, size_t qubits, double p_readout);

Counts sample_counts(std::span<const double> probs, size_t qubits, size_t shots, std::mt19937_64 &rng);

/// Density-matrix run followed by `noise.shots` noisy computational-basis measurements.
Counts run_noisy(const Circuit &c, const NoiseModel &noise, const StateVector &psi0, std::mt19937_64 &rng);

}  // namespace rksim

#endif
