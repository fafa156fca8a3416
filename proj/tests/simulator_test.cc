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

#include "rksim/simulator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rksim/pauli.h"
#include "rksim/reduction.h"

using namespace rksim;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

Circuit trotter_circuit(size_t n, double dt, size_t steps, TrotterMode mode) {
    auto d = decompose(embed(build_effective_hamiltonian(n, 1.0, 1.0)));
    return synthesize_trotter(d, dt, steps, mode);
}

Circuit bell_circuit() {
    Circuit c(2);
    c.append({GateKind::H, 0, 0});
    c.append({GateKind::CNOT, 0, 0, 1});
    return c;
}

// Every outcome count within 5 sigma of its multinomial mean.
void expect_counts_match(const Counts &counts, const std::vector<double> &probs) {
    double shots = static_cast<double>(counts.total());
    for (size_t k = 0; k < probs.size(); k++) {
        auto it = counts.histogram.find(k);
        double observed = it == counts.histogram.end() ? 0.0 : static_cast<double>(it->second);
        double sigma = std::sqrt(shots * probs[k] * (1 - probs[k]));
        EXPECT_LE(std::abs(observed - shots * probs[k]), 5 * sigma + 1e-9) << "outcome " << k;
    }
}

}  // namespace

TEST(state_vector, validation_and_basis) {
    EXPECT_THROW(StateVector(Eigen::VectorXcd::Ones(2)), std::invalid_argument);
    EXPECT_THROW(StateVector(Eigen::VectorXcd::Ones(3) / std::sqrt(3.0)), std::invalid_argument);
    auto psi = StateVector::basis(3, 5);
    EXPECT_EQ(psi.qubits(), 3u);
    EXPECT_EQ(psi.amplitudes()(5), cd(1, 0));
    EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
}

TEST(density_matrix, validation) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
    rho(0, 0) = 1.0;
    EXPECT_NO_THROW(DensityMatrix{rho});
    rho(0, 0) = 0.5;
    EXPECT_THROW(DensityMatrix{rho}, std::invalid_argument);
    rho(0, 0) = 1.5;
    rho(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{rho}, std::invalid_argument);
    Eigen::MatrixXcd skew = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
    skew(0, 1) = cd(0.1, 0);
    EXPECT_THROW(DensityMatrix{skew}, std::invalid_argument);
}

TEST(run_ideal, empty_circuit_is_identity) {
    auto psi = StateVector::basis(2, 3);
    EXPECT_EQ(run_ideal(Circuit(2), psi).amplitudes(), psi.amplitudes());
    EXPECT_THROW(run_ideal(Circuit(3), psi), std::invalid_argument);
}

TEST(run_ideal, bell_state) {
    auto psi = run_ideal(bell_circuit(), StateVector::basis(2, 0));
    EXPECT_NEAR(psi.amplitudes()(0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(psi.amplitudes()(3).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(run_ideal, matches_circuit_unitary) {
    auto c = trotter_circuit(6, 0.2, 2, TrotterMode::Scaled);
    auto psi = run_ideal(c, StateVector::basis(3, 0));
    Eigen::VectorXcd expected = circuit_unitary(c).col(0);
    EXPECT_LE((psi.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(noise_model, gate_errors) {
    NoiseModel noise;
    EXPECT_DOUBLE_EQ(noise.gate_error({GateKind::RZ, 0.3, 0}), noise.p1);
    EXPECT_DOUBLE_EQ(noise.gate_error({GateKind::H, 0, 0}), noise.p1);
    EXPECT_DOUBLE_EQ(noise.gate_error({GateKind::CNOT, 0, 0, 1}), noise.p2);
    EXPECT_DOUBLE_EQ(noise.gate_error({GateKind::ScaledRZZ, kPi / 2, 0, 1}), noise.p2);
    EXPECT_NEAR(noise.gate_error({GateKind::ScaledRZX, -0.2, 0, 1}),
                noise.p2 * pulse_duration_ratio(noise.pulse, 0.2), 1e-18);
    EXPECT_LT(noise.gate_error({GateKind::ScaledRZZ, 0.2, 0, 1}), noise.p2);
    EXPECT_THROW((NoiseModel{1.5}).validate(), std::invalid_argument);
    EXPECT_THROW((NoiseModel{0, 0, 0, 0}).validate(), std::invalid_argument);
}

TEST(apply_depolarizing, full_strength_mixes) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
    rho(0, 0) = 1.0;
    std::vector<size_t> support{1};
    apply_depolarizing(rho, 2, support, 1.0);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = expected(1, 1) = 0.5;
    EXPECT_LE((rho - expected).cwiseAbs().maxCoeff(), 1e-15);

    Eigen::MatrixXcd bell = DensityMatrix::from_state(run_ideal(bell_circuit(), StateVector::basis(2, 0))).matrix();
    std::vector<size_t> both{0, 1};
    apply_depolarizing(bell, 2, both, 1.0);
    EXPECT_LE((bell - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(run_density, noiseless_equals_ideal) {
    for (size_t n : {4, 6, 8}) {
        auto c = trotter_circuit(n, 0.1, 3, TrotterMode::Scaled);
        auto psi = run_ideal(c, StateVector::basis(c.qubits(), 0));
        auto rho = run_density(c, NoiseModel::noiseless(), DensityMatrix::from_state(StateVector::basis(c.qubits())));
        Eigen::MatrixXcd pure = psi.amplitudes() * psi.amplitudes().adjoint();
        EXPECT_LE((rho.matrix() - pure).cwiseAbs().maxCoeff(), 1e-10) << n;
        EXPECT_NEAR(rho.fidelity(psi), 1.0, 1e-10);
    }
}

TEST(run_density, noise_keeps_a_valid_state) {
    auto c = trotter_circuit(8, 0.1, 2, TrotterMode::Native);
    NoiseModel noise{0.01, 0.05, 0.0, 100};
    auto rho = run_density(c, noise, DensityMatrix::from_state(StateVector::basis(3)));
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
    auto psi = run_ideal(c, StateVector::basis(3));
    EXPECT_LT(rho.fidelity(psi), 1.0);
}

TEST(apply_readout_error, flips_bits_independently) {
    std::vector<double> probs{1.0, 0.0, 0.0, 0.0};
    auto out = apply_readout_error(probs, 2, 0.1);
    EXPECT_NEAR(out[0], 0.81, 1e-15);
    EXPECT_NEAR(out[1], 0.09, 1e-15);
    EXPECT_NEAR(out[2], 0.09, 1e-15);
    EXPECT_NEAR(out[3], 0.01, 1e-15);
    EXPECT_EQ(apply_readout_error(probs, 2, 0.0), probs);
}

TEST(rng, reproducible_streams) {
    auto a = task_rng(42, 7);
    auto b = task_rng(42, 7);
    auto c = task_rng(42, 8);
    double x = uniform01(a);
    EXPECT_EQ(x, uniform01(b));
    EXPECT_NE(x, uniform01(c));
    for (int k = 0; k < 1000; k++) {
        double u = uniform01(a);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(run_noisy, noiseless_sampling_matches_ideal) {
    auto c = trotter_circuit(6, 0.3, 4, TrotterMode::Native);
    NoiseModel noise = NoiseModel::noiseless();
    auto psi0 = StateVector::basis(3);
    auto rng = task_rng(1, 0);
    Counts counts = run_noisy(c, noise, psi0, rng);
    EXPECT_EQ(counts.total(), noise.shots);
    expect_counts_match(counts, run_ideal(c, psi0).probabilities());
}

TEST(run_noisy, full_two_qubit_depolarizing_is_uniform) {
    NoiseModel noise{0.0, 1.0, 0.0, 8192};
    auto rng = task_rng(2, 0);
    Counts counts = run_noisy(bell_circuit(), noise, StateVector::basis(2), rng);
    expect_counts_match(counts, {0.25, 0.25, 0.25, 0.25});
}

TEST(run_noisy, deterministic_given_seed) {
    auto c = trotter_circuit(4, 0.1, 5, TrotterMode::Scaled);
    NoiseModel noise;
    auto r1 = task_rng(9, 3);
    auto r2 = task_rng(9, 3);
    EXPECT_EQ(run_noisy(c, noise, StateVector::basis(2), r1).histogram,
              run_noisy(c, noise, StateVector::basis(2), r2).histogram);
}

TEST(counts, bitstrings_and_json) {
    Counts counts{3, {{1, 5}, {6, 2}}};
    EXPECT_EQ(counts.total(), 7u);
    EXPECT_EQ(counts.bitstring(1), "001");
    EXPECT_EQ(counts.bitstring(6), "110");
    EXPECT_EQ(counts.to_json()["110"], 2);
}
