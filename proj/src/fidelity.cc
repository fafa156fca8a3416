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

#include "rksim/fidelity.h"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace rksim {

namespace {

using cd = std::complex<double>;

Eigen::Index vec_index(Eigen::Index row, Eigen::Index col, Eigen::Index dim) {
    return col * dim + row;
}

Eigen::MatrixXcd rzz(double theta) {
    return Gate{GateKind::ScaledRZZ, theta, 0, 1}.matrix();
}

}  // namespace

Superoperator unitary_superoperator(const Eigen::MatrixXcd &u) {
    // vec(U rho U^dagger) = (conj(U) (x) U) vec(rho)
    Eigen::Index d = u.rows();
    Superoperator s(d * d, d * d);
    Eigen::MatrixXcd uc = u.conjugate();
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            s.block(a * d, b * d, d, d) = uc(a, b) * u;
        }
    }
    return s;
}

Superoperator noisy_channel(const Circuit &c, const NoiseModel &noise) {
    auto d = static_cast<Eigen::Index>(size_t{1} << c.qubits());
    Superoperator s(d * d, d * d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
            e(i, j) = 1.0;
            propagate_noisy(e, c.qubits(), c, noise);
            s.col(vec_index(i, j, d)) = Eigen::Map<Eigen::VectorXcd>(e.data(), d * d);
        }
    }
    return s;
}

void check_cptp(const Superoperator &channel) {
    auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(channel.rows()))));
    if (d * d != channel.rows() || channel.rows() != channel.cols()) {
        throw std::invalid_argument("superoperator has the wrong shape");
    }
    Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            Eigen::Map<const Eigen::MatrixXcd> image(channel.col(vec_index(i, j, d)).data(), d, d);
            cd trace = image.trace();
            cd expected = i == j ? cd{1.0, 0.0} : cd{0.0, 0.0};
            if (std::abs(trace - expected) > 1e-8) {
                throw std::invalid_argument("channel is not trace preserving");
            }
            choi.block(i * d, j * d, d, d) = image;
        }
    }
    Eigen::MatrixXcd herm = 0.5 * (choi + choi.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        throw std::invalid_argument("channel is not completely positive");
    }
}

double process_fidelity(const Eigen::MatrixXcd &ideal, const Superoperator &channel) {
    auto d = static_cast<double>(ideal.rows());
    Superoperator target = unitary_superoperator(ideal);
    return (target.adjoint() * channel).trace().real() / (d * d);
}

double average_gate_fidelity(const Eigen::MatrixXcd &ideal, const Superoperator &channel) {
    check_cptp(channel);
    auto d = static_cast<double>(ideal.rows());
    return (d * process_fidelity(ideal, channel) + 1.0) / (d + 1.0);
}

Circuit rzz_native_circuit(double theta) {
    Circuit c(2);
    c.append({GateKind::CNOT, 0.0, 0, 1});
    c.append({GateKind::RZ, theta, 1});
    c.append({GateKind::CNOT, 0.0, 0, 1});
    return c;
}

Circuit rzz_scaled_circuit(double theta) {
    Circuit c(2);
    c.append({GateKind::H, 0.0, 1});
    c.append({GateKind::ScaledRZX, theta, 0, 1});
    c.append({GateKind::H, 0.0, 1});
    return c;
}

RzzFidelity compare_rzz_fidelity(double theta, const NoiseModel &noise) {
    noise.validate();
    Eigen::MatrixXcd target = rzz(theta);
    return RzzFidelity{
        theta,
        average_gate_fidelity(target, noisy_channel(rzz_native_circuit(theta), noise)),
        average_gate_fidelity(target, noisy_channel(rzz_scaled_circuit(theta), noise)),
    };
}

}  // namespace rksim
