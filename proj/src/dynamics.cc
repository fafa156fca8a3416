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

#include "rksim/dynamics.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "rksim/observables.h"
#include "rksim/pauli.h"
#include "rksim/simulator.h"

namespace rksim {

ExactEvolver::ExactEvolver(const Eigen::MatrixXd &h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("Hamiltonian must be square");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
}

Eigen::VectorXcd ExactEvolver::evolve(const Eigen::VectorXcd &psi0, double t) const {
    if (psi0.size() != eigenvalues_.size()) {
        throw std::invalid_argument("state dimension does not match the Hamiltonian");
    }
    if (t < 0.0) {
        throw std::invalid_argument("evolution time must be >= 0");
    }
    Eigen::VectorXcd coeffs = eigenvectors_.transpose().cast<std::complex<double>>() * psi0;
    for (Eigen::Index k = 0; k < coeffs.size(); k++) {
        coeffs[k] *= std::exp(std::complex<double>(0.0, -eigenvalues_[k] * t));
    }
    return eigenvectors_.cast<std::complex<double>>() * coeffs;
}

Eigen::VectorXcd evolve_exact(const EffectiveHamiltonian &h, double t) {
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(h.dim()));
    psi0[0] = 1.0;
    return ExactEvolver(h.matrix).evolve(psi0, t);
}

size_t grid_steps(double dt, double t_max) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time step must be positive");
    }
    return static_cast<size_t>(std::floor(t_max / dt + 1e-9));
}

double trotter_error(size_t n_plaquettes, double lambda, double dt, double t_max, TrotterMode mode) {
    auto h = build_effective_hamiltonian(n_plaquettes, 1.0, lambda);
    auto decomposition = decompose(embed(h));
    auto step = synthesize_trotter(decomposition, dt, 1, mode);
    ExactEvolver exact(h.matrix);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(h.dim()));
    psi0[0] = 1.0;

    StateVector psi = StateVector::basis(decomposition.qubits, 0);
    double worst = 0.0;
    size_t steps = grid_steps(dt, t_max);
    for (size_t k = 0; k <= steps; k++) {
        double t = static_cast<double>(k) * dt;
        double f_exact = expect_F(probabilities(exact.evolve(psi0, t)), h.basis).value;
        double f_trotter = expect_F(psi.probabilities(), h.basis).value;
        worst = std::max(worst, std::abs(f_trotter - f_exact));
        psi = run_ideal(step, psi);
    }
    return worst;
}

}  // namespace rksim
