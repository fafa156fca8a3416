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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rksim {

namespace {

using cd = std::complex<double>;

size_t qubits_of_dim(Eigen::Index dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension must be a power of two");
    }
    size_t q = 0;
    while ((Eigen::Index{1} << q) < dim) {
        q++;
    }
    return q;
}

void check_qubits(const Gate &gate, size_t qubits) {
    if (gate.q0 >= qubits || (gate.arity() == 2 && gate.q1 >= qubits)) {
        throw std::invalid_argument("gate acts outside the register");
    }
}

void apply_local(Eigen::Ref<Eigen::VectorXcd> psi, size_t qubits, const Eigen::MatrixXcd &u,
                 std::span<const size_t> targets) {
    auto dim = static_cast<size_t>(psi.size());
    if (targets.size() == 1) {
        size_t stride = size_t{1} << (qubits - 1 - targets[0]);
        for (size_t i = 0; i < dim; i++) {
            if (i & stride) {
                continue;
            }
            cd a = psi[i];
            cd b = psi[i | stride];
            psi[i] = u(0, 0) * a + u(0, 1) * b;
            psi[i | stride] = u(1, 0) * a + u(1, 1) * b;
        }
        return;
    }
    size_t s0 = size_t{1} << (qubits - 1 - targets[0]);
    size_t s1 = size_t{1} << (qubits - 1 - targets[1]);
    for (size_t i = 0; i < dim; i++) {
        if ((i & s0) || (i & s1)) {
            continue;
        }
        std::array<size_t, 4> idx{i, i | s1, i | s0, i | s0 | s1};
        std::array<cd, 4> in{psi[idx[0]], psi[idx[1]], psi[idx[2]], psi[idx[3]]};
        for (size_t r = 0; r < 4; r++) {
            cd acc{0.0, 0.0};
            for (size_t c = 0; c < 4; c++) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
            }
            psi[idx[r]] = acc;
        }
    }
}

/// U rho U^dagger for a local unitary.
void conjugate_local(Eigen::MatrixXcd &rho, size_t qubits, const Eigen::MatrixXcd &u, std::span<const size_t> targets) {
    for (Eigen::Index c = 0; c < rho.cols(); c++) {
        apply_local(rho.col(c), qubits, u, targets);
    }
    Eigen::MatrixXcd tmp = rho.adjoint();
    for (Eigen::Index c = 0; c < tmp.cols(); c++) {
        apply_local(tmp.col(c), qubits, u, targets);
    }
    rho = tmp.adjoint();
}

std::vector<size_t> support_of(const Gate &g) {
    if (g.arity() == 2) {
        return {g.q0, g.q1};
    }
    return {g.q0};
}

}  // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)), qubits_(qubits_of_dim(amplitudes_.size())) {
    if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector StateVector::basis(size_t qubits, size_t index) {
    auto dim = static_cast<Eigen::Index>(size_t{1} << qubits);
    if (static_cast<Eigen::Index>(index) >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(std::move(v));
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(dim());
    for (size_t i = 0; i < p.size(); i++) {
        p[i] = std::norm(amplitudes_[static_cast<Eigen::Index>(i)]);
    }
    return p;
}

void StateVector::apply(const Gate &gate) {
    apply_gate(amplitudes_, qubits_, gate);
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)), qubits_(qubits_of_dim(rho_.rows())) {
    if (rho_.rows() != rho_.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - cd{1.0, 0.0}) > 1e-10) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_state(const StateVector &psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

std::vector<double> DensityMatrix::probabilities() const {
    std::vector<double> p(static_cast<size_t>(rho_.rows()));
    for (size_t i = 0; i < p.size(); i++) {
        p[i] = std::max(0.0, rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
    }
    return p;
}

double DensityMatrix::fidelity(const StateVector &psi) const {
    if (psi.dim() != static_cast<size_t>(rho_.rows())) {
        throw std::invalid_argument("state and density matrix dimensions differ");
    }
    return (psi.amplitudes().adjoint() * rho_ * psi.amplitudes())(0, 0).real();
}

NoiseModel NoiseModel::noiseless() {
    NoiseModel n;
    n.p1 = 0.0;
    n.p2 = 0.0;
    n.p_readout = 0.0;
    return n;
}

void NoiseModel::validate() const {
    for (double p : {p1, p2, p_readout}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    pulse.validate();
}

double scaled_pulse_angle(double theta) {
    double a = std::abs(wrap_angle(theta));
    if (a > std::numbers::pi / 2) {
        a = std::numbers::pi - a;
    }
    return a;
}

double NoiseModel::gate_error(const Gate &gate) const {
    switch (gate.kind) {
        case GateKind::CNOT:
            return p2;
        case GateKind::ScaledRZZ:
        case GateKind::ScaledRZX: {
            double a = scaled_pulse_angle(gate.angle);
            if (a == 0.0) {
                return 0.0;
            }
            return p2 * pulse_duration_ratio(pulse, a);
        }
        default:
            return p1;
    }
}

void to_json(nlohmann::json &j, const NoiseModel &noise) {
    j = nlohmann::json{
        {"p1", noise.p1},
        {"p2", noise.p2},
        {"p_readout", noise.p_readout},
        {"shots", noise.shots},
        {"pulse", noise.pulse},
    };
}

void apply_gate(Eigen::Ref<Eigen::VectorXcd> psi, size_t qubits, const Gate &gate) {
    check_qubits(gate, qubits);
    auto support = support_of(gate);
    apply_local(psi, qubits, gate.matrix(), support);
}

void apply_gate(Eigen::MatrixXcd &rho, size_t qubits, const Gate &gate) {
    check_qubits(gate, qubits);
    auto support = support_of(gate);
    conjugate_local(rho, qubits, gate.matrix(), support);
}

void apply_depolarizing(Eigen::MatrixXcd &rho, size_t qubits, std::span<const size_t> support, double p) {
    if (p == 0.0) {
        return;
    }
    size_t k = support.size();
    size_t n_strings = size_t{1} << (2 * k);
    Eigen::MatrixXcd twirl = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    for (size_t code = 0; code < n_strings; code++) {
        std::string letters(k, 'I');
        for (size_t m = 0; m < k; m++) {
            letters[m] = kLetters[(code >> (2 * (k - 1 - m))) & 3];
        }
        Eigen::MatrixXcd term = rho;
        conjugate_local(term, qubits, PauliString(letters).matrix(), support);
        twirl += term;
    }
    rho = (1.0 - p) * rho + (p / static_cast<double>(n_strings)) * twirl;
}

void propagate_noisy(Eigen::MatrixXcd &rho, size_t qubits, const Circuit &c, const NoiseModel &noise) {
    if (c.qubits() != qubits) {
        throw std::invalid_argument("circuit width does not match the state");
    }
    for (const auto &g : c.gates()) {
        apply_gate(rho, qubits, g);
        auto support = support_of(g);
        apply_depolarizing(rho, qubits, support, noise.gate_error(g));
    }
}

Eigen::MatrixXcd circuit_unitary(const Circuit &c) {
    auto dim = static_cast<Eigen::Index>(size_t{1} << c.qubits());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        for (const auto &g : c.gates()) {
            apply_gate(u.col(col), c.qubits(), g);
        }
    }
    return u;
}

StateVector run_ideal(const Circuit &c, const StateVector &psi0) {
    if (c.qubits() != psi0.qubits()) {
        throw std::invalid_argument("circuit width does not match the state");
    }
    StateVector psi = psi0;
    for (const auto &g : c.gates()) {
        psi.apply(g);
    }
    return psi;
}

DensityMatrix run_density(const Circuit &c, const NoiseModel &noise, const DensityMatrix &rho0) {
    if (c.qubits() != rho0.qubits()) {
        throw std::invalid_argument("circuit width does not match the state");
    }
    noise.validate();
    Eigen::MatrixXcd rho = rho0.matrix();
    propagate_noisy(rho, c.qubits(), c, noise);
    // Restore exact Hermiticity lost to rounding before re-validating.
    Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(std::move(herm));
}

std::uint64_t Counts::total() const {
    std::uint64_t t = 0;
    for (const auto &[k, v] : histogram) {
        t += v;
    }
    return t;
}

std::string Counts::bitstring(std::uint64_t index) const {
    std::string s(qubits, '0');
    for (size_t k = 0; k < qubits; k++) {
        if ((index >> (qubits - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

nlohmann::json Counts::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[k, v] : histogram) {
        j[bitstring(k)] = v;
    }
    return j;
}

std::mt19937_64 task_rng(std::uint64_t root_seed, std::uint64_t task) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return std::mt19937_64(mix(mix(root_seed) ^ task));
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> apply_readout_error(std::span<const double> probs, size_t qubits, double p_readout) {
    std::vector<double> out(probs.begin(), probs.end());
    if (p_readout == 0.0) {
        return out;
    }
    for (size_t k = 0; k < qubits; k++) {
        size_t stride = size_t{1} << (qubits - 1 - k);
        for (size_t i = 0; i < out.size(); i++) {
            if (i & stride) {
                continue;
            }
            double a = out[i];
            double b = out[i | stride];
            out[i] = (1.0 - p_readout) * a + p_readout * b;
            out[i | stride] = (1.0 - p_readout) * b + p_readout * a;
        }
    }
    return out;
}

Counts sample_counts(std::span<const double> probs, size_t qubits, size_t shots, std::mt19937_64 &rng) {
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); i++) {
        acc += std::max(0.0, probs[i]);
        cdf[i] = acc;
    }
    if (!(acc > 0.0)) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }
    Counts counts;
    counts.qubits = qubits;
    for (size_t s = 0; s < shots; s++) {
        double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto idx = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        counts.histogram[idx]++;
    }
    return counts;
}

Counts run_noisy(const Circuit &c, const NoiseModel &noise, const StateVector &psi0, std::mt19937_64 &rng) {
    auto rho = run_density(c, noise, DensityMatrix::from_state(psi0));
    auto probs = apply_readout_error(rho.probabilities(), c.qubits(), noise.p_readout);
    return sample_counts(probs, c.qubits(), noise.shots, rng);
}

}  // namespace rksim
