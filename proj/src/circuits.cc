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

#include "rksim/circuits.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rksim {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// exp(-i theta/2 * A (x) B) for Pauli letters a, b.
Eigen::MatrixXcd two_qubit_rotation(char a, char b, double theta) {
    Eigen::MatrixXcd p = PauliString(std::string{a, b}).matrix();
    return std::cos(theta / 2) * Eigen::MatrixXcd::Identity(4, 4) - cd{0, 1} * std::sin(theta / 2) * p;
}

Eigen::MatrixXcd one_qubit_rotation(char a, double theta) {
    Eigen::MatrixXcd p = PauliString(std::string{a}).matrix();
    return std::cos(theta / 2) * Eigen::MatrixXcd::Identity(2, 2) - cd{0, 1} * std::sin(theta / 2) * p;
}

void emit_scaled_rzz(Circuit &c, size_t a, size_t b, double theta) {
    theta = wrap_angle(theta);
    if (std::abs(theta) > kPi / 2) {
        // R_ZZ(theta) = R_ZZ(theta -+ pi) R_ZZ(+-pi), and R_ZZ(pi) = RZ(pi) (x) RZ(pi) up to phase.
        theta -= theta > 0 ? kPi : -kPi;
        c.append({GateKind::RZ, kPi, a});
        c.append({GateKind::RZ, kPi, b});
    }
    if (theta != 0.0) {
        c.append({GateKind::ScaledRZZ, theta, a, b});
    }
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::H:
            return "H";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::ScaledRZZ:
            return "SCALED_RZZ";
        case GateKind::ScaledRZX:
            return "SCALED_RZX";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    for (auto k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::H, GateKind::CNOT, GateKind::ScaledRZZ,
                   GateKind::ScaledRZX}) {
        if (name == gate_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

size_t Gate::arity() const {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::ScaledRZZ:
        case GateKind::ScaledRZX:
            return 2;
        default:
            return 1;
    }
}

Eigen::MatrixXcd Gate::matrix() const {
    switch (kind) {
        case GateKind::RX:
            return one_qubit_rotation('X', angle);
        case GateKind::RY:
            return one_qubit_rotation('Y', angle);
        case GateKind::RZ:
            return one_qubit_rotation('Z', angle);
        case GateKind::H: {
            Eigen::MatrixXcd h(2, 2);
            h << 1, 1, 1, -1;
            return h / std::sqrt(2.0);
        }
        case GateKind::CNOT: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
            return m;
        }
        case GateKind::ScaledRZZ:
            return two_qubit_rotation('Z', 'Z', angle);
        case GateKind::ScaledRZX:
            return two_qubit_rotation('Z', 'X', angle);
    }
    throw std::logic_error("unhandled gate kind");
}

void Circuit::append(const Gate &gate) {
    if (!std::isfinite(gate.angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    if (gate.q0 >= qubits_ || (gate.arity() == 2 && gate.q1 >= qubits_)) {
        throw std::invalid_argument("gate qubit index out of range");
    }
    if (gate.arity() == 2 && gate.q0 == gate.q1) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    Gate g = gate;
    if (g.arity() == 1) {
        g.q1 = 0;
    }
    gates_.push_back(g);
}

void Circuit::extend(const Circuit &other) {
    if (other.qubits_ != qubits_) {
        throw std::invalid_argument("circuit widths differ");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::inverse() const {
    Circuit out(qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        g.angle = -g.angle;
        out.gates_.push_back(g);
    }
    return out;
}

std::string Circuit::to_text() const {
    std::string out = "# qubits " + std::to_string(qubits_) + "\n";
    for (const auto &g : gates_) {
        out += gate_kind_name(g.kind);
        out += ' ';
        out += format_double(g.angle);
        out += ' ';
        out += std::to_string(g.q0);
        if (g.arity() == 2) {
            out += ' ';
            out += std::to_string(g.q1);
        }
        out += '\n';
    }
    return out;
}

Circuit Circuit::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        if (line[0] == '#') {
            std::string hash, key;
            size_t q;
            if (fields >> hash >> key >> q && key == "qubits") {
                circuit.emplace(q);
            }
            continue;
        }
        if (!circuit) {
            throw std::invalid_argument("circuit text is missing the '# qubits Q' header");
        }
        std::string kind;
        Gate g{};
        if (!(fields >> kind >> g.angle >> g.q0)) {
            throw std::invalid_argument("malformed gate on line " + std::to_string(line_no));
        }
        g.kind = parse_gate_kind(kind);
        if (g.arity() == 2 && !(fields >> g.q1)) {
            throw std::invalid_argument("missing second qubit on line " + std::to_string(line_no));
        }
        circuit->append(g);
    }
    if (!circuit) {
        throw std::invalid_argument("circuit text is missing the '# qubits Q' header");
    }
    return *circuit;
}

const char *trotter_mode_name(TrotterMode mode) {
    return mode == TrotterMode::Native ? "native" : "scaled";
}

TrotterMode parse_trotter_mode(std::string_view name) {
    if (name == "native") {
        return TrotterMode::Native;
    }
    if (name == "scaled") {
        return TrotterMode::Scaled;
    }
    throw std::invalid_argument("trotter mode must be 'native' or 'scaled', got '" + std::string(name) + "'");
}

Circuit synthesize_term(const PauliTerm &term, double dt, TrotterMode mode) {
    const auto &p = term.string;
    Circuit c(p.size());
    std::vector<size_t> active;
    for (size_t k = 0; k < p.size(); k++) {
        if (p[k] != 'I') {
            active.push_back(k);
        }
    }
    if (active.empty()) {
        return c;
    }
    double theta = 2.0 * term.coefficient * dt;

    if (active.size() == 1) {
        size_t q = active[0];
        GateKind kind = p[q] == 'X' ? GateKind::RX : p[q] == 'Y' ? GateKind::RY : GateKind::RZ;
        c.append({kind, theta, q});
        return c;
    }

    // Rotate every active qubit into the Z basis.
    Circuit basis_change(p.size());
    for (size_t q : active) {
        if (p[q] == 'X') {
            basis_change.append({GateKind::H, 0.0, q});
        } else if (p[q] == 'Y') {
            basis_change.append({GateKind::RX, kPi / 2, q});
        }
    }
    c.extend(basis_change);

    size_t last = active.size() - 1;
    size_t outer_links = mode == TrotterMode::Scaled ? last - 1 : last;
    for (size_t k = 0; k < outer_links; k++) {
        c.append({GateKind::CNOT, 0.0, active[k], active[k + 1]});
    }
    if (mode == TrotterMode::Scaled) {
        emit_scaled_rzz(c, active[last - 1], active[last], theta);
    } else {
        c.append({GateKind::RZ, theta, active[last]});
    }
    for (size_t k = outer_links; k-- > 0;) {
        c.append({GateKind::CNOT, 0.0, active[k], active[k + 1]});
    }

    c.extend(basis_change.inverse());
    return c;
}

Circuit synthesize_trotter(const PauliDecomposition &d, double dt, size_t n_steps, TrotterMode mode) {
    if (n_steps < 1) {
        throw std::invalid_argument("trotter circuit needs at least one step");
    }
    Circuit step(d.qubits);
    for (const auto &t : d.terms) {
        step.extend(synthesize_term(t, dt, mode));
    }
    Circuit out(d.qubits);
    for (size_t s = 0; s < n_steps; s++) {
        out.extend(step);
    }
    return out;
}

nlohmann::json GateCounts::to_json() const {
    return {{"cnot_native", cnot_native}, {"scaled_rzz", scaled_rzz}, {"single_qubit", single_qubit}};
}

GateCounts count_gates(const Circuit &c) {
    GateCounts counts;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            counts.cnot_native++;
        } else if (g.is_scaled()) {
            counts.scaled_rzz++;
        } else {
            counts.single_qubit++;
        }
    }
    return counts;
}

double wrap_angle(double theta) {
    double r = std::remainder(theta, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

}  // namespace rksim
