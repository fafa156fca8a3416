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

#ifndef RKSIM_CIRCUITS_H
#define RKSIM_CIRCUITS_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "rksim/pauli.h"

namespace rksim {

enum class GateKind { RX, RY, RZ, H, CNOT, ScaledRZZ, ScaledRZX };

const char *gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

/// Rotations follow R_P(theta) = exp(-i theta P / 2). For two-qubit gates q0 is the
/// control (the Z side of R_ZX) and q1 the target.
struct Gate {
    GateKind kind;
    double angle = 0.0;
    size_t q0 = 0;
    size_t q1 = 0;

    size_t arity() const;
    bool is_scaled() const {
        return kind == GateKind::ScaledRZZ || kind == GateKind::ScaledRZX;
    }

    /// Local unitary, 2x2 or 4x4 with q0 as the more significant qubit.
    Eigen::MatrixXcd matrix() const;

    bool operator==(const Gate &) const = default;
};

class Circuit {
   public:
    explicit Circuit(size_t qubits = 0) : qubits_(qubits) {
    }

    size_t qubits() const {
        return qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    bool empty() const {
        return gates_.empty();
    }

    void append(const Gate &gate);
    void extend(const Circuit &other);

    /// Reversed sequence with negated angles.
    Circuit inverse() const;

    /// One gate per line: `KIND angle q0 [q1]`, preceded by a `# qubits Q` line.
    std::string to_text() const;
    static Circuit from_text(std::string_view text);

    bool operator==(const Circuit &) const = default;

   private:
    size_t qubits_;
    std::vector<Gate> gates_;
};

enum class TrotterMode { Native, Scaled };

const char *trotter_mode_name(TrotterMode mode);
TrotterMode parse_trotter_mode(std::string_view name);

/// Circuit for exp(-i c P dt). Identity terms give an empty circuit.
Circuit synthesize_term(const PauliTerm &term, double dt, TrotterMode mode);

/// (prod_k exp(-i h_k dt))^n_steps with the terms in decomposition order.
Circuit synthesize_trotter(const PauliDecomposition &d, double dt, size_t n_steps, TrotterMode mode);

struct GateCounts {
    size_t cnot_native = 0;
    /// Scaled cross-resonance pulses (ScaledRZZ and ScaledRZX).
    size_t scaled_rzz = 0;
    size_t single_qubit = 0;

    nlohmann::json to_json() const;
    bool operator==(const GateCounts &) const = default;
};

GateCounts count_gates(const Circuit &c);

/// Angle wrapped into (-pi, pi].
double wrap_angle(double theta);

}  // namespace rksim

#endif
