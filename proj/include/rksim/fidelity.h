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

#ifndef RKSIM_FIDELITY_H
#define RKSIM_FIDELITY_H

#include <Eigen/Dense>

#include "rksim/circuits.h"
#include "rksim/simulator.h"

namespace rksim {

/// Linear map on column-stacked operators: vec(E(rho)) = S vec(rho).
using Superoperator = Eigen::MatrixXcd;

Superoperator unitary_superoperator(const Eigen::MatrixXcd &u);

/// Superoperator of the circuit with every gate followed by its depolarizing noise.
Superoperator noisy_channel(const Circuit &c, const NoiseModel &noise);

/// Throws std::invalid_argument if the channel is not trace preserving or not
/// completely positive (tolerance 1e-8).
void check_cptp(const Superoperator &channel);

/// Tr(S_U^dagger S_E) / d^2.
double process_fidelity(const Eigen::MatrixXcd &ideal, const Superoperator &channel);

/// (d F_pro + 1) / (d + 1).
double average_gate_fidelity(const Eigen::MatrixXcd &ideal, const Superoperator &channel);

/// R_ZZ(theta) as CNOT - RZ(theta) - CNOT.
Circuit rzz_native_circuit(double theta);

/// R_ZZ(theta) as a scaled R_ZX(theta) conjugated by Hadamards on the target.
Circuit rzz_scaled_circuit(double theta);

struct RzzFidelity {
    double theta;
    double native;
    double scaled;
};

RzzFidelity compare_rzz_fidelity(double theta, const NoiseModel &noise);

}  // namespace rksim

#endif
