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

#ifndef RKSIM_PAULI_H
#define RKSIM_PAULI_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "rksim/reduction.h"

namespace rksim {

/// Word over {I,X,Y,Z}. Letter k acts on qubit k, and qubit 0 is the most
/// significant bit of a basis index.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::string_view letters);

    static PauliString identity(size_t qubits);

    size_t size() const {
        return letters_.size();
    }
    char operator[](size_t k) const {
        return letters_[k];
    }
    const std::string &str() const {
        return letters_;
    }

    /// Number of non-identity letters.
    size_t weight() const;

    /// Dense 2^Q x 2^Q matrix.
    Eigen::MatrixXcd matrix() const;

    bool operator==(const PauliString &) const = default;
    auto operator<=>(const PauliString &) const = default;

   private:
    std::string letters_;
};

struct PauliTerm {
    PauliString string;
    double coefficient;
};

struct PauliDecomposition {
    size_t qubits = 0;
    double threshold = 1e-10;
    std::vector<PauliTerm> terms;

    nlohmann::json to_json() const;
    static PauliDecomposition from_json(const nlohmann::json &j);
};

/// Zero-padded 2^Q x 2^Q embedding; orbit a maps to computational basis state a.
Eigen::MatrixXcd embed(const EffectiveHamiltonian &h);

/// Tr(P M) / 2^Q for every Pauli string P; terms with |c| <= threshold are dropped.
/// Terms are ordered lexicographically with I < X < Y < Z per position.
/// Throws std::invalid_argument if M is not Hermitian or not 2^Q square.
PauliDecomposition decompose(const Eigen::MatrixXcd &m, double threshold = 1e-10);

/// Sum of c_P * P.
Eigen::MatrixXcd reconstruct(const PauliDecomposition &d);

}  // namespace rksim

#endif
