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

#include "rksim/pauli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace rksim {

namespace {

using cd = std::complex<double>;

/// Entry P[col ^ flip_mask, col] for the string, given the column index.
cd column_phase(const std::string &letters, size_t col) {
    size_t q = letters.size();
    cd phase{1.0, 0.0};
    for (size_t k = 0; k < q; k++) {
        bool bit = (col >> (q - 1 - k)) & 1;
        switch (letters[k]) {
            case 'Z':
                if (bit) {
                    phase = -phase;
                }
                break;
            case 'Y':
                phase *= bit ? cd{0.0, -1.0} : cd{0.0, 1.0};
                break;
            default:
                break;
        }
    }
    return phase;
}

size_t flip_mask(const std::string &letters) {
    size_t q = letters.size();
    size_t mask = 0;
    for (size_t k = 0; k < q; k++) {
        if (letters[k] == 'X' || letters[k] == 'Y') {
            mask |= size_t{1} << (q - 1 - k);
        }
    }
    return mask;
}

}  // namespace

PauliString::PauliString(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("invalid Pauli letter '" + std::string(1, c) + "' in " + letters_);
        }
    }
}

PauliString PauliString::identity(size_t qubits) {
    return PauliString(std::string(qubits, 'I'));
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (char c : letters_) {
        w += c != 'I';
    }
    return w;
}

Eigen::MatrixXcd PauliString::matrix() const {
    auto dim = static_cast<Eigen::Index>(size_t{1} << size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    size_t x = flip_mask(letters_);
    for (Eigen::Index col = 0; col < dim; col++) {
        auto c = static_cast<size_t>(col);
        m(static_cast<Eigen::Index>(c ^ x), col) = column_phase(letters_, c);
    }
    return m;
}

Eigen::MatrixXcd embed(const EffectiveHamiltonian &h) {
    size_t q = qubits_for_dimension(h.dim());
    auto full = static_cast<Eigen::Index>(size_t{1} << q);
    auto d = static_cast<Eigen::Index>(h.dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(full, full);
    m.topLeftCorner(d, d) = h.matrix.cast<cd>();
    return m;
}

PauliDecomposition decompose(const Eigen::MatrixXcd &m, double threshold) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("decompose needs a square matrix");
    }
    auto dim = static_cast<size_t>(m.rows());
    if ((dim & (dim - 1)) != 0) {
        throw std::invalid_argument("decompose needs a 2^Q x 2^Q matrix");
    }
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::invalid_argument("decompose needs a Hermitian matrix");
    }
    size_t q = static_cast<size_t>(std::countr_zero(dim));

    PauliDecomposition out;
    out.qubits = q;
    out.threshold = threshold;
    std::string letters(q, 'I');
    static constexpr char kAlphabet[4] = {'I', 'X', 'Y', 'Z'};
    size_t total = size_t{1} << (2 * q);
    for (size_t code = 0; code < total; code++) {
        // Most significant base-4 digit is qubit 0, which keeps I<X<Y<Z lexicographic order.
        for (size_t k = 0; k < q; k++) {
            letters[k] = kAlphabet[(code >> (2 * (q - 1 - k))) & 3];
        }
        size_t x = flip_mask(letters);
        cd trace{0.0, 0.0};
        for (size_t col = 0; col < dim; col++) {
            trace += column_phase(letters, col) * m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col ^ x));
        }
        double c = trace.real() / static_cast<double>(dim);
        if (std::abs(c) > threshold) {
            out.terms.push_back(PauliTerm{PauliString(letters), c});
        }
    }
    return out;
}

Eigen::MatrixXcd reconstruct(const PauliDecomposition &d) {
    auto dim = static_cast<Eigen::Index>(size_t{1} << d.qubits);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : d.terms) {
        if (t.string.size() != d.qubits) {
            throw std::invalid_argument("Pauli term width does not match decomposition");
        }
        m += t.coefficient * t.string.matrix();
    }
    return m;
}

nlohmann::json PauliDecomposition::to_json() const {
    nlohmann::json out;
    out["qubits"] = qubits;
    out["threshold"] = threshold;
    out["terms"] = nlohmann::json::array();
    for (const auto &t : terms) {
        out["terms"].push_back({{"string", t.string.str()}, {"coefficient", t.coefficient}});
    }
    return out;
}

PauliDecomposition PauliDecomposition::from_json(const nlohmann::json &j) {
    PauliDecomposition d;
    d.qubits = j.at("qubits").get<size_t>();
    d.threshold = j.value("threshold", 1e-10);
    for (const auto &t : j.at("terms")) {
        d.terms.push_back(PauliTerm{PauliString(t.at("string").get<std::string>()), t.at("coefficient").get<double>()});
    }
    return d;
}

}  // namespace rksim
