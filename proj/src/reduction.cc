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

#include "rksim/reduction.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace rksim {

namespace {

std::uint32_t width_mask(size_t n) {
    return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

std::uint32_t rotate_left(std::uint32_t bits, size_t k, size_t n) {
    k %= n;
    if (k == 0) {
        return bits;
    }
    return ((bits << k) | (bits >> (n - k))) & width_mask(n);
}

void check_size(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("flip configurations need N >= 2");
    }
    if (n > kMaxConfigPlaquettes) {
        throw std::invalid_argument("flip configurations are limited to N <= " + std::to_string(kMaxConfigPlaquettes));
    }
}

}  // namespace

bool is_independent(size_t n_plaquettes, std::uint32_t bits) {
    return (bits & rotate_left(bits, 1, n_plaquettes)) == 0;
}

FlipConfig::FlipConfig(size_t n_plaquettes, std::uint32_t bits) : n_(n_plaquettes), bits_(bits) {
    check_size(n_);
    if ((bits_ & ~width_mask(n_)) != 0) {
        throw std::invalid_argument("flip configuration has bits beyond N");
    }
    if (!is_independent(n_, bits_)) {
        throw std::invalid_argument("neighbouring plaquettes cannot both be flipped");
    }
}

bool FlipConfig::flipped(size_t p) const {
    if (p < 1 || p > n_) {
        throw std::out_of_range("plaquette index out of range");
    }
    return (bits_ >> (p - 1)) & 1;
}

size_t FlipConfig::num_flips() const {
    return static_cast<size_t>(std::popcount(bits_));
}

FlipConfig FlipConfig::rotated(size_t k) const {
    return FlipConfig(n_, rotate_left(bits_, k, n_));
}

std::string FlipConfig::label() const {
    if (bits_ == 0) {
        return "0";
    }
    std::string out;
    for (size_t p = 1; p <= n_; p++) {
        if (flipped(p)) {
            if (n_ >= 10 && !out.empty()) {
                out += ',';
            }
            out += std::to_string(p);
        }
    }
    return out;
}

bool plaquette_flippable(const FlipConfig &config, size_t p) {
    if (config.flipped(p)) {
        return true;
    }
    size_t n = config.n_plaquettes();
    size_t left = p == 1 ? n : p - 1;
    size_t right = p % n + 1;
    return !config.flipped(left) && !config.flipped(right);
}

size_t flippable_count_config(const FlipConfig &config) {
    size_t count = 0;
    for (size_t p = 1; p <= config.n_plaquettes(); p++) {
        count += plaquette_flippable(config, p) ? 1 : 0;
    }
    return count;
}

std::vector<FlipConfig> enumerate_configs(size_t n_plaquettes) {
    check_size(n_plaquettes);
    std::vector<FlipConfig> out;
    std::uint64_t limit = std::uint64_t{1} << n_plaquettes;
    for (std::uint64_t m = 0; m < limit; m++) {
        auto bits = static_cast<std::uint32_t>(m);
        if (is_independent(n_plaquettes, bits)) {
            out.emplace_back(n_plaquettes, bits);
        }
    }
    return out;
}

std::vector<Orbit> orbit_decompose(size_t n_plaquettes) {
    std::map<std::uint32_t, std::vector<FlipConfig>> classes;
    for (const auto &c : enumerate_configs(n_plaquettes)) {
        std::uint32_t canonical = c.bits();
        for (size_t k = 1; k < n_plaquettes; k++) {
            canonical = std::min(canonical, rotate_left(c.bits(), k, n_plaquettes));
        }
        classes[canonical].push_back(c);
    }
    std::vector<Orbit> orbits;
    orbits.reserve(classes.size());
    for (auto &[canonical, members] : classes) {
        FlipConfig rep(n_plaquettes, canonical);
        size_t flippable = flippable_count_config(rep);
        for (const auto &m : members) {
            if (flippable_count_config(m) != flippable) {
                throw std::logic_error("flippable count not constant on orbit " + rep.label());
            }
        }
        size_t size = members.size();
        orbits.push_back(Orbit{rep, size, flippable, std::move(members)});
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit &a, const Orbit &b) {
        auto ka = std::make_pair(a.canonical.num_flips(), a.canonical.bits());
        auto kb = std::make_pair(b.canonical.num_flips(), b.canonical.bits());
        return ka < kb;
    });
    return orbits;
}

EffectiveHamiltonian build_effective_hamiltonian(size_t n_plaquettes, double j, double lambda) {
    auto basis = orbit_decompose(n_plaquettes);
    std::unordered_map<std::uint32_t, size_t> family;
    for (size_t a = 0; a < basis.size(); a++) {
        for (const auto &m : basis[a].members) {
            family[m.bits()] = a;
        }
    }

    auto d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd edges = Eigen::MatrixXd::Zero(d, d);
    for (const auto &[bits, a] : family) {
        for (size_t p = 0; p < n_plaquettes; p++) {
            auto it = family.find(bits ^ (std::uint32_t{1} << p));
            if (it != family.end()) {
                edges(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(it->second)) += 1.0;
            }
        }
    }

    Eigen::MatrixXd h(d, d);
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            if (a == b) {
                h(a, a) = lambda * static_cast<double>(basis[a].flippable);
            } else {
                h(a, b) = -j * edges(a, b) / std::sqrt(static_cast<double>(basis[a].size * basis[b].size));
            }
        }
    }
    return EffectiveHamiltonian{n_plaquettes, j, lambda, std::move(basis), std::move(h)};
}

Eigen::SparseMatrix<double> config_space_hamiltonian(size_t n_plaquettes, double j, double lambda) {
    auto configs = enumerate_configs(n_plaquettes);
    std::unordered_map<std::uint32_t, int> index;
    for (size_t k = 0; k < configs.size(); k++) {
        index[configs[k].bits()] = static_cast<int>(k);
    }
    std::vector<Eigen::Triplet<double>> entries;
    for (size_t k = 0; k < configs.size(); k++) {
        auto row = static_cast<int>(k);
        entries.emplace_back(row, row, lambda * static_cast<double>(flippable_count_config(configs[k])));
        for (size_t p = 0; p < n_plaquettes; p++) {
            auto it = index.find(configs[k].bits() ^ (std::uint32_t{1} << p));
            if (it != index.end()) {
                entries.emplace_back(row, it->second, -j);
            }
        }
    }
    auto dim = static_cast<int>(configs.size());
    Eigen::SparseMatrix<double> h(dim, dim);
    h.setFromTriplets(entries.begin(), entries.end());
    return h;
}

Eigen::SparseMatrix<double> symmetrizer(size_t n_plaquettes, const std::vector<Orbit> &basis) {
    auto configs = enumerate_configs(n_plaquettes);
    std::unordered_map<std::uint32_t, int> index;
    for (size_t k = 0; k < configs.size(); k++) {
        index[configs[k].bits()] = static_cast<int>(k);
    }
    std::vector<Eigen::Triplet<double>> entries;
    for (size_t a = 0; a < basis.size(); a++) {
        double amp = 1.0 / std::sqrt(static_cast<double>(basis[a].size));
        for (const auto &m : basis[a].members) {
            entries.emplace_back(index.at(m.bits()), static_cast<int>(a), amp);
        }
    }
    Eigen::SparseMatrix<double> s(static_cast<int>(configs.size()), static_cast<int>(basis.size()));
    s.setFromTriplets(entries.begin(), entries.end());
    return s;
}

std::optional<Eigen::MatrixXd> tabulated_effective_hamiltonian(size_t n_plaquettes, double j, double lambda) {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const double r6 = std::sqrt(6.0);
    const double r8 = std::sqrt(8.0);
    Eigen::MatrixXd h;
    auto couple = [&](Eigen::Index a, Eigen::Index b, double v) {
        h(a, b) = -v * j;
        h(b, a) = -v * j;
    };
    switch (n_plaquettes) {
        case 4:
            // basis: 0, 1, 13
            h = Eigen::MatrixXd::Zero(3, 3);
            h.diagonal() << 4, 2, 2;
            h.diagonal() *= lambda;
            couple(0, 1, 2);
            couple(1, 2, r2);
            return h;
        case 6:
            // basis: 0, 1, 13, 14, 135; this table carries the sqrt(3) coupling on (14, 135).
            h = Eigen::MatrixXd::Zero(5, 5);
            h.diagonal() << 6, 4, 3, 2, 3;
            h.diagonal() *= lambda;
            couple(0, 1, r6);
            couple(1, 2, 2);
            couple(1, 3, r2);
            couple(3, 4, r3);
            return h;
        case 8:
            // basis: 0, 1, 13, 14, 15, 135, 136, 1357
            h = Eigen::MatrixXd::Zero(8, 8);
            h.diagonal() << 8, 6, 5, 4, 4, 4, 3, 4;
            h.diagonal() *= lambda;
            couple(0, 1, r8);
            couple(1, 2, 2);
            couple(1, 3, 2);
            couple(1, 4, r2);
            couple(2, 5, 2);
            couple(2, 6, 1);
            couple(3, 6, 2);
            couple(4, 5, r2);
            couple(5, 7, 2);
            return h;
        default:
            return std::nullopt;
    }
}

size_t qubits_for_dimension(size_t dim) {
    size_t q = 1;
    while ((size_t{1} << q) < dim) {
        q++;
    }
    return q;
}

ReductionReport reduction_report(size_t n_plaquettes, double j, double lambda) {
    auto h = build_effective_hamiltonian(n_plaquettes, j, lambda);
    ReductionReport report;
    report.n_plaquettes = n_plaquettes;
    report.n_orbits = h.dim();
    report.n_configs = 0;
    for (const auto &o : h.basis) {
        report.n_configs += o.size;
        report.basis_labels.push_back(o.label());
    }
    report.qubits = qubits_for_dimension(h.dim());

    auto tab = tabulated_effective_hamiltonian(n_plaquettes, j, lambda);
    if (!tab) {
        return report;
    }
    auto s = symmetrizer(n_plaquettes, h.basis);
    Eigen::MatrixXd config = Eigen::MatrixXd(config_space_hamiltonian(n_plaquettes, j, lambda));
    Eigen::MatrixXd sd = Eigen::MatrixXd(s);
    Eigen::MatrixXd oracle = sd.transpose() * config * sd;
    for (Eigen::Index a = 0; a < h.matrix.rows(); a++) {
        for (Eigen::Index b = a; b < h.matrix.cols(); b++) {
            double computed = h.matrix(a, b);
            double printed = (*tab)(a, b);
            if (std::abs(computed - printed) <= 1e-12) {
                continue;
            }
            report.discrepancies.push_back(Discrepancy{
                static_cast<size_t>(a),
                static_cast<size_t>(b),
                h.basis[a].label(),
                h.basis[b].label(),
                printed,
                computed,
                oracle(a, b),
                std::abs(oracle(a, b) - computed) <= 1e-10,
            });
        }
    }
    return report;
}

nlohmann::json ReductionReport::to_json() const {
    nlohmann::json out;
    out["n_plaquettes"] = n_plaquettes;
    out["n_configs"] = n_configs;
    out["n_orbits"] = n_orbits;
    out["qubits"] = qubits;
    out["basis"] = basis_labels;
    out["discrepancies"] = nlohmann::json::array();
    for (const auto &d : discrepancies) {
        out["discrepancies"].push_back({
            {"row", d.row},
            {"col", d.col},
            {"row_label", d.row_label},
            {"col_label", d.col_label},
            {"tabulated", d.tabulated},
            {"computed", d.computed},
            {"oracle", d.oracle},
            {"confirmed", d.confirmed},
        });
    }
    return out;
}

}  // namespace rksim
