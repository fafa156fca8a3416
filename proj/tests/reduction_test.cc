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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>

using namespace rksim;

namespace {

// Independent sets on the N-cycle by brute force over all subsets.
size_t brute_force_configs(size_t n) {
    size_t count = 0;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); bits++) {
        bool ok = true;
        for (size_t p = 0; p < n && ok; p++) {
            size_t q = (p + 1) % n;
            ok = !(((bits >> p) & 1) && ((bits >> q) & 1));
        }
        count += ok;
    }
    return count;
}

std::vector<std::string> labels(const std::vector<Orbit> &orbits) {
    std::vector<std::string> out;
    for (const auto &o : orbits) {
        out.push_back(o.label());
    }
    return out;
}

}  // namespace

TEST(flip_config, validates_adjacency) {
    EXPECT_NO_THROW(FlipConfig(6, 0b001001));
    EXPECT_THROW(FlipConfig(6, 0b000011), std::invalid_argument);
    EXPECT_THROW(FlipConfig(6, 0b100001), std::invalid_argument);
    EXPECT_THROW(FlipConfig(6, 0b1000000), std::invalid_argument);
    EXPECT_THROW(FlipConfig(2, 0b11), std::invalid_argument);
    EXPECT_EQ(FlipConfig(6, 0b100).label(), "3");
    EXPECT_EQ(FlipConfig(6, 0b001001).label(), "14");
    EXPECT_EQ(FlipConfig(6, 0).label(), "0");
    EXPECT_EQ(FlipConfig(12, 0b1000000001).label(), "1,10");
    EXPECT_EQ(FlipConfig(6, 0b100000).rotated(1).bits(), 0b1u);
}

TEST(enumerate_configs, counts) {
    EXPECT_EQ(enumerate_configs(2).size(), 3u);
    for (size_t n = 3; n <= 16; n++) {
        EXPECT_EQ(enumerate_configs(n).size(), brute_force_configs(n)) << n;
    }
    EXPECT_EQ(enumerate_configs(4).size(), 7u);
    EXPECT_EQ(enumerate_configs(6).size(), 18u);
    EXPECT_EQ(enumerate_configs(8).size(), 47u);
    auto c = enumerate_configs(8);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end(), [](const FlipConfig &a, const FlipConfig &b) {
        return a.bits() < b.bits();
    }));
}

TEST(flippable_count_config, examples) {
    EXPECT_EQ(flippable_count_config(FlipConfig(6, 0)), 6u);
    EXPECT_EQ(flippable_count_config(FlipConfig(6, 0b000100)), 4u);
    EXPECT_EQ(flippable_count_config(FlipConfig(6, 0b001001)), 2u);
    EXPECT_EQ(flippable_count_config(FlipConfig(2, 0b01)), 1u);
}

TEST(orbit_decompose, counts_and_order) {
    EXPECT_EQ(orbit_decompose(2).size(), 2u);
    EXPECT_EQ(orbit_decompose(4).size(), 3u);
    EXPECT_EQ(orbit_decompose(8).size(), 8u);
    auto orbits = orbit_decompose(6);
    EXPECT_EQ(labels(orbits), (std::vector<std::string>{"0", "1", "13", "14", "135"}));
    std::vector<size_t> sizes, flippable;
    for (const auto &o : orbits) {
        sizes.push_back(o.size);
        flippable.push_back(o.flippable);
    }
    EXPECT_EQ(sizes, (std::vector<size_t>{1, 6, 6, 3, 2}));
    EXPECT_EQ(flippable, (std::vector<size_t>{6, 4, 3, 2, 3}));
}

TEST(orbit_decompose, partition_properties) {
    for (size_t n = 2; n <= 14; n++) {
        size_t total = 0;
        for (const auto &o : orbit_decompose(n)) {
            EXPECT_EQ(n % o.size, 0u);
            EXPECT_EQ(o.members.size(), o.size);
            for (const auto &m : o.members) {
                EXPECT_GE(m.bits(), o.canonical.bits());
                EXPECT_EQ(flippable_count_config(m), o.flippable);
            }
            total += o.size;
        }
        EXPECT_EQ(total, enumerate_configs(n).size());
    }
}

TEST(orbit_decompose, seventeen_plaquettes_fit_eight_qubits) {
    auto orbits = orbit_decompose(17);
    EXPECT_GT(orbits.size(), 128u);
    EXPECT_LE(orbits.size(), 256u);
    EXPECT_EQ(qubits_for_dimension(orbits.size()), 8u);
}

TEST(build_effective_hamiltonian, four_plaquettes) {
    for (double lambda : {0.0, 0.7, 1.0}) {
        auto h = build_effective_hamiltonian(4, 1.0, lambda);
        Eigen::Matrix3d expected;
        expected << 4 * lambda, -2, 0, -2, 2 * lambda, -std::sqrt(2.0), 0, -std::sqrt(2.0), 2 * lambda;
        EXPECT_LE((h.matrix - expected).cwiseAbs().maxCoeff(), 1e-12) << lambda;
        EXPECT_LE((h.matrix - *tabulated_effective_hamiltonian(4, 1.0, lambda)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(build_effective_hamiltonian, six_plaquettes) {
    auto h = build_effective_hamiltonian(6, 1.0, 1.0).matrix;
    EXPECT_NEAR(h(0, 1), -std::sqrt(6.0), 1e-12);
    EXPECT_NEAR(h(1, 2), -2.0, 1e-12);
    EXPECT_NEAR(h(1, 3), -std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(h(2, 4), -std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(h(3, 4), 0.0, 1e-12);
    EXPECT_NEAR(h.trace(), 18.0, 1e-12);
}

TEST(build_effective_hamiltonian, two_plaquettes) {
    auto h = build_effective_hamiltonian(2, 1.0, 1.0).matrix;
    EXPECT_NEAR(h(0, 0), 2.0, 1e-12);
    EXPECT_NEAR(h(1, 1), 1.0, 1e-12);
    EXPECT_NEAR(h(0, 1), -std::sqrt(2.0), 1e-12);
}

TEST(build_effective_hamiltonian, structure) {
    for (size_t n = 2; n <= 12; n++) {
        auto h = build_effective_hamiltonian(n, 0.8, 1.3);
        EXPECT_LE((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        for (size_t a = 0; a < h.dim(); a++) {
            EXPECT_NEAR(h.matrix(a, a), 1.3 * static_cast<double>(h.basis[a].flippable), 1e-12);
        }
    }
}

TEST(config_space_hamiltonian, small_cases) {
    Eigen::MatrixXd h2 = Eigen::MatrixXd(config_space_hamiltonian(2, 1.0, 1.0));
    EXPECT_EQ(h2.diagonal(), Eigen::Vector3d(2, 1, 1));
    for (size_t n = 2; n <= 10; n++) {
        Eigen::MatrixXd h = Eigen::MatrixXd(config_space_hamiltonian(n, 1.5, 0.0));
        // Every plaquette can be flipped first from the empty configuration.
        EXPECT_NEAR(h.row(0).sum(), -1.5 * static_cast<double>(n), 1e-12);
    }
}

TEST(config_space_hamiltonian, projection_reproduces_effective_model) {
    for (size_t n = 2; n <= 14; n++) {
        auto h = build_effective_hamiltonian(n, 1.0, 0.6);
        Eigen::MatrixXd s = Eigen::MatrixXd(symmetrizer(n, h.basis));
        Eigen::MatrixXd full = Eigen::MatrixXd(config_space_hamiltonian(n, 1.0, 0.6));
        EXPECT_LE((s.transpose() * full * s - h.matrix).cwiseAbs().maxCoeff(), 1e-10) << n;
    }
}

TEST(config_space_hamiltonian, spectrum_containment) {
    for (size_t n = 2; n <= 10; n++) {
        auto h = build_effective_hamiltonian(n, 1.0, 1.0);
        Eigen::MatrixXd full = Eigen::MatrixXd(config_space_hamiltonian(n, 1.0, 1.0));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> big(full, Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(h.matrix, Eigen::EigenvaluesOnly);
        for (Eigen::Index k = 0; k < small.eigenvalues().size(); k++) {
            double gap = (big.eigenvalues().array() - small.eigenvalues()(k)).abs().minCoeff();
            EXPECT_LE(gap, 1e-9) << n;
        }
    }
}

TEST(reduction_report, four_plaquettes_clean) {
    auto r = reduction_report(4);
    EXPECT_EQ(r.n_configs, 7u);
    EXPECT_EQ(r.n_orbits, 3u);
    EXPECT_EQ(r.qubits, 2u);
    EXPECT_TRUE(r.discrepancies.empty());
}

TEST(reduction_report, six_plaquettes_flags_misplaced_entry) {
    auto r = reduction_report(6);
    EXPECT_EQ(r.n_configs, 18u);
    EXPECT_EQ(r.n_orbits, 5u);
    EXPECT_EQ(r.qubits, 3u);
    ASSERT_EQ(r.discrepancies.size(), 2u);
    for (const auto &d : r.discrepancies) {
        EXPECT_TRUE(d.confirmed);
        EXPECT_NEAR(d.oracle, d.computed, 1e-10);
    }
    EXPECT_EQ(r.discrepancies[0].row_label, "13");
    EXPECT_EQ(r.discrepancies[0].col_label, "135");
    EXPECT_EQ(r.discrepancies[1].row_label, "14");
    EXPECT_EQ(r.discrepancies[1].col_label, "135");
    auto j = r.to_json();
    EXPECT_EQ(j["discrepancies"].size(), 2u);
}

TEST(reduction_report, eight_plaquettes_matches_table) {
    auto r = reduction_report(8);
    EXPECT_EQ(r.n_configs, 47u);
    EXPECT_EQ(r.n_orbits, 8u);
    EXPECT_EQ(r.qubits, 3u);
    for (const auto &d : r.discrepancies) {
        EXPECT_TRUE(d.confirmed);
    }
}

TEST(qubits_for_dimension, padding) {
    EXPECT_EQ(qubits_for_dimension(1), 1u);
    EXPECT_EQ(qubits_for_dimension(2), 1u);
    EXPECT_EQ(qubits_for_dimension(3), 2u);
    EXPECT_EQ(qubits_for_dimension(5), 3u);
    EXPECT_EQ(qubits_for_dimension(8), 3u);
    EXPECT_EQ(qubits_for_dimension(211), 8u);
}
