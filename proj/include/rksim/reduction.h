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

#ifndef RKSIM_REDUCTION_H
#define RKSIM_REDUCTION_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "json.hpp"

namespace rksim {

constexpr size_t kMaxConfigPlaquettes = 24;

/// Set of plaquettes flipped relative to the all-flippable reference state.
/// Bit p-1 marks plaquette p. No two cyclically adjacent plaquettes may be set.
class FlipConfig {
   public:
    FlipConfig(size_t n_plaquettes, std::uint32_t bits);

    size_t n_plaquettes() const {
        return n_;
    }
    std::uint32_t bits() const {
        return bits_;
    }
    bool flipped(size_t p) const;
    size_t num_flips() const;

    /// Translation by k plaquettes (plaquette p moves to p+k).
    FlipConfig rotated(size_t k) const;

    /// Flip indices in increasing order, e.g. "135"; "0" for the empty set.
    /// Indices are comma separated once N >= 10.
    std::string label() const;

    bool operator==(const FlipConfig &) const = default;

   private:
    size_t n_;
    std::uint32_t bits_;
};

/// True iff the plaquettes in `bits` form an independent set of the N-cycle.
/// For N = 2 the two plaquettes are neighbours (once).
bool is_independent(size_t n_plaquettes, std::uint32_t bits);

/// |S| plus the unflipped plaquettes with no flipped neighbour.
size_t flippable_count_config(const FlipConfig &config);

/// Whether plaquette p is flippable in the configuration.
bool plaquette_flippable(const FlipConfig &config, size_t p);

/// Translation class of flip configurations; one symmetrized effective basis state.
struct Orbit {
    FlipConfig canonical;
    size_t size;
    size_t flippable;
    std::vector<FlipConfig> members;

    std::string label() const {
        return canonical.label();
    }
};

struct EffectiveHamiltonian {
    size_t n_plaquettes;
    double j;
    double lambda;
    std::vector<Orbit> basis;
    Eigen::MatrixXd matrix;

    size_t dim() const {
        return basis.size();
    }
};

/// All independent sets of the N-cycle in increasing bitmask order.
std::vector<FlipConfig> enumerate_configs(size_t n_plaquettes);

/// Rotation classes of enumerate_configs, ordered by (flip count, canonical mask).
std::vector<Orbit> orbit_decompose(size_t n_plaquettes);

EffectiveHamiltonian build_effective_hamiltonian(size_t n_plaquettes, double j, double lambda);

/// RK Hamiltonian on the full flip-configuration basis (ordered as enumerate_configs).
Eigen::SparseMatrix<double> config_space_hamiltonian(size_t n_plaquettes, double j, double lambda);

/// Columns are the normalized symmetric superpositions of each orbit, expressed in the
/// enumerate_configs basis.
Eigen::SparseMatrix<double> symmetrizer(size_t n_plaquettes, const std::vector<Orbit> &basis);

/// Reference matrices for N = 4, 6, 8 (in the orbit ordering above), if known.
std::optional<Eigen::MatrixXd> tabulated_effective_hamiltonian(size_t n_plaquettes, double j, double lambda);

struct Discrepancy {
    size_t row;
    size_t col;
    std::string row_label;
    std::string col_label;
    double tabulated;
    double computed;
    double oracle;
    bool confirmed;
};

struct ReductionReport {
    size_t n_plaquettes;
    size_t n_configs;
    size_t n_orbits;
    size_t qubits;
    std::vector<std::string> basis_labels;
    std::vector<Discrepancy> discrepancies;

    nlohmann::json to_json() const;
};

/// ceil(log2(d)), with a minimum of one qubit.
size_t qubits_for_dimension(size_t dim);

/// Builds the report, comparing against the tabulated matrix (when known) and
/// adjudicating every differing entry with the config-space projection.
ReductionReport reduction_report(size_t n_plaquettes, double j = 1.0, double lambda = 1.0);

}  // namespace rksim

#endif
