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

#ifndef RKSIM_LATTICE_H
#define RKSIM_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rksim {

/// Periodic two-leg ladder with N plaquettes and 3N link spins.
///
/// Links are indexed (bottom_1..bottom_N, top_1..top_N, rung_1..rung_N).
/// Plaquette p (1-based) is bounded by top_p, rung_{p+1}, bottom_p and
/// rung_p, read clockwise starting from the top link. Column x hosts rung_x
/// and the two vertices (x,1) and (x,2); bottom_x and top_x leave column x
/// towards column x+1.
class LadderGeometry {
   public:
    explicit LadderGeometry(size_t n_plaquettes);

    size_t n_plaquettes() const {
        return n_;
    }
    size_t num_links() const {
        return 3 * n_;
    }

    size_t bottom_link(size_t p) const;
    size_t top_link(size_t p) const;
    size_t rung_link(size_t x) const;

    /// Next / previous plaquette (or column) around the ring, 1-based.
    size_t next(size_t p) const;
    size_t prev(size_t p) const;

    /// Link indices of plaquette p in clockwise order (top, right rung, bottom, left rung).
    std::array<size_t, 4> plaquette_links(size_t p) const;

    bool operator==(const LadderGeometry &) const = default;

   private:
    void check_plaquette(size_t p) const;
    size_t n_;
};

/// Product state of all link spins. Bit set means spin up; on leg links spin up
/// is the right-pointing arrow.
class SpinState {
   public:
    SpinState(LadderGeometry geometry, std::uint64_t bits);

    const LadderGeometry &geometry() const {
        return geometry_;
    }
    std::uint64_t bits() const {
        return bits_;
    }
    bool spin_up(size_t link) const {
        return (bits_ >> link) & 1;
    }
    SpinState with_link_flipped(size_t link) const;

    std::string str() const;

    bool operator==(const SpinState &) const = default;
    auto operator<=>(const SpinState &other) const {
        return bits_ <=> other.bits_;
    }

   private:
    LadderGeometry geometry_;
    std::uint64_t bits_;
};

enum class PlaquetteClass { Vortex, Antivortex, Blocked };

const char *plaquette_class_name(PlaquetteClass c);

/// Eigenvalues of the vertex gauge generators, ordered (1,1), (1,2), (2,1), (2,2), ...
struct GaussCharges {
    std::vector<double> charges;

    bool all_zero(double tolerance = 1e-12) const;
};

/// Alternating antivortex/vortex state with plaquette 1 an antivortex. Requires even N.
SpinState build_reference_state(const LadderGeometry &geometry);

PlaquetteClass classify_plaquette(const SpinState &state, size_t p);

/// Ring exchange on plaquette p. Flippable plaquettes have their four spins inverted;
/// blocked plaquettes are annihilated (std::nullopt).
std::optional<SpinState> apply_ring_exchange(const SpinState &state, size_t p);

GaussCharges gauss_charges(const SpinState &state);

/// Number of vortex or antivortex plaquettes; the diagonal value of the F operator.
size_t flippable_count(const SpinState &state);

/// Breadth-first closure under ring exchange, sorted by bit pattern.
std::vector<SpinState> reachable_states(const SpinState &start);

/// Plaquettes carrying the opposite flippable chirality to `reference`, as a
/// width-N mask (bit p-1 for plaquette p).
std::uint32_t flipped_plaquettes(const SpinState &state, const SpinState &reference);

/// RK Hamiltonian restricted to `states`: diagonal lambda * flippable_count and
/// -j between states connected by one ring exchange.
Eigen::MatrixXd spin_hamiltonian(const std::vector<SpinState> &states, double j, double lambda);

}  // namespace rksim

#endif
