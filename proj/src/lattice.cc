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

#include "rksim/lattice.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rksim {

LadderGeometry::LadderGeometry(size_t n_plaquettes) : n_(n_plaquettes) {
    if (n_ < 2) {
        throw std::invalid_argument("ladder needs at least 2 plaquettes");
    }
    if (3 * n_ > 64) {
        throw std::invalid_argument("spin states are limited to 64 links (N <= 21)");
    }
}

void LadderGeometry::check_plaquette(size_t p) const {
    if (p < 1 || p > n_) {
        throw std::out_of_range("plaquette index " + std::to_string(p) + " outside 1.." + std::to_string(n_));
    }
}

size_t LadderGeometry::bottom_link(size_t p) const {
    check_plaquette(p);
    return p - 1;
}

size_t LadderGeometry::top_link(size_t p) const {
    check_plaquette(p);
    return n_ + p - 1;
}

size_t LadderGeometry::rung_link(size_t x) const {
    check_plaquette(x);
    return 2 * n_ + x - 1;
}

size_t LadderGeometry::next(size_t p) const {
    check_plaquette(p);
    return p % n_ + 1;
}

size_t LadderGeometry::prev(size_t p) const {
    check_plaquette(p);
    return p == 1 ? n_ : p - 1;
}

std::array<size_t, 4> LadderGeometry::plaquette_links(size_t p) const {
    return {top_link(p), rung_link(next(p)), bottom_link(p), rung_link(p)};
}

SpinState::SpinState(LadderGeometry geometry, std::uint64_t bits) : geometry_(geometry), bits_(bits) {
    size_t width = geometry_.num_links();
    if (width < 64 && (bits_ >> width) != 0) {
        throw std::invalid_argument("spin state has bits beyond the 3N links");
    }
}

SpinState SpinState::with_link_flipped(size_t link) const {
    if (link >= geometry_.num_links()) {
        throw std::out_of_range("link index out of range");
    }
    return SpinState(geometry_, bits_ ^ (std::uint64_t{1} << link));
}

std::string SpinState::str() const {
    // Legs rendered with arrows, rungs with up/down, grouped as bottom|top|rung.
    std::string out;
    size_t n = geometry_.n_plaquettes();
    for (size_t k = 0; k < 3 * n; k++) {
        if (k == n || k == 2 * n) {
            out += '|';
        }
        bool up = spin_up(k);
        if (k < 2 * n) {
            out += up ? '>' : '<';
        } else {
            out += up ? '^' : 'v';
        }
    }
    return out;
}

const char *plaquette_class_name(PlaquetteClass c) {
    switch (c) {
        case PlaquetteClass::Vortex:
            return "V";
        case PlaquetteClass::Antivortex:
            return "A";
        case PlaquetteClass::Blocked:
            return "B";
    }
    return "?";
}

bool GaussCharges::all_zero(double tolerance) const {
    return std::all_of(charges.begin(), charges.end(), [&](double q) {
        return std::abs(q) <= tolerance;
    });
}

SpinState build_reference_state(const LadderGeometry &geometry) {
    size_t n = geometry.n_plaquettes();
    if (n % 2 != 0) {
        throw std::invalid_argument("reference state requires even plaquette count");
    }
    std::uint64_t bits = 0;
    for (size_t p = 1; p <= n; p++) {
        bool vortex = p % 2 == 0;
        // Vortex reads (->, down, <-, up) clockwise from the top link; antivortex is its inverse.
        if (vortex) {
            bits |= std::uint64_t{1} << geometry.top_link(p);
            bits |= std::uint64_t{1} << geometry.rung_link(p);
        } else {
            bits |= std::uint64_t{1} << geometry.bottom_link(p);
        }
    }
    return SpinState(geometry, bits);
}

PlaquetteClass classify_plaquette(const SpinState &state, size_t p) {
    auto links = state.geometry().plaquette_links(p);
    unsigned pattern = 0;
    for (size_t k = 0; k < 4; k++) {
        pattern = (pattern << 1) | (state.spin_up(links[k]) ? 1u : 0u);
    }
    if (pattern == 0b1001) {
        return PlaquetteClass::Vortex;
    }
    if (pattern == 0b0110) {
        return PlaquetteClass::Antivortex;
    }
    return PlaquetteClass::Blocked;
}

std::optional<SpinState> apply_ring_exchange(const SpinState &state, size_t p) {
    if (classify_plaquette(state, p) == PlaquetteClass::Blocked) {
        return std::nullopt;
    }
    std::uint64_t mask = 0;
    for (size_t link : state.geometry().plaquette_links(p)) {
        mask |= std::uint64_t{1} << link;
    }
    return SpinState(state.geometry(), state.bits() ^ mask);
}

GaussCharges gauss_charges(const SpinState &state) {
    const auto &g = state.geometry();
    size_t n = g.n_plaquettes();
    auto sz = [&](size_t link) {
        return state.spin_up(link) ? 0.5 : -0.5;
    };
    GaussCharges result;
    result.charges.reserve(2 * n);
    for (size_t x = 1; x <= n; x++) {
        // Virtual links contribute +-1/2, alternating with column parity; the top leg
        // carries the opposite sign of the bottom leg in the same column.
        double virtual_bottom = x % 2 == 0 ? 0.5 : -0.5;
        double virtual_top = -virtual_bottom;
        double rung = sz(g.rung_link(x));
        double bottom = sz(g.bottom_link(x)) - sz(g.bottom_link(g.prev(x))) + rung + virtual_bottom;
        double top = sz(g.top_link(x)) - sz(g.top_link(g.prev(x))) - rung + virtual_top;
        result.charges.push_back(bottom);
        result.charges.push_back(top);
    }
    return result;
}

size_t flippable_count(const SpinState &state) {
    size_t count = 0;
    for (size_t p = 1; p <= state.geometry().n_plaquettes(); p++) {
        if (classify_plaquette(state, p) != PlaquetteClass::Blocked) {
            count++;
        }
    }
    return count;
}

std::vector<SpinState> reachable_states(const SpinState &start) {
    size_t n = start.geometry().n_plaquettes();
    std::unordered_set<std::uint64_t> seen{start.bits()};
    std::deque<SpinState> queue{start};
    std::vector<SpinState> out;
    while (!queue.empty()) {
        SpinState s = queue.front();
        queue.pop_front();
        out.push_back(s);
        for (size_t p = 1; p <= n; p++) {
            if (auto t = apply_ring_exchange(s, p); t && seen.insert(t->bits()).second) {
                queue.push_back(*t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t flipped_plaquettes(const SpinState &state, const SpinState &reference) {
    if (!(state.geometry() == reference.geometry())) {
        throw std::invalid_argument("states belong to different ladders");
    }
    std::uint32_t mask = 0;
    for (size_t p = 1; p <= state.geometry().n_plaquettes(); p++) {
        auto ref = classify_plaquette(reference, p);
        auto cur = classify_plaquette(state, p);
        if (ref != PlaquetteClass::Blocked && cur != PlaquetteClass::Blocked && cur != ref) {
            mask |= std::uint32_t{1} << (p - 1);
        }
    }
    return mask;
}

Eigen::MatrixXd spin_hamiltonian(const std::vector<SpinState> &states, double j, double lambda) {
    std::unordered_map<std::uint64_t, Eigen::Index> index;
    for (size_t k = 0; k < states.size(); k++) {
        index[states[k].bits()] = static_cast<Eigen::Index>(k);
    }
    auto dim = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index a = 0; a < dim; a++) {
        const auto &s = states[a];
        h(a, a) = lambda * static_cast<double>(flippable_count(s));
        for (size_t p = 1; p <= s.geometry().n_plaquettes(); p++) {
            auto t = apply_ring_exchange(s, p);
            if (!t) {
                continue;
            }
            auto it = index.find(t->bits());
            if (it == index.end()) {
                throw std::invalid_argument("state set is not closed under ring exchange");
            }
            h(a, it->second) -= j;
        }
    }
    return h;
}

}  // namespace rksim
