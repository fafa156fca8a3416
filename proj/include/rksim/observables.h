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

#ifndef RKSIM_OBSERVABLES_H
#define RKSIM_OBSERVABLES_H

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rksim/reduction.h"
#include "rksim/simulator.h"

namespace rksim {

/// Expectation value restricted to the physical (first d) basis states.
/// `discard_fraction` is the probability mass or shot fraction on padding states;
/// `std_error` is the multinomial standard error for sampled estimates, else 0.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    double discard_fraction = 0.0;
};

/// Flippable-plaquette count of each effective basis state.
std::vector<double> flippable_values(const std::vector<Orbit> &basis);

/// Family value of C_r: (1/|F_a|) sum_{S in F_a} f_p(S) f_{p+r}(S). Throws
/// std::out_of_range unless 1 <= r <= N/2, and std::logic_error if the value
/// depends on the anchor plaquette p.
std::vector<double> correlation_values(const std::vector<Orbit> &basis, size_t n_plaquettes, size_t r);

/// Post-selected average of a diagonal observable. `probs` may be longer than
/// `values`; the excess entries are discarded and the rest renormalized.
Estimate expect_diagonal(std::span<const double> probs, std::span<const double> values);
Estimate expect_diagonal(const Counts &counts, std::span<const double> values);

std::vector<double> probabilities(const Eigen::VectorXcd &amplitudes);

Estimate expect_F(std::span<const double> probs, const std::vector<Orbit> &basis);
Estimate expect_F(const Counts &counts, const std::vector<Orbit> &basis);
Estimate expect_Cr(std::span<const double> probs, const std::vector<Orbit> &basis, size_t n_plaquettes, size_t r);
Estimate expect_Cr(const Counts &counts, const std::vector<Orbit> &basis, size_t n_plaquettes, size_t r);

}  // namespace rksim

#endif
