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

#ifndef RKSIM_DYNAMICS_H
#define RKSIM_DYNAMICS_H

#include <cstddef>

#include <Eigen/Dense>

#include "rksim/circuits.h"
#include "rksim/reduction.h"

namespace rksim {

/// exp(-i H t) through a one-off eigendecomposition of a real symmetric H.
class ExactEvolver {
   public:
    explicit ExactEvolver(const Eigen::MatrixXd &h);

    Eigen::VectorXcd evolve(const Eigen::VectorXcd &psi0, double t) const;
    size_t dim() const {
        return static_cast<size_t>(eigenvalues_.size());
    }

   private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

/// exp(-i H t)|psi_0> in the d-dimensional effective basis.
Eigen::VectorXcd evolve_exact(const EffectiveHamiltonian &h, double t);

/// max over t in {0, dt, ..., t_max} of |<F>_trotter - <F>_exact| for J = 1,
/// starting from the reference state. The Trotter state is simulated ideally.
double trotter_error(size_t n_plaquettes, double lambda, double dt, double t_max,
                     TrotterMode mode = TrotterMode::Native);

/// Number of grid steps k with k*dt <= t_max (rounding to the nearest step).
size_t grid_steps(double dt, double t_max);

}  // namespace rksim

#endif
