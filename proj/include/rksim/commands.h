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

#ifndef RKSIM_COMMANDS_H
#define RKSIM_COMMANDS_H

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rksim/circuits.h"
#include "rksim/config.h"
#include "rksim/fidelity.h"
#include "rksim/pauli.h"
#include "rksim/reduction.h"

namespace rksim {

/// Largest ladder accepted by `cmd_verify`.
constexpr size_t kMaxVerifyPlaquettes = 20;
/// Largest even ladder cross-checked against the spin model.
constexpr size_t kMaxSpinPlaquettes = 12;

struct VerifyCheck {
    std::string name;
    /// "pass", "fail" or "skipped".
    std::string status;
    std::string detail;
};

struct VerifyResult {
    ReductionReport report;
    std::vector<VerifyCheck> checks;

    /// No failed check and every discrepancy confirmed by the config-space oracle.
    bool ok() const;
    nlohmann::json to_json() const;
};

VerifyResult cmd_verify(size_t n_plaquettes);

PauliDecomposition cmd_pauli(size_t n_plaquettes, double lambda, double j = 1.0, double threshold = 1e-10);

struct SynthResult {
    Circuit circuit;
    GateCounts counts;
    size_t n_terms;
};

/// `n_steps` Trotter steps of length `dt`.
SynthResult cmd_synth(size_t n_plaquettes, double lambda, double dt, TrotterMode mode, size_t n_steps = 1,
                      double j = 1.0);

struct TimeSeriesRow {
    double t;
    std::string backend;
    std::string observable;
    double value;
    double std_error;
    double discard_fraction;

    bool operator==(const TimeSeriesRow &) const = default;
};

struct TimeSeries {
    RunConfig config;
    /// Ordered by time step, then backend, then observable.
    std::vector<TimeSeriesRow> rows;

    std::string to_csv() const;
    nlohmann::json to_json() const;
    /// Gnuplot script plotting every (backend, observable) curve from `csv_path`.
    std::string gnuplot_script(const std::string &csv_path) const;
};

TimeSeries cmd_run(const RunConfig &config);

/// {k pi / 16 : k = 1..8}.
std::vector<double> default_theta_grid();

std::vector<RzzFidelity> cmd_fidelity(const std::vector<double> &thetas, const NoiseModel &noise);

std::string fidelity_csv(const std::vector<RzzFidelity> &rows);
nlohmann::json fidelity_json(const std::vector<RzzFidelity> &rows);

/// Worker cap: RKSIM_THREADS if set and positive, else the hardware concurrency.
size_t worker_limit();

/// Shortest round-trip decimal text of `x`.
std::string format_double(double x);

}  // namespace rksim

#endif
