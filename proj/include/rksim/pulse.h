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

#ifndef RKSIM_PULSE_H
#define RKSIM_PULSE_H

#include "json.hpp"

namespace rksim {

/// Gaussian flat-top cross-resonance pulse calibrated for R_ZX(pi/2).
/// Times are in device samples (dt).
struct PulseCalibration {
    double amplitude = 0.25;
    double width = 400.0;
    double sigma = 64.0;
    double n_sigma = 2.0;

    /// Throws std::invalid_argument unless 0 < amplitude <= 1, width >= 0, sigma > 0, n_sigma > 0.
    void validate() const;

    /// sigma * sqrt(2 pi) * erf(n_sigma): area of the Gaussian flanks per unit amplitude.
    double flank_area() const;
    double area() const;
    double duration() const;

    bool operator==(const PulseCalibration &) const = default;
};

struct PulseParams {
    double amplitude;
    double width;
    double area;
    double duration;
};

/// Pulse realizing R_ZX(theta), 0 < theta <= pi/2, by scaling the calibrated area
/// linearly in theta. The flat-top width absorbs the change until it reaches zero,
/// after which the amplitude is reduced.
PulseParams scale_pulse(const PulseCalibration &cal, double theta);

/// duration(theta) / duration(pi/2).
double pulse_duration_ratio(const PulseCalibration &cal, double theta);

void to_json(nlohmann::json &j, const PulseCalibration &cal);
void from_json(const nlohmann::json &j, PulseCalibration &cal);

}  // namespace rksim

#endif
