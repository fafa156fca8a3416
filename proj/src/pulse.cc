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

#include "rksim/pulse.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rksim {

void PulseCalibration::validate() const {
    if (!(amplitude > 0.0 && amplitude <= 1.0)) {
        throw std::invalid_argument("pulse amplitude must be in (0, 1]");
    }
    if (!(width >= 0.0)) {
        throw std::invalid_argument("pulse width must be >= 0");
    }
    if (!(sigma > 0.0) || !(n_sigma > 0.0)) {
        throw std::invalid_argument("pulse sigma and n_sigma must be positive");
    }
}

double PulseCalibration::flank_area() const {
    return sigma * std::sqrt(2.0 * std::numbers::pi) * std::erf(n_sigma);
}

double PulseCalibration::area() const {
    return std::abs(amplitude) * width + std::abs(amplitude) * flank_area();
}

double PulseCalibration::duration() const {
    return width + 2.0 * n_sigma * sigma;
}

PulseParams scale_pulse(const PulseCalibration &cal, double theta) {
    cal.validate();
    constexpr double kQuarterTurn = std::numbers::pi / 2.0;
    if (!(theta > 0.0) || theta > kQuarterTurn * (1.0 + 1e-12)) {
        throw std::invalid_argument("scaled pulse angle must be in (0, pi/2]");
    }
    double target = theta / kQuarterTurn * cal.area();
    double flank = cal.flank_area();
    double amp = std::abs(cal.amplitude);

    PulseParams out{};
    if (target > amp * flank) {
        out.amplitude = amp;
        out.width = target / amp - flank;
    } else {
        out.amplitude = target / flank;
        out.width = 0.0;
    }
    out.area = out.amplitude * out.width + out.amplitude * flank;
    out.duration = out.width + 2.0 * cal.n_sigma * cal.sigma;
    return out;
}

double pulse_duration_ratio(const PulseCalibration &cal, double theta) {
    return scale_pulse(cal, theta).duration / cal.duration();
}

void to_json(nlohmann::json &j, const PulseCalibration &cal) {
    j = nlohmann::json{
        {"amplitude", cal.amplitude},
        {"width", cal.width},
        {"sigma", cal.sigma},
        {"n_sigma", cal.n_sigma},
    };
}

void from_json(const nlohmann::json &j, PulseCalibration &cal) {
    j.at("amplitude").get_to(cal.amplitude);
    j.at("width").get_to(cal.width);
    j.at("sigma").get_to(cal.sigma);
    j.at("n_sigma").get_to(cal.n_sigma);
}

}  // namespace rksim
