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

#ifndef RKSIM_CONFIG_H
#define RKSIM_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rksim/circuits.h"
#include "rksim/simulator.h"

namespace rksim {

/// Invalid configuration value, with the JSON path of the offending field.
class ConfigError : public std::invalid_argument {
   public:
    ConfigError(std::string path, const std::string &message)
        : std::invalid_argument(path + ": " + message), path_(std::move(path)) {
    }
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

struct RunConfig {
    size_t n_plaquettes = 4;
    double lambda = 1.0;
    double j_coupling = 1.0;
    double dt = 0.1;
    double t_max = 10.0;
    TrotterMode trotter_mode = TrotterMode::Scaled;
    /// Subset of {"exact", "ideal", "noisy"}.
    std::vector<std::string> backends = {"exact", "ideal"};
    NoiseModel noise;
    /// "F" and/or "C<r>" (e.g. "C1").
    std::vector<std::string> observables = {"F"};
    std::uint64_t seed = 0;
    std::string output_path;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    nlohmann::json to_json() const;
    /// Strict parse: unknown fields and wrong types are rejected.
    static RunConfig from_json(const nlohmann::json &j);

    bool operator==(const RunConfig &) const = default;
};

/// Strict parse of a noise model object; `path` prefixes error locations.
NoiseModel noise_from_json(const nlohmann::json &j, const std::string &path = "noise");

/// Correlation distance of an observable name "C<r>", or 0 for "F".
size_t observable_distance(const std::string &name);

}  // namespace rksim

#endif
