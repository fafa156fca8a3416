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

#include "rksim/config.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace rksim {

namespace {

using nlohmann::json;

void reject_unknown(const json &j, const std::string &path, std::initializer_list<const char *> known) {
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    for (const auto &[key, value] : j.items()) {
        bool found = std::any_of(known.begin(), known.end(), [&](const char *k) {
            return key == k;
        });
        if (!found) {
            throw ConfigError(path + "." + key, "unknown field");
        }
    }
}

template <typename T>
void read(const json &j, const char *key, const std::string &path, T &out) {
    if (!j.contains(key)) {
        return;
    }
    const auto &v = j.at(key);
    std::string where = path + "." + key;
    if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) {
            throw ConfigError(where, "expected a number");
        }
        out = v.get<double>();
    } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
            throw ConfigError(where, "expected a non-negative integer");
        }
        out = v.get<T>();
    } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) {
            throw ConfigError(where, "expected a string");
        }
        out = v.get<std::string>();
    } else {
        if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const json &e) {
                return e.is_string();
            })) {
            throw ConfigError(where, "expected an array of strings");
        }
        out = v.get<T>();
    }
}

}  // namespace

size_t observable_distance(const std::string &name) {
    if (name == "F") {
        return 0;
    }
    if (name.size() >= 2 && name[0] == 'C' && std::all_of(name.begin() + 1, name.end(), [](char c) {
            return c >= '0' && c <= '9';
        })) {
        size_t r = std::stoul(name.substr(1));
        if (r >= 1) {
            return r;
        }
    }
    throw std::invalid_argument("unknown observable '" + name + "' (expected F or C<r>)");
}

NoiseModel noise_from_json(const json &j, const std::string &path) {
    reject_unknown(j, path, {"p1", "p2", "p_readout", "shots", "pulse"});
    NoiseModel n;
    read(j, "p1", path, n.p1);
    read(j, "p2", path, n.p2);
    read(j, "p_readout", path, n.p_readout);
    read(j, "shots", path, n.shots);
    if (j.contains("pulse")) {
        std::string pp = path + ".pulse";
        const auto &pj = j.at("pulse");
        reject_unknown(pj, pp, {"amplitude", "width", "sigma", "n_sigma"});
        read(pj, "amplitude", pp, n.pulse.amplitude);
        read(pj, "width", pp, n.pulse.width);
        read(pj, "sigma", pp, n.pulse.sigma);
        read(pj, "n_sigma", pp, n.pulse.n_sigma);
        try {
            n.pulse.validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(pp, e.what());
        }
    }
    for (auto [name, p] : {std::pair{"p1", n.p1}, {"p2", n.p2}, {"p_readout", n.p_readout}}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError(path + "." + name, "probability must lie in [0, 1]");
        }
    }
    if (n.shots < 1) {
        throw ConfigError(path + ".shots", "must be >= 1");
    }
    return n;
}

void RunConfig::validate() const {
    if (n_plaquettes < 2) {
        throw ConfigError("n_plaquettes", "must be >= 2");
    }
    if (n_plaquettes > kMaxConfigPlaquettes) {
        throw ConfigError("n_plaquettes", "must be <= " + std::to_string(kMaxConfigPlaquettes));
    }
    if (!std::isfinite(lambda)) {
        throw ConfigError("lambda", "must be finite");
    }
    if (!std::isfinite(j_coupling)) {
        throw ConfigError("j_coupling", "must be finite");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("dt", "must be > 0");
    }
    if (!(t_max >= dt) || !std::isfinite(t_max)) {
        throw ConfigError("t_max", "must be >= dt");
    }
    if (backends.empty()) {
        throw ConfigError("backends", "at least one backend is required");
    }
    std::set<std::string> seen;
    for (size_t k = 0; k < backends.size(); k++) {
        const auto &b = backends[k];
        if (b != "exact" && b != "ideal" && b != "noisy") {
            throw ConfigError("backends[" + std::to_string(k) + "]", "unknown backend '" + b + "'");
        }
        if (!seen.insert(b).second) {
            throw ConfigError("backends[" + std::to_string(k) + "]", "duplicate backend '" + b + "'");
        }
    }
    if (observables.empty()) {
        throw ConfigError("observables", "at least one observable is required");
    }
    for (size_t k = 0; k < observables.size(); k++) {
        std::string where = "observables[" + std::to_string(k) + "]";
        size_t r;
        try {
            r = observable_distance(observables[k]);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(where, e.what());
        }
        if (r > n_plaquettes / 2) {
            throw ConfigError(where, "correlation distance exceeds N/2");
        }
    }
    for (auto [name, p] : {std::pair{"p1", noise.p1}, {"p2", noise.p2}, {"p_readout", noise.p_readout}}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError(std::string("noise.") + name, "probability must lie in [0, 1]");
        }
    }
    if (noise.shots < 1) {
        throw ConfigError("noise.shots", "must be >= 1");
    }
    try {
        noise.pulse.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError("noise.pulse", e.what());
    }
}

json RunConfig::to_json() const {
    json noise_json;
    rksim::to_json(noise_json, noise);
    return json{
        {"n_plaquettes", n_plaquettes},
        {"lambda", lambda},
        {"j_coupling", j_coupling},
        {"dt", dt},
        {"t_max", t_max},
        {"trotter_mode", trotter_mode_name(trotter_mode)},
        {"backends", backends},
        {"noise", noise_json},
        {"observables", observables},
        {"seed", seed},
        {"output_path", output_path},
    };
}

RunConfig RunConfig::from_json(const json &j) {
    const std::string root = "config";
    RunConfig c;
    auto strip = [](const ConfigError &e) {
        // Paths are reported relative to the config root.
        std::string p = e.path();
        return p.rfind("config.", 0) == 0 ? p.substr(7) : p;
    };
    try {
        reject_unknown(j, root,
                       {"n_plaquettes", "lambda", "j_coupling", "dt", "t_max", "trotter_mode", "backends", "noise",
                        "observables", "seed", "output_path"});
        read(j, "n_plaquettes", root, c.n_plaquettes);
        read(j, "lambda", root, c.lambda);
        read(j, "j_coupling", root, c.j_coupling);
        read(j, "dt", root, c.dt);
        read(j, "t_max", root, c.t_max);
        if (j.contains("trotter_mode")) {
            std::string mode;
            read(j, "trotter_mode", root, mode);
            try {
                c.trotter_mode = parse_trotter_mode(mode);
            } catch (const std::invalid_argument &e) {
                throw ConfigError(root + ".trotter_mode", e.what());
            }
        }
        read(j, "backends", root, c.backends);
        read(j, "observables", root, c.observables);
        read(j, "seed", root, c.seed);
        read(j, "output_path", root, c.output_path);
        if (j.contains("noise")) {
            c.noise = noise_from_json(j.at("noise"), root + ".noise");
        }
    } catch (const ConfigError &e) {
        std::string msg = e.what();
        throw ConfigError(strip(e), msg.substr(msg.find(": ") + 2));
    }
    c.validate();
    return c;
}

}  // namespace rksim
