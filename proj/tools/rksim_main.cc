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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rksim/commands.h"
#include "rksim/config.h"

using nlohmann::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Globals {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "csv";
};

void fail(int code, const std::string &kind, const std::string &message, const json &extra = json::object()) {
    json diag = {{"error", kind}, {"message", message}};
    diag.update(extra);
    std::cerr << diag.dump() << "\n";
    std::exit(code);
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw rksim::ConfigError("<file>", "cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw rksim::ConfigError("<file>", std::string("malformed JSON: ") + e.what());
    }
}

void write_text(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

int run_verify(const Globals &g, size_t n) {
    auto result = rksim::cmd_verify(n);
    write_text(dump(result.to_json()), g.out_path);
    if (!result.ok()) {
        fail(kCheckFailed, "verification_failed", "one or more checks failed", {{"checks", result.to_json()["checks"]}});
    }
    return kOk;
}

int run_pauli(const Globals &g, size_t n, double lambda, double j, double threshold) {
    auto d = rksim::cmd_pauli(n, lambda, j, threshold);
    if (g.format == "json") {
        json out = d.to_json();
        out["n_terms"] = d.terms.size();
        write_text(dump(out), g.out_path);
    } else {
        std::ostringstream csv;
        csv << "pauli,coefficient\n";
        for (const auto &t : d.terms) {
            csv << t.string.str() << ',' << rksim::format_double(t.coefficient) << '\n';
        }
        write_text(csv.str(), g.out_path);
    }
    return kOk;
}

int run_synth(const Globals &g, size_t n, double lambda, double j, double dt, const std::string &mode,
              size_t steps) {
    auto r = rksim::cmd_synth(n, lambda, dt, rksim::parse_trotter_mode(mode), steps, j);
    if (!g.out_path.empty()) {
        write_text(r.circuit.to_text(), g.out_path);
    }
    if (g.format == "json") {
        json out = r.counts.to_json();
        out["n_terms"] = r.n_terms;
        out["qubits"] = r.circuit.qubits();
        out["gates"] = r.circuit.gates().size();
        std::cout << dump(out);
    } else {
        std::cout << "n_terms,cnot_native,scaled_rzz,single_qubit\n"
                  << r.n_terms << ',' << r.counts.cnot_native << ',' << r.counts.scaled_rzz << ','
                  << r.counts.single_qubit << '\n';
    }
    return kOk;
}

int run_run(const Globals &g) {
    if (g.config_path.empty()) {
        throw rksim::ConfigError("<file>", "run requires --config");
    }
    auto config = rksim::RunConfig::from_json(read_json_file(g.config_path));
    if (g.seed) {
        config.seed = *g.seed;
    }
    if (!g.out_path.empty()) {
        config.output_path = g.out_path;
    }
    auto series = rksim::cmd_run(config);
    if (g.format == "json") {
        write_text(dump(series.to_json()), config.output_path);
    } else {
        write_text(series.to_csv(), config.output_path);
        if (!config.output_path.empty()) {
            write_text(series.gnuplot_script(config.output_path), config.output_path + ".gp");
        }
    }
    return kOk;
}

int run_fidelity(const Globals &g, std::vector<double> thetas, bool noiseless) {
    rksim::NoiseModel noise;
    if (!g.config_path.empty()) {
        json j = read_json_file(g.config_path);
        noise = j.contains("n_plaquettes") ? rksim::RunConfig::from_json(j).noise
                                           : rksim::noise_from_json(j, "noise");
    }
    if (noiseless) {
        noise = rksim::NoiseModel::noiseless();
    }
    if (thetas.empty()) {
        thetas = rksim::default_theta_grid();
    }
    auto rows = rksim::cmd_fidelity(thetas, noise);
    write_text(g.format == "json" ? dump(rksim::fidelity_json(rows)) : rksim::fidelity_csv(rows), g.out_path);
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"rksim: quantum simulation of the RK plaquette ladder"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--config", g.config_path, "JSON configuration file");
    app.add_option("--seed", g.seed, "Root seed (overrides the config)");
    app.add_option("--out", g.out_path, "Output path (default: stdout)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    size_t n = 0;
    double lambda = 1.0;
    double j = 1.0;

    auto *verify = app.add_subcommand("verify", "Cross-check the spin, config and effective models");
    verify->add_option("-n,--plaquettes", n, "Number of plaquettes")->required();

    double threshold = 1e-10;
    auto *pauli = app.add_subcommand("pauli", "Pauli decomposition of the effective Hamiltonian");
    pauli->add_option("-n,--plaquettes", n, "Number of plaquettes")->required();
    pauli->add_option("--lambda", lambda, "Potential strength");
    pauli->add_option("--j-coupling", j, "Ring-exchange strength");
    pauli->add_option("--threshold", threshold, "Drop coefficients below this magnitude");

    double dt = 0.1;
    std::string mode = "native";
    size_t steps = 1;
    auto *synth = app.add_subcommand("synth", "Synthesize a Trotter circuit and count gates");
    synth->add_option("-n,--plaquettes", n, "Number of plaquettes")->required();
    synth->add_option("--lambda", lambda, "Potential strength");
    synth->add_option("--j-coupling", j, "Ring-exchange strength");
    synth->add_option("--dt", dt, "Trotter step")->required();
    synth->add_option("--mode", mode, "Two-qubit gate style")->check(CLI::IsMember({"native", "scaled"}));
    synth->add_option("--steps", steps, "Number of Trotter steps");

    auto *run = app.add_subcommand("run", "Time evolution of observables from a run config");

    std::vector<double> thetas;
    bool noiseless = false;
    auto *fidelity = app.add_subcommand("fidelity", "Average gate fidelity of native vs scaled RZZ");
    fidelity->add_option("--theta", thetas, "Rotation angles (default k pi/16, k = 1..8)");
    fidelity->add_flag("--noiseless", noiseless, "Disable all noise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kBadInput;
    }

    try {
        if (*verify) {
            return run_verify(g, n);
        }
        if (*pauli) {
            return run_pauli(g, n, lambda, j, threshold);
        }
        if (*synth) {
            return run_synth(g, n, lambda, j, dt, mode, steps);
        }
        if (*run) {
            return run_run(g);
        }
        if (*fidelity) {
            return run_fidelity(g, thetas, noiseless);
        }
    } catch (const rksim::ConfigError &e) {
        fail(kBadInput, "invalid_config", e.what(), {{"path", e.path()}});
    } catch (const std::invalid_argument &e) {
        fail(kBadInput, "invalid_argument", e.what());
    } catch (const std::exception &e) {
        fail(kCheckFailed, "runtime_error", e.what());
    }
    return kOk;
}
