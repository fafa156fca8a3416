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

// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.h"
#include "rksim/commands.h"
#include "rksim/dynamics.h"
#include "rksim/fidelity.h"
#include "rksim/lattice.h"
#include "rksim/observables.h"
#include "rksim/pauli.h"
#include "rksim/pulse.h"
#include "rksim/reduction.h"
#include "rksim/simulator.h"

using namespace rksim;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double x) {
    return format_double(x);
}

Outcome mapping_cardinalities() {
    auto start = std::chrono::steady_clock::now();
    const std::map<size_t, std::pair<size_t, size_t>> expected{{4, {7, 3}}, {6, {18, 5}}, {8, {47, 8}}};
    bool ok = true;
    std::ostringstream d;
    for (auto [n, counts] : expected) {
        size_t reachable = reachable_states(build_reference_state(LadderGeometry(n))).size();
        size_t configs = enumerate_configs(n).size();
        size_t orbits = orbit_decompose(n).size();
        ok &= reachable == counts.first && configs == counts.first && orbits == counts.second;
        d << "N=" << n << ": " << reachable << "/" << configs << "/" << orbits << "; ";
    }
    double t = seconds_since(start);
    ok &= t < 1.0;
    d << "time " << fmt(t) << "s";
    return {ok, d.str()};
}

Outcome tabulated_matrices() {
    auto h4 = build_effective_hamiltonian(4, 1.0, 1.0).matrix;
    double err4 = (h4 - *tabulated_effective_hamiltonian(4, 1.0, 1.0)).cwiseAbs().maxCoeff();
    auto h8 = build_effective_hamiltonian(8, 1.0, 1.0).matrix;
    auto t8 = *tabulated_effective_hamiltonian(8, 1.0, 1.0);
    auto report = reduction_report(8);
    bool ok = err4 <= 1e-12;
    size_t unflagged = 0;
    for (Eigen::Index a = 0; a < h8.rows(); a++) {
        for (Eigen::Index b = a; b < h8.cols(); b++) {
            if (std::abs(h8(a, b) - t8(a, b)) <= 1e-12) {
                continue;
            }
            bool flagged = false;
            for (const auto &d : report.discrepancies) {
                flagged |= d.row == static_cast<size_t>(a) && d.col == static_cast<size_t>(b) && d.confirmed &&
                           std::abs(d.oracle - h8(a, b)) <= 1e-10;
            }
            unflagged += flagged ? 0 : 1;
        }
    }
    ok &= unflagged == 0;
    return {ok, "N=4 max error " + fmt(err4) + "; N=8 discrepancies " + std::to_string(report.discrepancies.size()) +
                    " (unflagged " + std::to_string(unflagged) + ")"};
}

Outcome six_plaquette_decomposition() {
    const std::map<std::string, double> printed{
        {"III", 2.25},  {"IIX", -0.612}, {"IIZ", 0.75},  {"IXI", -0.35},  {"IXX", -0.5},  {"IXZ", 0.35},
        {"IYY", -0.5},  {"IZI", 1.0},    {"IZX", -0.612}, {"IZZ", 0.5},   {"XXI", -0.43}, {"XXZ", -0.43},
        {"YYI", -0.43}, {"YYZ", -0.43},  {"ZII", 1.5},   {"ZIX", -0.612}, {"ZXI", -0.35}, {"ZXX", -0.5},
        {"ZXZ", 0.35},  {"ZYY", -0.5},   {"ZZI", 0.25},  {"ZZX", -0.612}, {"ZZZ", -0.25},
    };
    auto d = decompose(embed(build_effective_hamiltonian(6, 1.0, 1.0)), 1e-10);
    std::map<std::string, double> got;
    for (const auto &t : d.terms) {
        got[t.string.str()] = t.coefficient;
    }
    double worst = 0.0;
    bool all_present = true;
    for (const auto &[s, c] : printed) {
        if (!got.count(s)) {
            all_present = false;
            continue;
        }
        worst = std::max(worst, std::abs(got[s] - c));
    }
    bool ok = d.terms.size() == 23 && all_present && worst <= 0.005;
    return {ok, std::to_string(d.terms.size()) + " terms; max |coefficient - printed| " + fmt(worst)};
}

Outcome table_counts() {
    auto start = std::chrono::steady_clock::now();
    const std::map<size_t, std::array<size_t, 3>> expected{{4, {7, 6, 0}}, {6, {23, 48, 14}}, {8, {26, 64, 20}}};
    bool ok = true;
    std::ostringstream d;
    for (auto [n, want] : expected) {
        auto native = cmd_synth(n, 1.0, 0.1, TrotterMode::Native);
        auto scaled = cmd_synth(n, 1.0, 0.1, TrotterMode::Scaled);
        std::array<size_t, 3> got{native.n_terms, native.counts.cnot_native, scaled.counts.cnot_native};
        ok &= got == want;
        d << "N=" << n << ": terms " << got[0] << " native " << got[1] << " scaled " << got[2];
        if (got != want) {
            d << " (expected " << want[0] << "/" << want[1] << "/" << want[2] << ")";
        }
        d << "; ";
    }
    double t = seconds_since(start);
    ok &= t < 1.0;
    d << "time " << fmt(t) << "s";
    return {ok, d.str()};
}

Outcome dynamics_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::vector<double> times;
    for (size_t k = 0; k <= grid_steps(0.1, 10.0); k++) {
        times.push_back(0.1 * static_cast<double>(k));
    }
    double worst_config = 0.0;
    double worst_spin = 0.0;
    for (size_t n = 2; n <= 8; n++) {
        for (double lambda : {0.0, 0.5, 1.0}) {
            auto h = build_effective_hamiltonian(n, 1.0, lambda);
            auto f = flippable_values(h.basis);
            auto c = correlation_values(h.basis, n, 1);
            ExactEvolver evolver(h.matrix);
            Eigen::VectorXcd psi0 = Eigen::VectorXcd::Unit(static_cast<Eigen::Index>(h.dim()), 0);
            std::vector<double> rf, rc;
            for (double t : times) {
                auto probs = probabilities(evolver.evolve(psi0, t));
                rf.push_back(expect_diagonal(probs, f).value);
                rc.push_back(expect_diagonal(probs, c).value);
            }
            auto config = oracle::config_space(n, lambda, times);
            for (size_t k = 0; k < times.size(); k++) {
                worst_config = std::max({worst_config, std::abs(rf[k] - config.f[k]), std::abs(rc[k] - config.c1[k])});
            }
            if (n % 2 == 0 && n <= 6) {
                auto spin = oracle::spin_model(n, lambda, times);
                for (size_t k = 0; k < times.size(); k++) {
                    worst_spin = std::max({worst_spin, std::abs(rf[k] - spin.f[k]), std::abs(rc[k] - spin.c1[k])});
                }
            }
        }
    }
    double t = seconds_since(start);
    bool ok = worst_config <= 1e-10 && worst_spin <= 1e-10 && t < 30.0;
    return {ok, "max deviation config " + fmt(worst_config) + ", spin " + fmt(worst_spin) + "; time " + fmt(t) + "s"};
}

Outcome trotter_order() {
    double e20 = trotter_error(4, 1.0, 0.2, 10.0);
    double e10 = trotter_error(4, 1.0, 0.1, 10.0);
    double factor = e20 / e10;
    return {factor >= 1.5 && factor <= 2.8,
            "error(0.2) " + fmt(e20) + ", error(0.1) " + fmt(e10) + ", reduction factor " + fmt(factor)};
}

Outcome seventeen_plaquettes() {
    auto start = std::chrono::steady_clock::now();
    size_t orbits = orbit_decompose(17).size();
    double t = seconds_since(start);
    bool ok = orbits > 128 && orbits <= 256 && qubits_for_dimension(orbits) == 8 && t < 10.0;
    return {ok, std::to_string(orbits) + " orbits, " + std::to_string(qubits_for_dimension(orbits)) + " qubits; time " +
                    fmt(t) + "s"};
}

Outcome pulse_model() {
    PulseCalibration cal;
    double worst = 0.0;
    bool monotone = true;
    double previous = 0.0;
    for (int k = 1; k <= 32; k++) {
        double theta = k * kPi / 64;
        auto p = scale_pulse(cal, theta);
        double formula = std::abs(p.amplitude) * p.width +
                         std::abs(p.amplitude) * cal.sigma * std::sqrt(2 * kPi) * std::erf(cal.n_sigma);
        worst = std::max({worst, std::abs(formula - p.area), std::abs(p.area - theta / (kPi / 2) * cal.area())});
        double r = pulse_duration_ratio(cal, theta);
        monotone &= r >= previous;
        previous = r;
    }
    double full = pulse_duration_ratio(cal, kPi / 2);
    bool ok = worst <= 1e-12 && monotone && std::abs(full - 1.0) <= 1e-15;
    return {ok, "max area error " + fmt(worst) + "; ratio(pi/2) " + fmt(full) + "; monotone " +
                    (monotone ? "yes" : "no")};
}

Outcome scaled_gate_advantage() {
    auto start = std::chrono::steady_clock::now();
    NoiseModel noise;
    double gate_margin = 1.0;
    for (int k = 1; k <= 32; k++) {
        auto f = compare_rzz_fidelity(k * kPi / 64, noise);
        gate_margin = std::min(gate_margin, f.scaled - f.native);
    }
    double state_margin = 1.0;
    const double dt = 0.1;
    for (size_t n : {4, 6, 8}) {
        auto d = decompose(embed(build_effective_hamiltonian(n, 1.0, 1.0)));
        Circuit native = synthesize_trotter(d, dt, 1, TrotterMode::Native);
        Circuit scaled = synthesize_trotter(d, dt, 1, TrotterMode::Scaled);
        size_t q = native.qubits();
        Eigen::Index dim = Eigen::Index{1} << q;
        Eigen::MatrixXcd rho_n = Eigen::MatrixXcd::Zero(dim, dim);
        rho_n(0, 0) = 1.0;
        Eigen::MatrixXcd rho_s = rho_n;
        StateVector psi = StateVector::basis(q);
        for (size_t k = 1; k <= grid_steps(dt, 5.0); k++) {
            propagate_noisy(rho_n, q, native, noise);
            propagate_noisy(rho_s, q, scaled, noise);
            psi = run_ideal(native, psi);
            const auto &v = psi.amplitudes();
            double f_native = (v.adjoint() * rho_n * v)(0, 0).real();
            double f_scaled = (v.adjoint() * rho_s * v)(0, 0).real();
            state_margin = std::min(state_margin, f_scaled - f_native);
        }
    }
    double t = seconds_since(start);
    bool ok = gate_margin >= 0.0 && state_margin >= 0.0 && t < 60.0;
    return {ok, "min F_avg(scaled)-F_avg(native) " + fmt(gate_margin) + "; min state fidelity gap " +
                    fmt(state_margin) + "; time " + fmt(t) + "s"};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("rksim_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    RunConfig config;
    config.n_plaquettes = 6;
    config.dt = 0.1;
    config.t_max = 3.0;
    config.backends = {"exact", "ideal", "noisy"};
    config.observables = {"F", "C1"};
    config.seed = 20260315;
    {
        std::ofstream(dir / "config.json") << config.to_json().dump(2);
    }
    auto invoke = [&](const std::string &out) {
        std::string cmd = std::string("\"") + RKSIM_CLI_PATH + "\" run --config \"" + (dir / "config.json").string() +
                          "\" --out \"" + (dir / out).string() + "\"";
        return std::system(cmd.c_str());
    };
    auto slurp = [&](const std::string &name) {
        std::ifstream in(dir / name, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    int rc1 = invoke("a.csv");
    int rc2 = invoke("b.csv");
    std::string a = slurp("a.csv");
    std::string b = slurp("b.csv");
    fs::remove_all(dir);
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    return {ok, "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) + "; " + std::to_string(a.size()) +
                    " bytes; identical " + (a == b ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"mapping cardinalities", mapping_cardinalities},
        {"tabulated effective Hamiltonians", tabulated_matrices},
        {"N=6 Pauli decomposition", six_plaquette_decomposition},
        {"term and CNOT counts", table_counts},
        {"dynamics equivalence", dynamics_equivalence},
        {"Trotter order", trotter_order},
        {"17 plaquettes on 8 qubits", seventeen_plaquettes},
        {"pulse area model", pulse_model},
        {"scaled-gate advantage", scaled_gate_advantage},
        {"determinism", determinism},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
